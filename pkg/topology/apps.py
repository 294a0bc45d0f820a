"""
Конфигурация приложения топологических проверок.
"""
from django.apps import AppConfig


class TopologyConfig(AppConfig):
    """Конфигурация приложения topology."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'topology'
    verbose_name = 'Топологические проверки'
