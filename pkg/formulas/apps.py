"""
Конфигурация приложения формул первого порядка.
"""
from django.apps import AppConfig


class FormulasConfig(AppConfig):
    """Конфигурация приложения formulas."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'formulas'
    verbose_name = 'Формулы и схемы предложений'
