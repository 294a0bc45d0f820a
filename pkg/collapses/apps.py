"""
Конфигурация приложения симплициальных стягиваний.
"""
from django.apps import AppConfig


class CollapsesConfig(AppConfig):
    """Конфигурация приложения collapses."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'collapses'
    verbose_name = 'Стягивания симплициальных комплексов'
