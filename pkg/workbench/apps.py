"""
Конфигурация приложения командной строки.
"""
from django.apps import AppConfig


class WorkbenchConfig(AppConfig):
    """Конфигурация приложения workbench."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'workbench'
    verbose_name = 'Командная строка rcfw'
