"""
Конфигурация приложения цилиндрической алгебраической декомпозиции.
"""
from django.apps import AppConfig


class CadConfig(AppConfig):
    """Конфигурация приложения cad."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'cad'
    verbose_name = 'Цилиндрическая алгебраическая декомпозиция'
