"""
Конфигурация приложения полуалгебраических множеств.
"""
from django.apps import AppConfig


class SemialgebraicConfig(AppConfig):
    """Конфигурация приложения semialgebraic."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'semialgebraic'
    verbose_name = 'Полуалгебраические множества'
