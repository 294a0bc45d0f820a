"""
Конфигурация приложения точной полиномиальной арифметики.
"""
from django.apps import AppConfig


class PolycoreConfig(AppConfig):
    """Конфигурация приложения polycore."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'polycore'
    verbose_name = 'Полиномы и алгебраические числа'
