"""
Исключения топологических проверок.
"""


class TopologyError(Exception):
    """Базовое исключение приложения topology."""


class PreconditionError(TopologyError):
    """Вход не удовлетворяет условиям проверки: размерность, компактность, вид привязки."""
