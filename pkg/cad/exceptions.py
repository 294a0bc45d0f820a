"""
Исключения ядра CAD.
"""


class CadError(Exception):
    """Базовое исключение приложения cad."""


class UnsupportedDimensionError(CadError):
    """Размерность вне поддерживаемого диапазона (CAD при n <= 3, смежность при n <= 2)."""


class CadCapacityError(CadError):
    """Превышен лимит по числу переменных или степени многочленов."""


class InconsistencyError(CadError):
    """Входные данные не согласованы с деревом: нет многочлена, разные пространства, свободные переменные."""
