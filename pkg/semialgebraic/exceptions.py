"""
Исключения описаний полуалгебраических множеств.
"""


class DescriptionError(Exception):
    """Базовое исключение приложения semialgebraic."""


class DescriptionSyntaxError(DescriptionError):
    """Синтаксическая ошибка в DSL множеств или в формате ParamPoint.

    Args:
        message: Описание ошибки
        line: Номер строки (с единицы)
        column: Номер столбца (с единицы)
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (строка {line}, столбец {column})")
        self.message = message
        self.line = line
        self.column = column


class ArityError(DescriptionError):
    """Арность многочлена или точки не совпадает с размерностью объемлющего пространства."""


class CapacityError(DescriptionError):
    """Сложность описания превышает запрошенные (p, q)."""


class SelectorRangeError(DescriptionError):
    """Селектор l вне диапазона [0, 2^(3^p))."""
