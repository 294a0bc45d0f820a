"""
Исключения ядра полиномиальной арифметики.
"""


class PolyError(Exception):
    """Базовое исключение приложения polycore."""


class DimensionError(PolyError):
    """Несовпадение арности полинома и точки или индекс переменной вне диапазона."""


class DegenerateInputError(PolyError):
    """Вырожденный вход: нулевой полином, оба аргумента постоянны по переменной и т.п."""


class PolySyntaxError(PolyError):
    """Синтаксическая ошибка в тексте полинома.

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
