"""
Исключения приложения формул.
"""


class FormulaError(Exception):
    """Базовое исключение приложения formulas."""


class FormulaSyntaxError(FormulaError):
    """Синтаксическая ошибка в s-выражении или инфиксной записи.

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

    @property
    def position(self) -> tuple[int, int]:
        return self.line, self.column


class UnboundVariableError(FormulaError):
    """Переменная не означена при вычислении бескванторной формулы."""


class UnsupportedSchemaError(FormulaError):
    """Схема не поддерживается: r >= 2, порог Нэша >= 2, m > n и т.п."""
