"""
Исключения приложения collapses.
"""


class ComplexError(Exception):
    """Базовое исключение приложения collapses."""


class ComplexSyntaxError(ComplexError):
    """Ошибка в записи комплекса или сертификата."""

    def __init__(self, message: str, line: int = 0, token: str = ""):
        self.message = message
        self.line = line
        self.token = token
        super().__init__(f"{line}: {message}" if line else message)


class InvalidStepError(ComplexError):
    """Шаг не применим к текущему комплексу."""


class SubcomplexError(ComplexError):
    """Фиксированный комплекс не является подкомплексом."""


class BarycentricError(ComplexError):
    """Некорректные барицентрические координаты или параметр воротника."""
