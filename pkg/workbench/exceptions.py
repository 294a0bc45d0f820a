"""
Исключения приложения workbench.
"""


class WorkbenchError(Exception):
    """Базовое исключение приложения workbench."""


class UsageError(WorkbenchError):
    """Неверные аргументы команды или недоступный входной файл."""
