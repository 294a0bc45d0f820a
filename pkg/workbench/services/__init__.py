"""
Сервисный слой командной строки rcfw.
"""

from .cli import CommandParser, CommandResult, build_parser, format_cell, run
from .loaders import (
    collect_sets,
    load_complex,
    load_set,
    load_sets,
    read_text,
    resolve_path,
    split_reference,
)

# Экспортируем точку входа и загрузчики для удобного импорта
__all__ = [
    'CommandParser',
    'CommandResult',
    'build_parser',
    'collect_sets',
    'format_cell',
    'load_complex',
    'load_set',
    'load_sets',
    'read_text',
    'resolve_path',
    'run',
    'split_reference',
]
