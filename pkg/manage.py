#!/usr/bin/env python
"""
Точка входа проекта.

python manage.py rcfw <подкоманда> ...; ссылка на этот файл с именем rcfw
запускает команду rcfw напрямую: rcfw describe circle.sa
"""
import os
import sys
from pathlib import Path

PROGRAM_NAME = "rcfw"


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Не удалось импортировать Django. Установите зависимости из requirements.txt "
            "и активируйте виртуальное окружение."
        ) from exc
    argv = list(sys.argv)
    if Path(argv[0]).stem == PROGRAM_NAME:
        argv = [argv[0], PROGRAM_NAME, *argv[1:]]
    execute_from_command_line(argv)


if __name__ == "__main__":
    main()
