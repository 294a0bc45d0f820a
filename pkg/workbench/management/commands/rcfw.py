"""
Команда manage.py rcfw: обёртка над workbench.services.run.
"""

import argparse
import sys

from django.core.management.base import BaseCommand

from workbench.services import run


class Command(BaseCommand):
    help = "Полуалгебраическая рабочая среда: describe, encode, decode, emit, decide, cad, check, pl, collar"

    def add_arguments(self, parser):
        parser.add_argument(
            "argv",
            nargs=argparse.REMAINDER,
            help="Подкоманда rcfw и её аргументы (rcfw describe --help)",
        )

    def handle(self, *args, **options):
        code = run(options["argv"], stdout=self.stdout, stderr=self.stderr)
        if code:
            sys.exit(code)
