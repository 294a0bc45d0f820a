"""
Перечисления приложения cad.
"""

from django.db import models
from django.utils.translation import gettext_lazy as _


class CellKind(models.TextChoices):
    """Вид клетки на очередном уровне стека."""

    SECTION = "section", _("Сечение")
    SECTOR = "sector", _("Сектор")
