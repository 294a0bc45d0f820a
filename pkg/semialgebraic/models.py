"""
Перечисления приложения полуалгебраических множеств.

Таблиц в базе нет: описания множеств живут только в памяти и в файлах корпуса.
"""

from django.db import models
from django.utils.translation import gettext_lazy as _


class Relation(models.TextChoices):
    """Отношение знакового условия f ⋈ 0."""

    LT = "<", _("Меньше нуля")
    EQ = "=", _("Равно нулю")
    GT = ">", _("Больше нуля")


# Знак многочлена, при котором выполняется отношение
RELATION_SIGN = {Relation.LT: -1, Relation.EQ: 0, Relation.GT: 1}
SIGN_RELATION = {sign: rel for rel, sign in RELATION_SIGN.items()}
