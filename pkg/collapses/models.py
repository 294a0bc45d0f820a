"""
Перечисления приложения collapses.
"""

from django.db import models
from django.utils.translation import gettext_lazy as _


class StepKind(models.TextChoices):
    """Вид элементарного шага сертификата."""

    COLLAPSE = "C", _("Стягивание")
    EXPANSION = "E", _("Расширение")


class SearchStatus(models.TextChoices):
    """Итог поиска последовательности стягиваний."""

    FOUND = "found", _("Сертификат найден")
    EXHAUSTED_BUDGET = "exhausted_budget", _("Исчерпан бюджет состояний")
    EXHAUSTED_COMPLETE = "exhausted_complete", _("Перебор завершён без результата")
