"""
Перечисления приложения topology.
"""

from django.db import models
from django.utils.translation import gettext_lazy as _


class VerdictKind(models.TextChoices):
    """Итог геометрической проверки."""

    MANIFOLD = "manifold", _("Многообразие без края")
    MANIFOLD_WITH_BOUNDARY = "manifold_with_boundary", _("Многообразие с краем")
    NOT_MANIFOLD = "not_manifold", _("Не многообразие")
    UNSUPPORTED = "unsupported", _("Не поддерживается")
    ACCEPT = "accept", _("Принято")
    REJECT = "reject", _("Отклонено")
    PASS = "pass", _("Проверка пройдена")
    FAIL = "fail", _("Проверка не пройдена")


# Итоги, при которых команда завершается с кодом 0
SUCCESS_KINDS = {
    VerdictKind.MANIFOLD,
    VerdictKind.MANIFOLD_WITH_BOUNDARY,
    VerdictKind.ACCEPT,
    VerdictKind.PASS,
}
