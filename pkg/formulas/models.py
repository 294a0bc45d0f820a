"""
Перечисления приложения формул.
"""

from django.db import models
from django.utils.translation import gettext_lazy as _


class SchemaKind(models.TextChoices):
    """Схемы предложений, которые умеет строить компилятор."""

    SUBMANIFOLD = "submanifold", _("Подмногообразие")
    BOUNDARY = "boundary", _("Многообразие с краем")
    HOMEOMORPHISM = "homeomorphism", _("Гомеоморфизм")
    COLLAPSE = "collapse", _("Элементарное стягивание")
