"""
Перечисления приложения workbench.
"""

from django.db import models
from django.utils.translation import gettext_lazy as _


class ExitCode(models.IntegerChoices):
    """Коды завершения команды rcfw."""

    OK = 0, _("Успех, принято, истина")
    REJECT = 1, _("Отказ, ложь")
    UNSUPPORTED = 2, _("Превышение лимитов, неподдерживаемый случай, поиск исчерпан")
    USAGE = 3, _("Ошибка вызова, синтаксиса или проверки данных")


class OutputMode(models.TextChoices):
    TEXT = "text", _("Текст")
    JSON = "json", _("JSON")
