"""
Сериализаторы приложения workbench: проверка общих параметров запуска и --json записи.
"""

from django.conf import settings
from rest_framework import serializers

from formulas.models import SchemaKind

from .models import OutputMode

# Общий параметр командной строки -> (ключ жёсткого предела, имя настройки)
LIMITED_OPTIONS = {
    "threads": ("threads", "RCFW_THREADS"),
    "max_variables": ("max_variables", "RCFW_MAX_VARIABLES"),
    "max_degree": ("max_degree", "RCFW_MAX_DEGREE"),
    "budget": ("search_budget", "RCFW_SEARCH_BUDGET"),
    "samples": ("falsify_samples", "RCFW_FALSIFY_SAMPLES"),
}


def _within_limit(option: str, value):
    if value is None:
        return value
    limit_key, _ = LIMITED_OPTIONS[option]
    limit = settings.RCFW_HARD_LIMITS[limit_key]
    if value > limit:
        raise serializers.ValidationError(f"Значение {value} превышает жёсткий предел {limit}")
    return value


class RunConfigSerializer(serializers.Serializer):
    """Параметры одного запуска rcfw.

    Ограничители ресурсов необязательны; заданные значения проверяются
    против settings.RCFW_HARD_LIMITS и подменяют соответствующие настройки.
    """

    command = serializers.CharField()
    inputs = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    output = serializers.ChoiceField(choices=OutputMode.choices, default=OutputMode.TEXT)
    threads = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    max_variables = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    max_degree = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    budget = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    samples = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)

    @staticmethod
    def validate_threads(value):
        return _within_limit("threads", value)

    @staticmethod
    def validate_max_variables(value):
        return _within_limit("max_variables", value)

    @staticmethod
    def validate_max_degree(value):
        return _within_limit("max_degree", value)

    @staticmethod
    def validate_budget(value):
        """Бюджет поиска стягиваний."""
        return _within_limit("budget", value)

    @staticmethod
    def validate_samples(value):
        return _within_limit("samples", value)

    def overrides(self) -> dict:
        """Настройки Django, которые нужно подменить на время запуска."""
        data = self.validated_data
        return {
            setting: data[option]
            for option, (_, setting) in LIMITED_OPTIONS.items()
            if data.get(option) is not None
        }


class ValueSerializer(serializers.Serializer):
    """Скалярный ответ команды: булево значение, число или строка."""

    command = serializers.CharField()
    value = serializers.JSONField()


class FormulaSerializer(serializers.Serializer):
    """Скомпилированное предложение схемы."""

    schema = serializers.ChoiceField(choices=SchemaKind.choices)
    formula = serializers.CharField(help_text="Предложение в виде S-выражения")
    free = serializers.ListField(
        child=serializers.CharField(), help_text="Свободные переменные (координаты параметров)"
    )
    clauses = serializers.DictField(child=serializers.CharField(), required=False)
