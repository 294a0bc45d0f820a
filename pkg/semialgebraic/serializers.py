"""
Сериализаторы для --json вывода приложения semialgebraic.
"""

from rest_framework import serializers
from sympy import Rational

from .exceptions import DescriptionError
from .services import ParamPoint, monomial_count


class ComplexitySerializer(serializers.Serializer):
    """Сложность описания вместе с размерностью пространства."""

    name = serializers.CharField(required=False, default="S")
    n = serializers.IntegerField(min_value=1)
    p = serializers.IntegerField(min_value=0)
    q = serializers.IntegerField(min_value=0)


class ParamPointSerializer(serializers.Serializer):
    """Точка пространства параметров; рациональные числа и селектор передаются строками."""

    n = serializers.IntegerField(min_value=1)
    p = serializers.IntegerField(min_value=0)
    q = serializers.IntegerField(min_value=0)
    blocks = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField()),
        help_text="p векторов коэффициентов в возрастающем lex-порядке мономов",
    )
    selector = serializers.CharField(help_text="Номер подмножества Σ, десятичная запись")

    def to_representation(self, instance):
        if isinstance(instance, ParamPoint):
            instance = {
                "n": instance.n,
                "p": instance.p,
                "q": instance.q,
                "blocks": [[str(c) for c in block] for block in instance.blocks],
                "selector": str(instance.selector),
            }
        return super().to_representation(instance)

    @staticmethod
    def validate_selector(value):
        """Проверяет, что селектор это неотрицательное целое."""
        if not value.isdigit():
            raise serializers.ValidationError("Селектор должен быть неотрицательным целым числом")
        return value

    @staticmethod
    def validate_blocks(value):
        for block in value:
            for coefficient in block:
                try:
                    Rational(coefficient)
                except (TypeError, ValueError):
                    raise serializers.ValidationError(f"Некорректный коэффициент: {coefficient!r}")
        return value

    def validate(self, attrs):
        width = monomial_count(attrs["n"], attrs["q"])
        if len(attrs["blocks"]) != attrs["p"]:
            raise serializers.ValidationError("Число блоков не совпадает с p")
        if any(len(block) != width for block in attrs["blocks"]):
            raise serializers.ValidationError(f"Каждый блок должен содержать {width} коэффициентов")
        if int(attrs["selector"]) >= 2 ** (3 ** attrs["p"]):
            raise serializers.ValidationError("Селектор вне диапазона [0, 2^(3^p))")
        return attrs

    def to_param_point(self) -> ParamPoint:
        """Строит ParamPoint из проверенных данных."""
        data = self.validated_data
        try:
            return ParamPoint(
                data["n"],
                data["p"],
                data["q"],
                tuple(tuple(Rational(c) for c in block) for block in data["blocks"]),
                int(data["selector"]),
            )
        except DescriptionError as exc:
            raise serializers.ValidationError(str(exc))
