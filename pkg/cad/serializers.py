"""
Сериализаторы для --json вывода приложения cad.
"""

from rest_framework import serializers

from polycore.services import AlgReal

from .models import CellKind
from .services import CadCell


class AlgRealSerializer(serializers.Serializer):
    """Точное представление алгебраического числа и его десятичное приближение."""

    defining = serializers.CharField(help_text="Определяющий многочлен от t")
    lo = serializers.CharField()
    hi = serializers.CharField()
    decimal = serializers.CharField(required=False)

    def to_representation(self, instance):
        if isinstance(instance, AlgReal):
            instance = {
                "defining": str(instance.defining.as_expr()),
                "lo": str(instance.lo),
                "hi": str(instance.hi),
                "decimal": instance.to_decimal(),
            }
        return super().to_representation(instance)


class CadCellSerializer(serializers.Serializer):
    """Запись клетки для --json дампа."""

    index = serializers.ListField(child=serializers.IntegerField(min_value=1))
    kinds = serializers.ListField(child=serializers.ChoiceField(choices=CellKind.choices))
    sample = serializers.ListField(
        child=serializers.CharField(), help_text="Десятичные приближения координат"
    )
    exact = AlgRealSerializer(many=True, help_text="Точные координаты выборочной точки")
    signs = serializers.ListField(child=serializers.IntegerField(min_value=-1, max_value=1))
    dim = serializers.IntegerField(min_value=0)

    def to_representation(self, instance):
        if isinstance(instance, CadCell):
            instance = {
                "index": list(instance.index),
                "kinds": [str(kind) for kind in instance.kinds],
                "sample": [value.to_decimal() for value in instance.sample],
                "exact": list(instance.sample),
                "signs": list(instance.signs),
                "dim": instance.dim,
            }
        return super().to_representation(instance)

    def validate(self, attrs):
        if len(attrs["index"]) != len(attrs["kinds"]) or len(attrs["kinds"]) != len(attrs["sample"]):
            raise serializers.ValidationError("Длины index, kinds и sample должны совпадать")
        sectors = sum(1 for kind in attrs["kinds"] if kind == CellKind.SECTOR)
        if attrs["dim"] != sectors:
            raise serializers.ValidationError("Размерность должна равняться числу секторов")
        return attrs
