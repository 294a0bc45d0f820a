"""
Сериализаторы для --json вывода приложения topology.
"""

from rest_framework import serializers

from cad.serializers import AlgRealSerializer

from .models import VerdictKind
from .services import Compactness, Verdict


class VerdictSerializer(serializers.Serializer):
    """Запись вердикта: вид, причина, точка-свидетель и точки края."""

    verdict = serializers.ChoiceField(choices=VerdictKind.choices)
    reason = serializers.CharField(required=False, allow_blank=True, default="")
    witness = AlgRealSerializer(many=True, required=False, allow_null=True, default=None)
    boundary = serializers.ListField(
        child=AlgRealSerializer(many=True),
        required=False,
        default=list,
        help_text="Точки края, по одной записи на координату",
    )

    def to_representation(self, instance):
        if isinstance(instance, Verdict):
            instance = {
                "verdict": str(instance.kind),
                "reason": instance.reason,
                "witness": None if instance.witness is None else list(instance.witness),
                "boundary": [list(point) for point in instance.boundary],
            }
        return super().to_representation(instance)

    def validate(self, attrs):
        if attrs["boundary"] and attrs["verdict"] != VerdictKind.MANIFOLD_WITH_BOUNDARY:
            raise serializers.ValidationError("Точки края допустимы только у многообразия с краем")
        return attrs


class CompactnessSerializer(serializers.Serializer):
    closed = serializers.BooleanField()
    bounded = serializers.BooleanField()
    compact = serializers.BooleanField(read_only=True)

    def to_representation(self, instance):
        if isinstance(instance, Compactness):
            instance = {
                "closed": instance.closed,
                "bounded": instance.bounded,
                "compact": instance.compact,
            }
        return super().to_representation(instance)
