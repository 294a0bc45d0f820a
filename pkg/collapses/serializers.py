"""
Сериализаторы для --json вывода приложения collapses.
"""

from rest_framework import serializers

from .exceptions import ComplexSyntaxError
from .models import SearchStatus, StepKind
from .services import CertificateVerdict, CollapseStep, SearchResult, format_simplex, parse_simplex


def _canonical(value: str) -> str:
    try:
        return format_simplex(parse_simplex(value))
    except ComplexSyntaxError as exc:
        raise serializers.ValidationError(exc.message)


class CollapseStepSerializer(serializers.Serializer):
    """Шаг в виде {"kind": "C", "sigma": "ab", "tau": "abc"}."""

    kind = serializers.ChoiceField(choices=StepKind.choices)
    sigma = serializers.CharField()
    tau = serializers.CharField()

    def to_representation(self, instance):
        if isinstance(instance, CollapseStep):
            instance = {
                "kind": str(instance.kind),
                "sigma": format_simplex(instance.sigma),
                "tau": format_simplex(instance.tau),
            }
        return super().to_representation(instance)

    @staticmethod
    def validate_sigma(value):
        """Приводит запись грани к канонической."""
        return _canonical(value)

    @staticmethod
    def validate_tau(value):
        return _canonical(value)

    def validate(self, attrs):
        step = CollapseStep(
            StepKind(attrs["kind"]), parse_simplex(attrs["sigma"]), parse_simplex(attrs["tau"])
        )
        reason = step.shape_error()
        if reason:
            raise serializers.ValidationError(reason)
        return attrs


class SearchResultSerializer(serializers.Serializer):
    status = serializers.ChoiceField(choices=SearchStatus.choices)
    explored = serializers.IntegerField(min_value=0)
    steps = CollapseStepSerializer(many=True)

    def to_representation(self, instance):
        if isinstance(instance, SearchResult):
            instance = {
                "status": str(instance.status),
                "explored": instance.explored,
                "steps": list(instance.steps),
            }
        return super().to_representation(instance)


class CertificateVerdictSerializer(serializers.Serializer):
    accepted = serializers.BooleanField()
    index = serializers.IntegerField(min_value=0, allow_null=True, required=False, default=None)
    reason = serializers.CharField(allow_blank=True, required=False, default="")

    def to_representation(self, instance):
        if isinstance(instance, CertificateVerdict):
            instance = {
                "accepted": instance.accepted,
                "index": instance.index,
                "reason": instance.reason,
            }
        return super().to_representation(instance)
