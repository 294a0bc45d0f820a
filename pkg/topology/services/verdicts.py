"""
Результаты топологических проверок.

Отрицательные результаты (NotManifold, reject, fail) возвращаются как
значения. Исключения зарезервированы для нарушенных предусловий.
"""

from dataclasses import dataclass, field
from typing import Optional

from polycore.services import AlgReal

from ..models import SUCCESS_KINDS, VerdictKind

Point = tuple[AlgReal, ...]


@dataclass(frozen=True)
class Verdict:
    """Итог проверки.

    Attributes:
        kind: Вид итога
        reason: Причина отказа или имя не выполненного условия
        witness: Точка, на которой обнаружен дефект
        boundary: Точки края для многообразия с краем
    """

    kind: VerdictKind
    reason: str = ""
    witness: Optional[Point] = None
    boundary: tuple[Point, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.kind in SUCCESS_KINDS

    def __str__(self) -> str:
        parts = [str(self.kind)]
        if self.reason:
            parts.append(f"reason={self.reason}")
        if self.witness is not None:
            parts.append(f"witness={format_point(self.witness)}")
        if self.boundary:
            parts.append("boundary=" + ";".join(format_point(p) for p in self.boundary))
        return " ".join(parts)


@dataclass(frozen=True)
class Compactness:
    closed: bool
    bounded: bool

    @property
    def compact(self) -> bool:
        return self.closed and self.bounded

    def __str__(self) -> str:
        return f"closed={str(self.closed).lower()} bounded={str(self.bounded).lower()}"


def format_point(point: Point) -> str:
    """Десятичные приближения координат: (0.5000000000,1.000000000)."""
    return "(" + ",".join(value.to_decimal() for value in point) + ")"


def manifold(boundary=()) -> Verdict:
    boundary = tuple(boundary)
    if boundary:
        return Verdict(VerdictKind.MANIFOLD_WITH_BOUNDARY, boundary=boundary)
    return Verdict(VerdictKind.MANIFOLD)


def not_manifold(witness: Point, reason: str) -> Verdict:
    return Verdict(VerdictKind.NOT_MANIFOLD, reason=reason, witness=tuple(witness))


def unsupported(reason: str) -> Verdict:
    return Verdict(VerdictKind.UNSUPPORTED, reason=reason)


def accept() -> Verdict:
    return Verdict(VerdictKind.ACCEPT)


def reject(reason: str, witness: Optional[Point] = None) -> Verdict:
    return Verdict(VerdictKind.REJECT, reason=reason, witness=None if witness is None else tuple(witness))
