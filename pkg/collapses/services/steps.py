"""
Элементарные стягивания и расширения.
"""

from dataclasses import dataclass

from ..exceptions import InvalidStepError
from ..models import StepKind
from .complex import Simplex, SimplicialComplex, boundary_of, format_simplex


@dataclass(frozen=True)
class CollapseStep:
    """Шаг сертификата: свободная грань sigma и её кограница tau."""

    kind: StepKind
    sigma: Simplex
    tau: Simplex

    def __str__(self) -> str:
        return f"{self.kind} {format_simplex(self.sigma)} {format_simplex(self.tau)}"

    def shape_error(self) -> str | None:
        """Причина, по которой пара не может быть шагом ни в каком комплексе."""
        if not self.sigma < self.tau or len(self.tau) != len(self.sigma) + 1:
            return f"{format_simplex(self.sigma)} не гипергрань {format_simplex(self.tau)}"
        return None


def collapse(sigma, tau) -> CollapseStep:
    return CollapseStep(StepKind.COLLAPSE, frozenset(sigma), frozenset(tau))


def expansion(sigma, tau) -> CollapseStep:
    return CollapseStep(StepKind.EXPANSION, frozenset(sigma), frozenset(tau))


def apply_collapse(k: SimplicialComplex, step: CollapseStep) -> SimplicialComplex:
    """K ∖ {σ, τ}, если σ свободна в K и τ её единственная кограница.

    Raises:
        InvalidStepError: Шаг не применим
    """
    reason = step.shape_error()
    if reason:
        raise InvalidStepError(reason)
    sigma, tau = format_simplex(step.sigma), format_simplex(step.tau)
    if step.tau not in k:
        raise InvalidStepError(f"Симплекс {tau} отсутствует")
    cofaces = k.cofaces(step.sigma)
    if cofaces != [step.tau]:
        raise InvalidStepError(f"Грань {sigma} не свободна: кограниц {len(cofaces)}")
    return k.without(step.sigma, step.tau)


def apply_expansion(k: SimplicialComplex, step: CollapseStep) -> SimplicialComplex:
    """K ∪ {σ, τ}, если σ и τ отсутствуют, а остальные гиперграни τ есть в K.

    Raises:
        InvalidStepError: Шаг не применим
    """
    reason = step.shape_error()
    if reason:
        raise InvalidStepError(reason)
    for s in (step.sigma, step.tau):
        if s in k:
            raise InvalidStepError(f"Симплекс {format_simplex(s)} уже есть в комплексе")
    for face in boundary_of(step.tau):
        if face != step.sigma and face not in k:
            raise InvalidStepError(f"Нет гиперграни {format_simplex(face)}")
    for face in boundary_of(step.sigma):
        if face not in k:
            raise InvalidStepError(f"Нет грани {format_simplex(face)}")
    return k.with_(step.sigma, step.tau)


def apply_step(k: SimplicialComplex, step: CollapseStep) -> SimplicialComplex:
    if step.kind == StepKind.COLLAPSE:
        return apply_collapse(k, step)
    return apply_expansion(k, step)
