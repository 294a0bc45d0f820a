"""
Кусочно-линейный гомеоморфизм g: τ ∪ (∂τ × [0,1]) → Δ_m.

Точка τ сжимается к барицентру вдвое, точка воротника (x, λ) идёт по
отрезку от середины [b, x] при λ = 0 до самой x при λ = 1.
"""

from typing import Optional, Sequence

from sympy import Rational

from polycore.services import to_rat

from ..exceptions import BarycentricError


def _barycentric(x: Sequence, m: int) -> list[Rational]:
    if m < 0:
        raise BarycentricError(f"Размерность симплекса m={m} отрицательна")
    try:
        point = [to_rat(v) for v in x]
    except (TypeError, ValueError) as exc:
        raise BarycentricError(f"Нечисловая координата: {exc}") from exc
    if len(point) != m + 1:
        raise BarycentricError(f"Для Δ_{m} нужно {m + 1} координат, получено {len(point)}")
    if any(v < 0 for v in point):
        raise BarycentricError("Барицентрические координаты должны быть неотрицательны")
    if sum(point) != 1:
        raise BarycentricError(f"Сумма координат {sum(point)}, ожидалась 1")
    return point


def collar_cone_map(x: Sequence, m: int, lam: Optional[object] = None) -> tuple[Rational, ...]:
    """Значение g в барицентрических координатах Δ_m.

    Args:
        x: Барицентрические координаты точки τ (или точки ∂τ для воротника)
        m: Размерность симплекса
        lam: Параметр воротника λ ∈ [0, 1]; None для точки самого τ

    Returns:
        tuple: ½·b + ½·x для τ, ((1-λ)/2)·b + ((1+λ)/2)·x для воротника

    Raises:
        BarycentricError: Координаты не барицентрические, λ вне [0, 1] или x не на ∂τ
    """
    point = _barycentric(x, m)
    centre = Rational(1, m + 1)
    if lam is None:
        return tuple(centre / 2 + v / 2 for v in point)
    try:
        lam = to_rat(lam)
    except (TypeError, ValueError) as exc:
        raise BarycentricError(f"Нечисловой параметр воротника: {exc}") from exc
    if not 0 <= lam <= 1:
        raise BarycentricError(f"Параметр воротника λ={lam} вне [0, 1]")
    if all(v > 0 for v in point):
        raise BarycentricError("Точка воротника должна лежать на ∂τ (нулевая координата)")
    return tuple((1 - lam) / 2 * centre + (1 + lam) / 2 * v for v in point)
