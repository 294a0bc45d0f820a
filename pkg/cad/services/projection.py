"""
Полный оператор проекции CAD.

Для множества неприводимых многочленов F с главной переменной x_i проекция
состоит из всех коэффициентов по x_i, главных коэффициентов субрезультантов
каждого редукта с его производной и каждого редукта одного многочлена
с другим многочленом. Результат раскладывается на неприводимые множители.
"""

import itertools
import logging
from typing import Iterable

from sympy import Poly

from polycore.services import (
    coefficients_in,
    dedupe,
    degree_in,
    derivative,
    irreducible_factors,
    principal_subresultant_coefficients,
    reducta,
)

logger = logging.getLogger(__name__)


def level_of(p: Poly) -> int:
    """Номер старшей переменной, от которой p реально зависит (0 для констант)."""
    for i in range(len(p.gens) - 1, -1, -1):
        if degree_in(p, i) > 0:
            return i + 1
    return 0


def factor_all(polys: Iterable[Poly]) -> list[Poly]:
    """Неприводимые множители положительной степени, без повторов."""
    out = []
    for p in polys:
        if p.is_zero or p.is_ground:
            continue
        out.extend(irreducible_factors(p))
    return dedupe(out)


def project(polys: list[Poly], i: int) -> list[Poly]:
    """Проекция многочленов с главной переменной номер i (с нуля).

    Args:
        polys: Неприводимые многочлены уровня i + 1
        i: Индекс исключаемой переменной

    Returns:
        list[Poly]: Неприводимые множители проекции, зависящие от x_1..x_i
    """
    out = []
    for f in polys:
        out.extend(coefficients_in(f, i))
        for g in reducta(f, i):
            out.extend(principal_subresultant_coefficients(g, derivative(g, i), i))
    for f, h in itertools.combinations(polys, 2):
        for g in reducta(f, i):
            out.extend(principal_subresultant_coefficients(g, h, i))
    factors = factor_all(out)
    logger.debug(f"[CadService] Проекция по {polys[0].gens[i] if polys else i}: {len(factors)} множителей")
    return factors


def projection_levels(polys: list[Poly], n: int) -> dict[int, list[Poly]]:
    """Проекционные множители по уровням 1..n.

    Уровень k содержит неприводимые многочлены, старшая переменная которых x_k;
    корни многочленов уровня k задают сечения стеков на уровне k.
    """
    levels: dict[int, list[Poly]] = {k: [] for k in range(1, n + 1)}
    for f in factor_all(polys):
        levels[level_of(f)].append(f)
    for k in range(n, 0, -1):
        levels[k] = dedupe(levels[k])
        if k > 1 and levels[k]:
            for g in project(levels[k], k - 1):
                levels[level_of(g)].append(g)
    return levels
