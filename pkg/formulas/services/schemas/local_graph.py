"""
Общие клаузы «множество локально является графиком функции».

Карта задаётся базовыми координатами a (шар радиуса ε вокруг центра),
слоевыми координатами b (шар радиуса η) и предикатом graph(a, b).
Необязательная область domain(a) ограничивает базу (полупространство
для краевых точек).
"""

from dataclasses import dataclass
from typing import Callable, Sequence

from ..ast import (
    And,
    Formula,
    exists,
    forall,
    gt,
    implies,
    le,
    lt,
    sq_dist,
    var,
    vec,
    vec_eq,
)
from .base import NameSupply


@dataclass
class Chart:
    graph: Callable[[list, list], Formula]
    base_center: Sequence
    fibre_center: Sequence
    domain: Callable[[list], Formula] | None = None


def place(n: int, parts: Sequence[tuple[Sequence[int], Sequence]]):
    """Собирает точку R^n из блоков (индексы координат, значения)."""
    coords = [None] * n
    for indices, values in parts:
        for i, v in zip(indices, values):
            coords[i] = v
    return coords


def radii_positive(*names: str | None) -> list[Formula]:
    return [gt(var(name)) for name in names if name]


def local_graph_clauses(
    chart: Chart, names: NameSupply, eps: str | None, eta: str | None, r: int
) -> list[Formula]:
    """Клаузы тотальности, единственности и гладкости графика в карте.

    Args:
        chart: Карта
        names: Источник свежих имён
        eps: Имя радиуса базы (None, если база пуста)
        eta: Имя радиуса слоя (None, если слой пуст)
        r: 0 для непрерывности, 1 для C^1

    Returns:
        list: Клаузы, конъюнкция которых выражает локальную графичность
    """
    m, k = len(chart.base_center), len(chart.fibre_center)

    def ball(a):
        return lt(sq_dist(a, chart.base_center), var(eps) ** 2)

    def box(b):
        return lt(sq_dist(b, chart.fibre_center), var(eta) ** 2)

    def over(a):
        parts = [ball(a)]
        if chart.domain is not None:
            parts.append(chart.domain(a))
        return And(tuple(parts))

    def in_chart(a, b):
        parts = []
        if m:
            parts.append(over(a))
        if k:
            parts.append(box(b))
        parts.append(chart.graph(a, b))
        return And(tuple(parts))

    clauses = []
    if m:
        a_names = names.fresh("a", m)
        a = vec(a_names)
        if k:
            b_names = names.fresh("b", k)
            b = vec(b_names)
            reach = exists(b_names, And((box(b), chart.graph(a, b))))
        else:
            reach = chart.graph(a, [])
        clauses.append(forall(a_names, implies(over(a), reach)))

        if chart.domain is not None:
            a_names, b_names = names.fresh("a", m), names.fresh("b", k)
            a, b = vec(a_names), vec(b_names)
            inside = [ball(a)] + ([box(b)] if k else []) + [chart.graph(a, b)]
            clauses.append(forall(a_names + b_names, implies(And(tuple(inside)), chart.domain(a))))

    if not k:
        return clauses

    if m:
        a_names, b_names, c_names = names.fresh("a", m), names.fresh("b", k), names.fresh("b", k)
        a, b, c = vec(a_names), vec(b_names), vec(c_names)
        clauses.append(
            forall(
                a_names + b_names + c_names,
                implies(And((in_chart(a, b), in_chart(a, c))), vec_eq(b, c)),
            )
        )
    else:
        b_names = names.fresh("b", k)
        b = vec(b_names)
        clauses.append(forall(b_names, implies(in_chart([], b), vec_eq(b, chart.fibre_center))))
        return clauses

    clauses.append(_continuity(in_chart, names, m, k))
    if r >= 1:
        clauses.extend(_differentiability(in_chart, names, m, k))
    return clauses


def _continuity(in_chart, names: NameSupply, m: int, k: int) -> Formula:
    a_names, b_names = names.fresh("a", m), names.fresh("b", k)
    a2_names, b2_names = names.fresh("a", m), names.fresh("b", k)
    g, d = names.one("g"), names.one("d")
    a, b, a2, b2 = vec(a_names), vec(b_names), vec(a2_names), vec(b2_names)
    close = forall(
        a2_names + b2_names,
        implies(
            And((in_chart(a2, b2), lt(sq_dist(a2, a), var(d) ** 2))),
            lt(sq_dist(b2, b), var(g) ** 2),
        ),
    )
    return forall(
        a_names + b_names,
        implies(
            in_chart(a, b),
            forall([g], implies(gt(var(g)), exists([d], And((gt(var(d)), close))))),
        ),
    )


def _derivative(in_chart, names: NameSupply, a, b, matrix, m: int, k: int) -> Formula:
    """Матрица matrix (k x m) есть производная графика в точке (a, b)."""
    a2_names, b2_names = names.fresh("a", m), names.fresh("b", k)
    g, d = names.one("g"), names.one("d")
    a2, b2 = vec(a2_names), vec(b2_names)
    step = [u - v for u, v in zip(a2, a)]
    linear = [sum(matrix[i][j] * step[j] for j in range(m)) for i in range(k)]
    residual = [b2[i] - b[i] - linear[i] for i in range(k)]
    quotient = forall(
        a2_names + b2_names,
        implies(
            And((in_chart(a2, b2), lt(sq_dist(a2, a), var(d) ** 2))),
            le(sq_dist(residual, [0] * k), var(g) ** 2 * sq_dist(a2, a)),
        ),
    )
    return forall([g], implies(gt(var(g)), exists([d], And((gt(var(d)), quotient)))))


def _differentiability(in_chart, names: NameSupply, m: int, k: int) -> list[Formula]:
    a_names, b_names, l_names = names.fresh("a", m), names.fresh("b", k), names.fresh("L", k * m)
    a, b = vec(a_names), vec(b_names)
    matrix = [vec(l_names[i * m:(i + 1) * m]) for i in range(k)]
    has_derivative = forall(
        a_names + b_names,
        implies(in_chart(a, b), exists(l_names, _derivative(in_chart, names, a, b, matrix, m, k))),
    )

    a1_names, b1_names, l1_names = names.fresh("a", m), names.fresh("b", k), names.fresh("L", k * m)
    a2_names, b2_names, l2_names = names.fresh("a", m), names.fresh("b", k), names.fresh("L", k * m)
    a1, b1, a2, b2 = vec(a1_names), vec(b1_names), vec(a2_names), vec(b2_names)
    m1 = [vec(l1_names[i * m:(i + 1) * m]) for i in range(k)]
    m2 = [vec(l2_names[i * m:(i + 1) * m]) for i in range(k)]
    g, d = names.one("g"), names.one("d")
    premise = And(
        (
            in_chart(a1, b1),
            in_chart(a2, b2),
            _derivative(in_chart, names, a1, b1, m1, m, k),
            _derivative(in_chart, names, a2, b2, m2, m, k),
            lt(sq_dist(a1, a2), var(d) ** 2),
        )
    )
    gap = lt(sq_dist(vec(l1_names), vec(l2_names)), var(g) ** 2)
    derivative_continuous = forall(
        [g],
        implies(
            gt(var(g)),
            exists(
                [d],
                And(
                    (
                        gt(var(d)),
                        forall(a1_names + b1_names + l1_names + a2_names + b2_names + l2_names, implies(premise, gap)),
                    )
                ),
            ),
        ),
    )
    return [has_derivative, derivative_continuous]
