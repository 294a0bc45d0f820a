"""
Схема β(X, Y, c) элементарного стягивания X на Y.

График c ⊆ R^(n+N) задаёт отображение f: I^n → R^N. Требуется: f вложение
на (0,1] × I^(n-1), f(0 × I^(n-1)) ⊆ Y, f((0,1] × I^(n-1)) ∩ Y = ∅ и
X = Y ∪ f(I^n).
"""

import logging

from ...models import SchemaKind
from ..ast import And, Formula, Not, Or, eq, exists, forall, ge, gt, iff, implies, le, vec, vec_eq
from ..membership import membership
from .base import NameSupply, PredicateInstance, SchemaCompiler
from .homeomorphism import continuity_of_graph

logger = logging.getLogger(__name__)


def cube(s) -> Formula:
    return And(tuple(And((ge(v), le(v, 1))) for v in s))


class CollapseCompiler(SchemaCompiler):
    """Компилятор схемы Collapse: X, Y в R^N, график c в R^(n+N)."""

    @property
    def kind(self) -> SchemaKind:
        return SchemaKind.COLLAPSE

    def clauses(self, inst: PredicateInstance) -> dict[str, Formula]:
        self.validate(inst)
        n = inst.n
        big_n = inst.ambient or n
        x_set = inst.binding("X", big_n)
        y_set = inst.binding("Y", big_n)
        c = inst.binding("c", n + big_n)
        names = NameSupply()

        def graph(s, y):
            return membership(c, list(s) + list(y))

        def fresh(prefix, count):
            found = names.fresh(prefix, count)
            return found, vec(found)

        def collar(s):
            return gt(s[0])

        (sn, s), (yn, y) = fresh("s", n), fresh("y", big_n)
        domain = forall(sn + yn, implies(graph(s, y), cube(s)))
        (sn, s), (yn, y) = fresh("s", n), fresh("y", big_n)
        total = forall(sn, implies(cube(s), exists(yn, graph(s, y))))
        (sn, s), (yn, y), (zn, z) = fresh("s", n), fresh("y", big_n), fresh("y", big_n)
        functional = forall(sn + yn + zn, implies(And((graph(s, y), graph(s, z))), vec_eq(y, z)))
        (sn, s), (tn, t), (yn, y) = fresh("s", n), fresh("s", n), fresh("y", big_n)
        injective = forall(
            sn + tn + yn,
            implies(And((graph(s, y), graph(t, y), collar(s), collar(t))), vec_eq(s, t)),
        )
        (sn, s), (yn, y) = fresh("s", n), fresh("y", big_n)
        base_in_y = forall(sn + yn, implies(And((graph(s, y), eq(s[0]))), membership(y_set, y)))
        (sn, s), (yn, y) = fresh("s", n), fresh("y", big_n)
        avoids_y = forall(
            sn + yn, implies(And((graph(s, y), collar(s))), Not(membership(y_set, y)))
        )
        (yn, y), (sn, s) = fresh("y", big_n), fresh("s", n)
        cover = forall(
            yn, iff(membership(x_set, y), Or((membership(y_set, y), exists(sn, graph(s, y)))))
        )

        def open_graph(s, y):
            return And((graph(s, y), collar(s)))

        logger.info(f"[SchemaService] Collapse n={n} N={big_n}")
        return {
            "domain": domain,
            "total": total,
            "functional": functional,
            "injective": injective,
            "base_in_Y": base_in_y,
            "collar_avoids_Y": avoids_y,
            "cover": cover,
            "continuous": continuity_of_graph(graph, names, n, big_n),
            "inverse_continuous": continuity_of_graph(open_graph, names, n, big_n, swap=True),
        }
