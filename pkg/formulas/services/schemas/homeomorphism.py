"""
Схема λ(a, b, c): график c задаёт гомеоморфизм S_a → S_b.
"""

import logging

from ...models import SchemaKind
from ..ast import And, Formula, exists, forall, gt, implies, lt, sq_dist, var, vec, vec_eq
from ..membership import membership
from .base import NameSupply, PredicateInstance, SchemaCompiler

logger = logging.getLogger(__name__)


def continuity_of_graph(graph, names: NameSupply, source: int, target: int, swap: bool = False) -> Formula:
    """ε-δ непрерывность отображения, заданного графиком graph(u, v).

    При swap=True проверяется непрерывность обратного отображения v ↦ u.
    """
    u_names, v_names = names.fresh("u", source), names.fresh("v", target)
    u2_names, v2_names = names.fresh("u", source), names.fresh("v", target)
    g, d = names.one("g"), names.one("d")
    u, v, u2, v2 = vec(u_names), vec(v_names), vec(u2_names), vec(v2_names)
    near, far = (v, v2), (u, u2)
    if not swap:
        near, far = (u, u2), (v, v2)
    close = forall(
        u2_names + v2_names,
        implies(
            And((graph(u2, v2), lt(sq_dist(near[1], near[0]), var(d) ** 2))),
            lt(sq_dist(far[1], far[0]), var(g) ** 2),
        ),
    )
    return forall(
        u_names + v_names,
        implies(
            graph(u, v),
            forall([g], implies(gt(var(g)), exists([d], And((gt(var(d)), close))))),
        ),
    )


class HomeomorphismCompiler(SchemaCompiler):
    """Компилятор схемы Homeomorphism: параметры a, b в R^n и график c в R^(2n)."""

    @property
    def kind(self) -> SchemaKind:
        return SchemaKind.HOMEOMORPHISM

    def clauses(self, inst: PredicateInstance) -> dict[str, Formula]:
        self.validate(inst)
        n = inst.n
        a = inst.binding("a", n)
        b = inst.binding("b", n)
        c = inst.binding("c", 2 * n)
        names = NameSupply()

        def graph(x, y):
            return membership(c, list(x) + list(y))

        def fresh(prefix):
            found = names.fresh(prefix, n)
            return found, vec(found)

        (xn, x), (yn, y) = fresh("x"), fresh("y")
        in_product = forall(
            xn + yn, implies(graph(x, y), And((membership(a, x), membership(b, y))))
        )
        (xn, x), (yn, y) = fresh("x"), fresh("y")
        total = forall(xn, implies(membership(a, x), exists(yn, graph(x, y))))
        (xn, x), (yn, y), (zn, z) = fresh("x"), fresh("y"), fresh("y")
        functional = forall(xn + yn + zn, implies(And((graph(x, y), graph(x, z))), vec_eq(y, z)))
        (xn, x), (zn, z), (yn, y) = fresh("x"), fresh("x"), fresh("y")
        injective = forall(xn + zn + yn, implies(And((graph(x, y), graph(z, y))), vec_eq(x, z)))
        (yn, y), (xn, x) = fresh("y"), fresh("x")
        onto = forall(yn, implies(membership(b, y), exists(xn, graph(x, y))))
        logger.info(f"[SchemaService] Homeomorphism n={n}")
        return {
            "graph_in_product": in_product,
            "total": total,
            "functional": functional,
            "injective": injective,
            "onto": onto,
            "continuous": continuity_of_graph(graph, names, n, n),
            "inverse_continuous": continuity_of_graph(graph, names, n, n, swap=True),
        }
