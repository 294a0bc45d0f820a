"""
Схема «S является C^r-многообразием размерности m с краем T».

    ∀x (x ∈ S ∖ T → ⋁_σ Φ_σ(x))  ∧  ∀x (x ∈ T → ⋁_σ Ψ_σ(x))

Ψ_σ выбирает m-1 базовых координат A и координату воротника c: вблизи x
множество T есть график ξ над A, а S есть график над надграфиком или
подграфиком ξ. Клаузы для S записаны в координатах воротника
(a, s) ↦ (a, s + ξ(a)), область базы это полупространство s >= 0 или s <= 0.
При m = 1 график над точкой есть сама точка, ξ ≡ x_c.
"""

import itertools
import logging

from ...exceptions import UnsupportedSchemaError
from ...models import SchemaKind
from ..ast import (
    And,
    Formula,
    Not,
    Or,
    exists,
    forall,
    ge,
    iff,
    implies,
    le,
    lt,
    sq_dist,
    var,
    vec,
    vec_eq,
)
from ..membership import Binding, membership
from .base import NameSupply, PredicateInstance, SchemaCompiler
from .local_graph import Chart, local_graph_clauses, place, radii_positive
from .submanifold import phi

logger = logging.getLogger(__name__)


def psi(s: Binding, t: Binding, x, m: int, r: int, names: NameSupply) -> Formula:
    """Дизъюнкция Ψ_σ(x) по выборам базы A и координаты воротника c."""
    n = len(x)
    options = []
    for base in itertools.combinations(range(n), m - 1):
        for collar in [i for i in range(n) if i not in base]:
            rest = [i for i in range(n) if i not in base and i != collar]
            options.append(_psi_sigma(s, t, x, list(base), collar, rest, r, names))
    return Or(tuple(options))


def _psi_sigma(s, t, x, base, collar, rest, r, names: NameSupply) -> Formula:
    n = len(x)
    delta = names.one("d")
    eta = names.one("h") if base or rest else None
    radii = [name for name in (delta, eta) if name]

    if not base:
        u_names = names.fresh("u", n)
        u = vec(u_names)
        t_clauses = [
            forall(
                u_names,
                implies(lt(sq_dist(u, x), var(delta) ** 2), iff(membership(t, u), vec_eq(u, x))),
            )
        ]

        def collar_graph(a, b):
            return membership(s, place(n, [([collar], [x[collar] + a[-1]]), (rest, b)]))
    else:
        t_chart = Chart(
            graph=lambda a, f: membership(t, place(n, [(base, a), ([collar] + rest, f)])),
            base_center=[x[i] for i in base],
            fibre_center=[x[i] for i in [collar] + rest],
        )
        t_clauses = local_graph_clauses(t_chart, names, delta, eta, r)

        def collar_graph(a, b):
            t0 = names.one("w")
            b0_names = names.fresh("w", len(rest))
            b0 = vec(b0_names)
            near = lt(
                sq_dist([var(t0)] + b0, [x[collar]] + [x[i] for i in rest]), var(eta) ** 2
            )
            on_t = membership(t, place(n, [(base, a[:-1]), ([collar], [var(t0)]), (rest, b0)]))
            on_s = membership(s, place(n, [(base, a[:-1]), ([collar], [a[-1] + var(t0)]), (rest, b)]))
            return exists([t0] + b0_names, And((near, on_t, on_s)))

    sides = []
    for side in (ge, le):
        chart = Chart(
            graph=collar_graph,
            base_center=[x[i] for i in base] + [0],
            fibre_center=[x[i] for i in rest],
            domain=lambda a, side=side: side(a[-1]),
        )
        sides.append(And(tuple(local_graph_clauses(chart, names, delta, eta if rest else None, r))))
    body = And(tuple(radii_positive(*radii) + t_clauses + [Or(tuple(sides))]))
    return exists(radii, body)


class BoundaryCompiler(SchemaCompiler):
    """Компилятор схемы Boundary."""

    @property
    def kind(self) -> SchemaKind:
        return SchemaKind.BOUNDARY

    def validate(self, inst: PredicateInstance) -> None:
        super().validate(inst)
        if not 1 <= inst.m <= inst.n:
            raise UnsupportedSchemaError(
                f"Для многообразия с краем нужна размерность 1 <= m <= n, получено m={inst.m}"
            )

    def clauses(self, inst: PredicateInstance) -> dict[str, Formula]:
        self.validate(inst)
        s = inst.binding("S", inst.n)
        t = inst.binding("T", inst.n)
        r = inst.smoothness
        names = NameSupply()
        x_names = names.fresh("x", inst.n)
        x = vec(x_names)
        interior = forall(
            x_names,
            implies(And((membership(s, x), Not(membership(t, x)))), phi(s, x, inst.m, r, names)),
        )
        y_names = names.fresh("x", inst.n)
        y = vec(y_names)
        boundary = forall(y_names, implies(membership(t, y), psi(s, t, y, inst.m, r, names)))
        logger.info(f"[SchemaService] Boundary n={inst.n} m={inst.m} r={r}")
        return {"interior": interior, "boundary": boundary}
