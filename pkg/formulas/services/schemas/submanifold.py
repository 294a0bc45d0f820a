"""
Схема «S является C^r-подмногообразием размерности m».

    ∀x (x ∈ S → ⋁_σ Φ_σ(x))

σ пробегает m-элементные наборы координат; Φ_σ утверждает, что вблизи x
множество S есть график функции над координатами σ. При m = n схема
вырождается в открытость, при m = 0 в изолированность точки.
"""

import itertools
import logging

from ...exceptions import UnsupportedSchemaError
from ...models import SchemaKind
from ..ast import And, Formula, Or, exists, forall, implies, vec
from ..membership import Binding, membership
from .base import NameSupply, PredicateInstance, SchemaCompiler
from .local_graph import Chart, local_graph_clauses, place, radii_positive

logger = logging.getLogger(__name__)


def phi(s: Binding, x, m: int, r: int, names: NameSupply) -> Formula:
    """Дизъюнкция Φ_σ(x) по всем m-элементным наборам координат."""
    n = len(x)
    options = []
    for base in itertools.combinations(range(n), m):
        fibre = [i for i in range(n) if i not in base]
        chart = Chart(
            graph=lambda a, b, base=base, fibre=fibre: membership(s, place(n, [(base, a), (fibre, b)])),
            base_center=[x[i] for i in base],
            fibre_center=[x[i] for i in fibre],
        )
        eps = names.one("e") if base else None
        eta = names.one("h") if fibre else None
        clauses = local_graph_clauses(chart, names, eps, eta, r)
        radii = [name for name in (eps, eta) if name]
        options.append(exists(radii, And(tuple(radii_positive(*radii) + clauses))))
    return Or(tuple(options))


class SubmanifoldCompiler(SchemaCompiler):
    """Компилятор схемы Submanifold."""

    @property
    def kind(self) -> SchemaKind:
        return SchemaKind.SUBMANIFOLD

    def validate(self, inst: PredicateInstance) -> None:
        super().validate(inst)
        if not 0 <= inst.m <= inst.n:
            raise UnsupportedSchemaError(f"Размерность m={inst.m} вне диапазона [0, n={inst.n}]")

    def clauses(self, inst: PredicateInstance) -> dict[str, Formula]:
        self.validate(inst)
        s = inst.binding("S", inst.n)
        names = NameSupply()
        x_names = names.fresh("x", inst.n)
        x = vec(x_names)
        sentence = forall(
            x_names, implies(membership(s, x), phi(s, x, inst.m, inst.smoothness, names))
        )
        logger.info(f"[SchemaService] Submanifold n={inst.n} m={inst.m} r={inst.smoothness}")
        return {"interior": sentence}
