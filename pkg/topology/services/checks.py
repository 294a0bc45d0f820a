"""
Регулярность нулевого множества и компактность.
"""

import logging

from sympy import Poly

from cad.exceptions import InconsistencyError, UnsupportedDimensionError
from cad.services import adjacency, cells_of, is_subset
from polycore.services import derivative, make_poly
from semialgebraic.services import SaDescription, describe, intersection

from ..models import VerdictKind
from .verdicts import Compactness, Verdict

logger = logging.getLogger(__name__)


def regularity_check(f, d: SaDescription) -> Verdict:
    """Достаточный сертификат гладкости: градиент f не обращается в ноль на d.

    Args:
        f: Многочлен или выражение от переменных пространства d
        d: Множество, лежащее в {f = 0}

    Returns:
        Verdict: pass, либо fail с точкой, где f и все частные производные равны нулю

    Raises:
        InconsistencyError: d не содержится в {f = 0}
    """
    poly = make_poly(f.as_expr() if isinstance(f, Poly) else f, d.gens)
    if not is_subset(d, describe(d.ambient, [(poly.as_expr(), "=")])):
        raise InconsistencyError(f"{d.name} не лежит в нулевом множестве {poly.as_expr()}")

    critical = [(poly.as_expr(), "=")] + [
        (derivative(poly, i).as_expr(), "=") for i in range(d.ambient)
    ]
    _, cells = cells_of(intersection(d, describe(d.ambient, critical)))
    if cells:
        logger.info(f"[TopologyService] {d.name}: градиент вырождается в {cells[0].index}")
        return Verdict(VerdictKind.FAIL, reason="нулевой градиент", witness=tuple(cells[0].sample))
    return Verdict(VerdictKind.PASS)


def compactness_check(d: SaDescription) -> Compactness:
    """Замкнутость и ограниченность множества в R^1 или R^2 по клеткам.

    Ограниченность: ни одна клетка множества не уходит на бесконечность.
    Замкнутость: замыкание объединения клеток совпадает с ним самим.
    """
    if d.ambient > 2:
        raise UnsupportedDimensionError(
            f"Компактность проверяется только при n <= 2, получено n={d.ambient}"
        )
    tree, cells = cells_of(d)
    number = {id(cell): k for k, cell in enumerate(tree.leaves())}
    members = {number[id(cell)] for cell in cells}
    relation = adjacency(tree)
    result = Compactness(
        closed=relation.closure(members) == members,
        bounded=not members & relation.unbounded,
    )
    logger.debug(f"[TopologyService] {d.name}: {result}")
    return result
