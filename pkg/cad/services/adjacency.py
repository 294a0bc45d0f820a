"""
Отношение замыкания между клетками и связные компоненты (n <= 2).

Над сечением r базы стек D состоит из точек β_1 < ... < β_t и секторов
σ_0, ..., σ_t с рациональными выборочными значениями s_0, ..., s_t. Для
соседнего сектора базы I выбирается точка x_ε ∈ I, между которой и r
ни одна кривая стека над I не пересекает прямые y = s_i. Тогда номер полосы
(s_(i-1), s_i), в которой лежит кривая γ_j при x = x_ε, задаёт её предел
в r: β_i, либо -∞ ниже s_0, либо +∞ выше s_t.
"""

import logging
from dataclasses import dataclass, field
from math import prod

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as graph_components

from polycore.services import compare, isolate_roots, make_poly, rational_between
from semialgebraic.services import SaDescription

from ..exceptions import UnsupportedDimensionError
from .decomposition import CadCell, CadTree
from .queries import cells_of

logger = logging.getLogger(__name__)

MINUS_INFINITY = "-inf"
PLUS_INFINITY = "+inf"


@dataclass
class Adjacency:
    """Отношение замыкания на листьях дерева.

    Attributes:
        pairs: Пары (i, j) номеров листьев, где лист i лежит в замыкании листа j
        unbounded: Номера неограниченных листьев
    """

    pairs: set[tuple[int, int]] = field(default_factory=set)
    unbounded: set[int] = field(default_factory=set)

    def closure(self, members: set[int]) -> set[int]:
        """Номера листьев замыкания объединения листьев members."""
        return set(members) | {i for i, j in self.pairs if j in members}


def adjacency(tree: CadTree) -> Adjacency:
    """Строит отношение замыкания для декомпозиции R^1 или R^2."""
    if tree.ambient > 2:
        raise UnsupportedDimensionError(
            f"Смежность клеток вычисляется только при n <= 2, получено n={tree.ambient}"
        )
    leaves = tree.leaves()
    number = {id(cell): k for k, cell in enumerate(leaves)}
    result = Adjacency()
    if tree.ambient == 1:
        _within_stack(leaves, number, result)
        result.unbounded |= {0, len(leaves) - 1}
        return result

    base = tree.stack(tree.root)
    for b, column in enumerate(base):
        stack = tree.stack(column)
        _within_stack(stack, number, result)
        result.unbounded |= {number[id(stack[0])], number[id(stack[-1])]}
        if b in (0, len(base) - 1):
            result.unbounded |= {number[id(cell)] for cell in stack}
    for b, column in enumerate(base):
        if not column.is_section:
            continue
        for neighbour in (b - 1, b + 1):
            limits = _limits(tree, base, b, neighbour)
            _link_stacks(tree.stack(column), tree.stack(base[neighbour]), limits, number, result)
    logger.debug(f"[CadService] Отношение замыкания: {len(result.pairs)} пар")
    return result


def _within_stack(stack: list[CadCell], number: dict, result: Adjacency) -> None:
    for position, cell in enumerate(stack):
        if cell.is_section:
            for other in (stack[position - 1], stack[position + 1]):
                result.pairs.add((number[id(cell)], number[id(other)]))


def _limits(tree: CadTree, base: list[CadCell], b: int, neighbour: int) -> list[str | int]:
    """Пределы кривых стека над base[neighbour] в точке base[b]: номер β_i или ±∞."""
    r = base[b].sample[0]
    column = tree.stack(base[b])
    separators = [cell.sample[1].lo for cell in column if not cell.is_section]
    curves = tree.levels[2]
    if not curves:
        return []
    x, y = tree.gens
    g = prod(curves[1:], start=curves[0])

    q = make_poly(prod((g.as_expr().subs(y, s) for s in separators), start=1), (x,))
    crossings = [] if q.is_ground else isolate_roots(q)
    if neighbour > b:
        far = base[neighbour + 1].sample[0] if neighbour + 1 < len(base) else None
        ahead = [c for c in crossings if compare(c, r) > 0]
        if ahead and (far is None or compare(ahead[0], far) < 0):
            far = ahead[0]
        x_eps = rational_between(r, far)
    else:
        far = base[neighbour - 1].sample[0] if neighbour > 0 else None
        behind = [c for c in crossings if compare(c, r) < 0]
        if behind and (far is None or compare(behind[-1], far) > 0):
            far = behind[-1]
        x_eps = rational_between(far, r)

    fibre = make_poly(g.as_expr().subs(x, x_eps), (y,))
    heights = [] if fibre.is_ground else isolate_roots(fibre)
    below = [sum(1 for h in heights if compare(h, s) < 0) for s in separators]
    limits = []
    for j in range(1, len(heights) + 1):
        band = next((i for i, count in enumerate(below) if j <= count), None)
        if band is None:
            limits.append(PLUS_INFINITY)
        elif band == 0:
            limits.append(MINUS_INFINITY)
        else:
            limits.append(band)
    return limits


def _link_stacks(
    column: list[CadCell], side: list[CadCell], limits: list, number: dict, result: Adjacency
) -> None:
    """Добавляет пары «клетка над сечением лежит в замыкании клетки над сектором»."""
    t = (len(column) - 1) // 2
    ends = [MINUS_INFINITY] + limits + [PLUS_INFINITY]

    def low(limit) -> int:
        if limit == MINUS_INFINITY:
            return 0
        return 2 * t + 1 if limit == PLUS_INFINITY else 2 * limit - 1

    def high(limit) -> int:
        if limit == PLUS_INFINITY:
            return 2 * t
        return -1 if limit == MINUS_INFINITY else 2 * limit - 1

    for position, cell in enumerate(side):
        target = number[id(cell)]
        if cell.is_section:
            limit = ends[(position + 1) // 2]
            if limit in (MINUS_INFINITY, PLUS_INFINITY):
                result.unbounded.add(target)
            else:
                result.pairs.add((number[id(column[2 * limit - 1])], target))
            continue
        lower, upper = ends[position // 2], ends[position // 2 + 1]
        if 0 < position < len(side) - 1 and (
            lower in (MINUS_INFINITY, PLUS_INFINITY) or upper in (MINUS_INFINITY, PLUS_INFINITY)
        ):
            result.unbounded.add(target)
        for k in range(low(lower), high(upper) + 1):
            result.pairs.add((number[id(column[k])], target))


def connected_components(d: SaDescription) -> int:
    """Число связных компонент множества в R^1 или R^2."""
    if d.ambient > 2:
        raise UnsupportedDimensionError(
            f"Связные компоненты вычисляются только при n <= 2, получено n={d.ambient}"
        )
    if d.is_trivially_empty:
        return 0
    tree, cells = cells_of(d)
    if not cells:
        return 0
    leaves = tree.leaves()
    number = {id(cell): k for k, cell in enumerate(leaves)}
    members = {number[id(cell)]: k for k, cell in enumerate(cells)}
    edges = [
        (members[i], members[j]) for i, j in adjacency(tree).pairs if i in members and j in members
    ]
    rows = np.array([e[0] for e in edges], dtype=np.int64)
    cols = np.array([e[1] for e in edges], dtype=np.int64)
    graph = csr_matrix((np.ones(len(edges)), (rows, cols)), shape=(len(cells), len(cells)))
    count, _labels = graph_components(graph, directed=False)
    logger.info(f"[CadService] {d.name}: {len(cells)} клеток, {count} компонент")
    return int(count)
