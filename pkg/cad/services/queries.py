"""
Запросы к множествам через декомпозицию: клетки множества, размерность,
пустота, равенство, поиск клетки точки.
"""

import logging
from typing import Sequence

from polycore.services import compare, dedupe, to_rat
from semialgebraic.services import SaDescription

from ..exceptions import InconsistencyError
from .decomposition import CadCell, CadTree, decompose

logger = logging.getLogger(__name__)


def set_cells(tree: CadTree, d: SaDescription) -> list[CadCell]:
    """Листья дерева, знаки на которых удовлетворяют одной из конъюнкций d.

    Raises:
        InconsistencyError: d задано в другом пространстве или использует многочлен не из дерева
    """
    if d.ambient != tree.ambient:
        raise InconsistencyError(f"Множество в R^{d.ambient}, дерево в R^{tree.ambient}")
    known = {p.as_expr() for p in tree.inputs}
    for poly in d.polys():
        if poly.as_expr() not in known:
            raise InconsistencyError(f"Многочлен {poly.as_expr()} отсутствует среди входов дерева")
    return [cell for cell in tree.leaves() if d.satisfied_by(tree.sign_map(cell))]


def cells_of(d: SaDescription) -> tuple[CadTree, list[CadCell]]:
    """Декомпозиция по многочленам d и клетки множества."""
    tree = decompose(d.polys(), d.ambient)
    return tree, set_cells(tree, d)


def dimension(d: SaDescription) -> int:
    """Наибольшая размерность клетки множества, -1 для пустого."""
    _, cells = cells_of(d)
    return max((cell.dim for cell in cells), default=-1)


def is_empty(d: SaDescription) -> bool:
    if d.is_trivially_empty:
        return True
    _, cells = cells_of(d)
    return not cells


def joint_tree(*descriptions: SaDescription) -> CadTree:
    """Общая декомпозиция для нескольких множеств одного пространства."""
    ambient = {d.ambient for d in descriptions}
    if len(ambient) != 1:
        raise InconsistencyError(f"Множества заданы в разных пространствах: {sorted(ambient)}")
    polys = dedupe(p for d in descriptions for p in d.polys())
    return decompose(polys, ambient.pop())


def sets_equal(d1: SaDescription, d2: SaDescription) -> bool:
    """Равенство множеств: обе разности пусты на общей декомпозиции."""
    tree = joint_tree(d1, d2)
    for cell in tree.leaves():
        signs = tree.sign_map(cell)
        if d1.satisfied_by(signs) != d2.satisfied_by(signs):
            logger.debug(f"[CadService] Множества различаются на клетке {cell.index}")
            return False
    return True


def is_subset(d1: SaDescription, d2: SaDescription) -> bool:
    tree = joint_tree(d1, d2)
    return all(
        d2.satisfied_by(tree.sign_map(cell))
        for cell in tree.leaves()
        if d1.satisfied_by(tree.sign_map(cell))
    )


def locate(tree: CadTree, x: Sequence) -> CadCell:
    """Лист, содержащий рациональную точку x."""
    if len(x) != tree.ambient:
        raise InconsistencyError(f"Точка из {len(x)} координат, дерево в R^{tree.ambient}")
    cell = tree.root
    for value in (to_rat(v) for v in x):
        stack = tree.stack(cell)
        chosen = stack[-1]
        for position, child in enumerate(stack):
            if not child.is_section:
                continue
            side = compare(value, child.sample[-1])
            if side == 0:
                chosen = child
                break
            if side < 0:
                chosen = stack[position - 1]
                break
        cell = chosen
    return cell
