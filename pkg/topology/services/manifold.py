"""
Классификация кривых и подмножеств прямой как многообразий по декомпозиции.

Каждая точка 1-клетки внутренняя. Для каждой 0-клетки в замыкании множества
считаются примыкающие 1-клетки множества (полуветви): две ветви дают
внутреннюю точку, одна ветвь даёт точку края.
"""

import logging
from collections import Counter

from cad.services import CadTree, adjacency, decompose, joint_tree, set_cells
from formulas.exceptions import UnsupportedSchemaError
from formulas.models import SchemaKind
from formulas.services import PredicateInstance
from semialgebraic.services import SaDescription, empty_set

from ..exceptions import PreconditionError
from ..models import VerdictKind
from .verdicts import Verdict, manifold, not_manifold, unsupported

logger = logging.getLogger(__name__)


def classify(
    tree: CadTree, d: SaDescription, m: int = 1, open_ends: bool = False
) -> tuple[Verdict, set[int]]:
    """Классифицирует множество на готовом дереве.

    Args:
        tree: Декомпозиция, согласованная с d (может быть мельче)
        d: Множество в R^1 или R^2
        m: Запрошенная размерность многообразия, 0 или 1
        open_ends: Не считать дефектом точку замыкания вне множества

    Returns:
        tuple: Вердикт и номера листьев, составляющих край
    """
    leaves = tree.leaves()
    number = {id(cell): k for k, cell in enumerate(leaves)}
    members = {number[id(cell)] for cell in set_cells(tree, d)}
    if not members:
        return manifold(), set()

    top = max(leaves[k].dim for k in members)
    if top > 1:
        return unsupported(f"Множество содержит клетки размерности {top}"), set()
    if m == 0:
        arcs = sorted(k for k in members if leaves[k].dim > 0)
        if arcs:
            return not_manifold(leaves[arcs[0]].sample, "1-клетка в 0-многообразии"), set()
        return manifold(), set()
    if top == 0:
        first = min(members)
        return not_manifold(leaves[first].sample, "изолированная точка"), set()

    pairs = adjacency(tree).pairs
    branches = Counter(
        i for i, j in pairs if j in members and leaves[j].dim == 1 and leaves[i].dim == 0
    )
    points = set(branches) | {k for k in members if leaves[k].dim == 0}
    boundary = set()
    for c in sorted(points):
        count, inside = branches.get(c, 0), c in members
        if inside and count == 2:
            continue
        if inside and count == 1:
            boundary.add(c)
        elif inside and count == 0:
            return not_manifold(leaves[c].sample, "изолированная точка"), set()
        elif not inside:
            if open_ends:
                continue
            return not_manifold(leaves[c].sample, "точка замыкания вне множества"), set()
        else:
            return not_manifold(leaves[c].sample, f"{count} полуветвей"), set()
    return manifold(leaves[k].sample for k in sorted(boundary)), boundary


def _check_m(m: int) -> None:
    if m not in (0, 1):
        raise PreconditionError(f"Поддерживаются только m = 0 и m = 1, получено m={m}")


def check_curve_manifold(d: SaDescription, m: int = 1) -> Verdict:
    """Проверяет, что множество в R^2 является m-многообразием (возможно с краем).

    Raises:
        PreconditionError: Множество не в R^2 или m не 0 и не 1
    """
    if d.ambient != 2:
        raise PreconditionError(f"Ожидалось множество в R^2, получено R^{d.ambient}")
    _check_m(m)
    tree = decompose(d.polys(), 2)
    verdict, _ = classify(tree, d, m)
    logger.info(f"[TopologyService] {d.name}: {verdict}")
    return verdict


def check_line_manifold(d: SaDescription, m: int = 1) -> Verdict:
    """Аналог check_curve_manifold на прямой с семантикой открытых подмногообразий.

    Конец интервала, не лежащий в множестве, дефектом не считается.
    """
    if d.ambient != 1:
        raise PreconditionError(f"Ожидалось множество в R^1, получено R^{d.ambient}")
    _check_m(m)
    tree = decompose(d.polys(), 1)
    verdict, _ = classify(tree, d, m, open_ends=True)
    logger.info(f"[TopologyService] {d.name}: {verdict}")
    return verdict


def compile_verdict(inst: PredicateInstance) -> bool:
    """Ожидаемое значение предложения Submanifold или Boundary по прямой проверке.

    Raises:
        UnsupportedSchemaError: Схема не Submanifold/Boundary или гладкость вне {0, 1}
        PreconditionError: Привязки символические или n > 2
    """
    if inst.schema not in (SchemaKind.SUBMANIFOLD, SchemaKind.BOUNDARY):
        raise UnsupportedSchemaError(f"Для схемы {inst.schema} прямой проверки нет")
    if inst.r not in (0, 1):
        raise UnsupportedSchemaError(f"Гладкость r={inst.r} не поддерживается (только 0 и 1)")
    inst.check_nash()
    if inst.n not in (1, 2):
        raise PreconditionError(f"Прямая проверка доступна при n <= 2, получено n={inst.n}")
    _check_m(inst.m)

    s = inst.bindings.get("S")
    t = inst.bindings.get("T", empty_set(inst.n)) if inst.schema == SchemaKind.BOUNDARY else None
    if not isinstance(s, SaDescription) or (t is not None and not isinstance(t, SaDescription)):
        raise PreconditionError("Прямая проверка требует явных описаний S и T")

    tree = joint_tree(s, t) if t is not None else decompose(s.polys(), inst.n)
    verdict, boundary = classify(tree, s, inst.m, open_ends=inst.n == 1)
    if inst.schema == SchemaKind.SUBMANIFOLD:
        return verdict.kind == VerdictKind.MANIFOLD
    if not verdict.ok:
        return False
    leaves = tree.leaves()
    number = {id(cell): k for k, cell in enumerate(leaves)}
    return boundary == {number[id(cell)] for cell in set_cells(tree, t)}
