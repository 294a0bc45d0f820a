"""
Решение замкнутых предложений теории вещественно замкнутых полей через CAD.

Связанные переменные получают уровни по глубине вложенности кванторов:
переменные, связанные на одной глубине в разных ветвях, делят уровень.
Истинность вычисляется рекурсивно по дереву: ∃ это «хотя бы одна клетка
стека», ∀ это «все клетки стека»; стеки достраиваются лениво.
"""

import logging
from typing import Iterator

from django.conf import settings
from sympy import Symbol

from formulas.services import (
    And,
    Atom,
    Exists,
    ForAll,
    Formula,
    Not,
    Or,
    atoms_of,
    eval_qf,
    free_vars,
    normalize,
    substitute,
)
from polycore.services import dedupe, make_poly
from semialgebraic.models import RELATION_SIGN

from ..exceptions import CadCapacityError, InconsistencyError
from .decomposition import CadCell, CadTree, decompose

logger = logging.getLogger(__name__)


def level_symbol(k: int) -> Symbol:
    return Symbol(f"_v{k}")


def assign_levels(f: Formula, depth: int = 0) -> tuple[Formula, int]:
    """Переименовывает связанные переменные в символы уровней.

    Returns:
        tuple: Формула над символами _v1.._vL и число уровней L
    """
    if isinstance(f, Atom):
        return f, depth
    if isinstance(f, (And, Or)):
        parts = [assign_levels(a, depth) for a in f.args]
        return type(f)(tuple(p for p, _ in parts)), max((d for _, d in parts), default=depth)
    if isinstance(f, Not):
        inner, deepest = assign_levels(f.arg, depth)
        return Not(inner), deepest
    names = tuple(level_symbol(depth + i + 1).name for i in range(len(f.vars)))
    body = substitute(f.body, {old: Symbol(new) for old, new in zip(f.vars, names)})
    body, deepest = assign_levels(body, depth + len(names))
    return type(f)(names, body), deepest


class _Evaluator:
    def __init__(self, tree: CadTree):
        self.tree = tree
        self._polys: dict[Atom, object] = {}

    def holds(self, f: Formula, cell: CadCell) -> bool:
        if isinstance(f, Atom):
            return self.tree.input_sign(self._poly(f), cell.sample) == RELATION_SIGN[f.rel]
        if isinstance(f, And):
            return all(self.holds(a, cell) for a in f.args)
        if isinstance(f, Or):
            return any(self.holds(a, cell) for a in f.args)
        if isinstance(f, Not):
            return not self.holds(f.arg, cell)
        cells = self._descend(cell, len(f.vars))
        if isinstance(f, Exists):
            return any(self.holds(f.body, c) for c in cells)
        return all(self.holds(f.body, c) for c in cells)

    def _poly(self, atom: Atom):
        if atom not in self._polys:
            self._polys[atom] = make_poly(atom.difference, self.tree.gens)
        return self._polys[atom]

    def _descend(self, cell: CadCell, count: int) -> Iterator[CadCell]:
        if count == 0:
            yield cell
            return
        for child in self.tree.stack(cell):
            yield from self._descend(child, count - 1)


def decide(sentence: Formula) -> bool:
    """Истинность замкнутого предложения над вещественными числами.

    Raises:
        InconsistencyError: У формулы есть свободные переменные
        CadCapacityError: Число уровней больше settings.RCFW_MAX_VARIABLES
    """
    free = free_vars(sentence)
    if free:
        raise InconsistencyError(f"Предложение содержит свободные переменные: {sorted(free)}")
    leveled, depth = assign_levels(normalize(sentence))
    limit = getattr(settings, "RCFW_MAX_VARIABLES", 3)
    if depth > limit:
        raise CadCapacityError(f"Предложению нужно {depth} переменных, лимит {limit}")
    if depth == 0:
        return eval_qf(leveled, {})
    gens = tuple(level_symbol(k) for k in range(1, depth + 1))
    polys = dedupe(make_poly(atom.difference, gens) for atom in atoms_of(leveled))
    tree = decompose(polys, depth, gens=gens, threads=1)
    result = _Evaluator(tree).holds(leveled, tree.root)
    logger.info(f"[CadService] Решено предложение с {depth} переменными: {result}")
    return result
