"""
Построение цилиндрической алгебраической декомпозиции R^n, n <= 3.

Дерево строится сверху вниз: корень это R^0, дети клетки уровня k это стек
над ней, клетки уровня k + 1 в порядке возрастания последней координаты.
Позиции в стеке нумеруются с единицы: нечётные это секторы, чётные сечения.
Стеки достраиваются лениво (stack), либо целиком по уровням в пуле потоков.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from django.conf import settings
from sympy import Poly

from polycore.services import (
    AlgReal,
    coefficients_in,
    isolate_roots,
    rational_between,
    sign_at_prefix,
    sign_of,
    total_degree,
    univariate_shadow,
    variables,
)

from ..exceptions import CadCapacityError, InconsistencyError, UnsupportedDimensionError
from ..models import CellKind
from .projection import projection_levels

logger = logging.getLogger(__name__)

MAX_DIMENSION = 3


@dataclass(eq=False)
class CadCell:
    """Клетка декомпозиции.

    Attributes:
        level: Уровень клетки (длина выборочной точки)
        index: Позиции в стеках на каждом уровне, с единицы
        sample: Выборочная точка
        kinds: Вид клетки на каждом уровне
        signs: Знаки входных многочленов (только у листьев)
        children: Стек над клеткой, None пока не построен
    """

    level: int
    index: tuple[int, ...]
    sample: tuple[AlgReal, ...]
    kinds: tuple[str, ...]
    signs: tuple[int, ...] = ()
    children: list["CadCell"] | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return sum(1 for kind in self.kinds if kind == CellKind.SECTOR)

    @property
    def is_section(self) -> bool:
        return bool(self.kinds) and self.kinds[-1] == CellKind.SECTION


class CadTree:
    """Декомпозиция R^n, инвариантная по знакам входных многочленов."""

    def __init__(
        self,
        ambient: int,
        gens: Sequence,
        inputs: list[Poly],
        levels: dict[int, list[Poly]],
        threads: int = 1,
    ):
        self.ambient = ambient
        self.gens = tuple(gens)
        self.inputs = inputs
        self.levels = levels
        self.threads = max(1, threads)
        self.root = CadCell(0, (), (), ())
        self._leaves: list[CadCell] | None = None

    def stack(self, cell: CadCell) -> list[CadCell]:
        """Стек над клеткой; строится при первом обращении."""
        if cell.children is None:
            cell.children = self._lift(cell)
        return cell.children

    def leaves(self) -> list[CadCell]:
        """Клетки уровня n в цилиндрическом порядке."""
        if self._leaves is None:
            frontier = [self.root]
            for _ in range(self.ambient):
                if self.threads > 1 and len(frontier) > 1:
                    with ThreadPoolExecutor(max_workers=self.threads) as pool:
                        stacks = list(pool.map(self.stack, frontier))
                else:
                    stacks = [self.stack(cell) for cell in frontier]
                frontier = [child for stack in stacks for child in stack]
            self._leaves = frontier
            logger.info(f"[CadService] Построено {len(frontier)} клеток в R^{self.ambient}")
        return self._leaves

    def sign_map(self, cell: CadCell) -> dict:
        """Знаки входных многочленов на листе: выражение -> знак."""
        return {p.as_expr(): s for p, s in zip(self.inputs, cell.signs)}

    def input_sign(self, p: Poly, sample: Sequence) -> int:
        if p.is_ground:
            return sign_of(p.as_expr())
        return sign_at_prefix(p, sample)

    def _nullified(self, f: Poly, sample: Sequence) -> bool:
        k = len(sample)
        return all(self.input_sign(c, sample) == 0 for c in coefficients_in(f, k))

    def _section_roots(self, cell: CadCell) -> list[AlgReal]:
        k = cell.level
        active = [f for f in self.levels[k + 1] if not self._nullified(f, cell.sample)]
        if not active:
            return []
        product = prod(active[1:], start=active[0])
        shadow = univariate_shadow(product, cell.sample)
        if shadow.is_ground:
            return []
        return [
            root
            for root in isolate_roots(shadow)
            if sign_at_prefix(product, cell.sample + (root,)) == 0
        ]

    def _lift(self, cell: CadCell) -> list[CadCell]:
        roots = self._section_roots(cell)
        bounds = [None] + roots + [None]
        top = cell.level + 1 == self.ambient
        out = []
        for j in range(len(roots) + 1):
            value = AlgReal.rational(rational_between(bounds[j], bounds[j + 1]))
            out.append(self._cell(cell, 2 * j + 1, value, CellKind.SECTOR, top))
            if j < len(roots):
                out.append(self._cell(cell, 2 * j + 2, roots[j], CellKind.SECTION, top))
        return out

    def _cell(self, parent: CadCell, position: int, value: AlgReal, kind: str, top: bool) -> CadCell:
        sample = parent.sample + (value,)
        signs = tuple(self.input_sign(p, sample) for p in self.inputs) if top else ()
        return CadCell(
            parent.level + 1, parent.index + (position,), sample, parent.kinds + (kind,), signs
        )


def check_capacity(polys: Sequence[Poly], n: int) -> None:
    """Проверяет размерность и степень входа; превышение это ошибка, а не приближённый ответ."""
    if not 1 <= n <= MAX_DIMENSION:
        raise UnsupportedDimensionError(f"CAD поддерживает 1 <= n <= {MAX_DIMENSION}, получено n={n}")
    limit = getattr(settings, "RCFW_MAX_DEGREE", 8)
    for p in polys:
        if not p.is_zero and total_degree(p) > limit:
            raise CadCapacityError(
                f"Степень {total_degree(p)} многочлена {p.as_expr()} превышает лимит {limit}"
            )


def decompose(
    polys: Sequence[Poly], n: int, gens: Sequence | None = None, threads: int | None = None
) -> CadTree:
    """Строит дерево декомпозиции R^n по входным многочленам.

    Args:
        polys: Многочлены арности n
        n: Размерность пространства, не больше 3
        gens: Переменные; по умолчанию стандартные variables(n)
        threads: Число потоков подъёма; по умолчанию settings.RCFW_THREADS

    Returns:
        CadTree: Дерево с лениво построенными стеками
    """
    check_capacity(polys, n)
    gens = tuple(gens) if gens is not None else variables(n)
    for p in polys:
        if tuple(p.gens) != gens:
            raise InconsistencyError(f"Многочлен {p.as_expr()} задан над {p.gens}, ожидалось {gens}")
    if threads is None:
        threads = getattr(settings, "RCFW_THREADS", 1)
    inputs = list(polys)
    levels = projection_levels(inputs, n)
    logger.info(
        f"[CadService] Проекция: {', '.join(f'{k}:{len(v)}' for k, v in sorted(levels.items()))}"
    )
    return CadTree(n, gens, inputs, levels, threads)
