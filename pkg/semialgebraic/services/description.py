"""
Описания полуалгебраических множеств в виде объединений конъюнкций знаковых условий.
"""

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from sympy import Poly

from polycore.services import (
    dedupe,
    eval_poly,
    format_poly,
    make_poly,
    sign_of,
    total_degree,
    variables,
)

from ..exceptions import ArityError
from ..models import RELATION_SIGN, Relation


@dataclass(frozen=True)
class SignCond:
    """Атом f ⋈ 0, где ⋈ одно из <, =, >."""

    poly: Poly
    rel: Relation

    @property
    def sign(self) -> int:
        return RELATION_SIGN[Relation(self.rel)]

    def holds(self, sign: int) -> bool:
        return sign == self.sign

    def __str__(self) -> str:
        return f"{format_poly(self.poly)} {Relation(self.rel).value} 0"


@dataclass(frozen=True)
class SaDescription:
    """Объединение (внешний кортеж) пересечений (внутренние кортежи) знаковых условий.

    Attributes:
        ambient: Размерность объемлющего пространства R^n
        conjuncts: Конъюнкции; пустой внешний кортеж задаёт пустое множество
        name: Имя множества из DSL, в сравнении не участвует
    """

    ambient: int
    conjuncts: tuple[tuple[SignCond, ...], ...]
    name: str = field(default="S", compare=False)

    def __post_init__(self):
        if self.ambient < 1:
            raise ArityError(f"Размерность пространства должна быть >= 1, получено {self.ambient}")
        conjuncts = tuple(tuple(c) for c in self.conjuncts)
        object.__setattr__(self, "conjuncts", conjuncts)
        gens = variables(self.ambient)
        for conjunct in conjuncts:
            if not conjunct:
                raise ArityError("Пустая конъюнкция недопустима")
            for atom in conjunct:
                if atom.poly.gens != gens:
                    raise ArityError(
                        f"Атом {atom} задан над {atom.poly.gens}, ожидалось {gens}"
                    )

    @property
    def gens(self):
        return variables(self.ambient)

    @property
    def is_trivially_empty(self) -> bool:
        return not self.conjuncts

    def polys(self) -> list[Poly]:
        """Различные многочлены атомов в порядке первого появления."""
        return dedupe(atom.poly for conjunct in self.conjuncts for atom in conjunct)

    def atoms(self) -> list[SignCond]:
        return [atom for conjunct in self.conjuncts for atom in conjunct]

    def satisfied_by(self, signs: dict) -> bool:
        """Истинность на точке, заданной знаками своих многочленов.

        Args:
            signs: Отображение «выражение многочлена -> знак в точке»
        """
        return any(
            all(atom.holds(signs[atom.poly.as_expr()]) for atom in conjunct)
            for conjunct in self.conjuncts
        )

    def with_name(self, name: str) -> "SaDescription":
        return SaDescription(self.ambient, self.conjuncts, name)


@dataclass(frozen=True)
class Complexity:
    """Пара (p, q): число атомов и максимальная степень."""

    p: int
    q: int

    def fits(self, p: int, q: int) -> bool:
        return self.p <= p and self.q <= q


def sign_cond(expr, rel, ambient: int) -> SignCond:
    return SignCond(make_poly(expr, variables(ambient)), Relation(rel))


def describe(ambient: int, *conjuncts: Iterable[tuple], name: str = "S") -> SaDescription:
    """Короткий конструктор: каждая конъюнкция это список пар (выражение, отношение).

    Пример: describe(2, [(x**2 + y**2 - 1, "=")]) задаёт окружность.
    """
    return SaDescription(
        ambient,
        tuple(tuple(sign_cond(expr, rel, ambient) for expr, rel in c) for c in conjuncts),
        name,
    )


def empty_set(ambient: int) -> SaDescription:
    return SaDescription(ambient, ())


def whole_space(ambient: int) -> SaDescription:
    """R^n как одна конъюнкция 0 = 0."""
    return SaDescription(ambient, ((sign_cond(0, Relation.EQ, ambient),),))


def complexity_of(d: SaDescription) -> Complexity:
    """Сложность данного описания: число атомов и максимальная степень (0 для пустого)."""
    atoms = d.atoms()
    q = max((total_degree(atom.poly) for atom in atoms), default=0)
    return Complexity(len(atoms), q)


def cobordism_complexity(m: SaDescription, m0: SaDescription, m1: SaDescription) -> Complexity:
    """Сложность кобордизма: покомпонентный максимум сложностей M, M0, M1."""
    parts = [complexity_of(d) for d in (m, m0, m1)]
    return Complexity(max(c.p for c in parts), max(c.q for c in parts))


def member(d: SaDescription, x: Sequence) -> bool:
    """Принадлежность рациональной точки множеству."""
    if len(x) != d.ambient:
        raise ArityError(f"Точка размерности {len(x)} не лежит в R^{d.ambient}")
    cache: dict = {}
    for conjunct in d.conjuncts:
        ok = True
        for atom in conjunct:
            key = atom.poly.as_expr()
            if key not in cache:
                cache[key] = sign_of(eval_poly(atom.poly, x))
            if not atom.holds(cache[key]):
                ok = False
                break
        if ok:
            return True
    return False


def union(*parts: SaDescription) -> SaDescription:
    ambient = _common_ambient(parts)
    return SaDescription(ambient, tuple(c for d in parts for c in d.conjuncts))


def intersection(*parts: SaDescription) -> SaDescription:
    """Пересечение с раскрытием скобок по конъюнкциям."""
    ambient = _common_ambient(parts)
    conjuncts: list[tuple[SignCond, ...]] = [()]
    for d in parts:
        conjuncts = [left + right for left in conjuncts for right in d.conjuncts]
    return SaDescription(ambient, tuple(c for c in conjuncts if c))


def embed(d: SaDescription, coordinates: Sequence[int], ambient: int) -> SaDescription:
    """Переписывает описание из R^k в R^N на выбранных координатах.

    Args:
        d: Описание в R^k
        coordinates: k различных индексов координат R^N
        ambient: N
    """
    if len(coordinates) != d.ambient or len(set(coordinates)) != len(coordinates):
        raise ArityError(f"Нужно {d.ambient} различных координат, получено {list(coordinates)}")
    if any(not 0 <= c < ambient for c in coordinates):
        raise ArityError(f"Координаты {list(coordinates)} вне R^{ambient}")
    old = d.gens
    new = variables(ambient)
    mapping = {g: new[c] for g, c in zip(old, coordinates)}
    return SaDescription(
        ambient,
        tuple(
            tuple(
                SignCond(make_poly(atom.poly.as_expr().subs(mapping, simultaneous=True), new), atom.rel)
                for atom in conjunct
            )
            for conjunct in d.conjuncts
        ),
        d.name,
    )


def product(left: SaDescription, right: SaDescription) -> SaDescription:
    """Декартово произведение left × right в R^(k+l)."""
    ambient = left.ambient + right.ambient
    return intersection(
        embed(left, range(left.ambient), ambient),
        embed(right, range(left.ambient, ambient), ambient),
    )


def transpose(d: SaDescription) -> SaDescription:
    """Меняет местами блоки координат графика в R^(2n)."""
    if d.ambient % 2:
        raise ArityError(f"Транспонировать можно только график в R^(2n), получено R^{d.ambient}")
    n = d.ambient // 2
    return embed(d, list(range(n, 2 * n)) + list(range(n)), d.ambient)


def _common_ambient(parts: Sequence[SaDescription]) -> int:
    if not parts:
        raise ArityError("Нужно хотя бы одно описание")
    ambients = {d.ambient for d in parts}
    if len(ambients) != 1:
        raise ArityError(f"Описания в разных пространствах: {sorted(ambients)}")
    return ambients.pop()
