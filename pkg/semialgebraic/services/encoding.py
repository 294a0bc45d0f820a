"""
Кодирование описаний точками пространства параметров A(n, p, q).

Точка состоит из p блоков коэффициентов (мономы степени <= q в возрастающем
лексикографическом порядке векторов показателей) и селектора l. Наборы знаков
из {-1, 0, 1}^p упорядочены лексикографически при -1 < 0 < 1; набор с номером
k входит в Σ[l], если установлен бит k числа l.
"""

import itertools
import logging
from dataclasses import dataclass
from math import comb

from sympy import Rational

from polycore.services import from_terms, make_poly, monomials, terms_of, to_rat, variables

from ..exceptions import ArityError, CapacityError, DescriptionSyntaxError, SelectorRangeError
from ..models import SIGN_RELATION
from .description import SaDescription, SignCond, complexity_of

logger = logging.getLogger(__name__)

_SIGNS = (-1, 0, 1)


def monomial_count(n: int, q: int) -> int:
    """Число мономов от n переменных степени не выше q: C(n+q, q)."""
    if n < 1 or q < 0:
        raise ArityError(f"Ожидалось n >= 1 и q >= 0, получено n={n}, q={q}")
    return comb(n + q, q)


@dataclass(frozen=True)
class ParamPoint:
    """Точка пространства параметров.

    Attributes:
        n: Размерность пространства
        p: Число многочленов
        q: Максимальная степень
        blocks: p векторов коэффициентов длины monomial_count(n, q)
        selector: Номер подмножества Σ ⊆ {-1, 0, 1}^p (произвольной длины)
    """

    n: int
    p: int
    q: int
    blocks: tuple[tuple[Rational, ...], ...]
    selector: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(to_rat(c) for c in b) for b in self.blocks))
        width = monomial_count(self.n, self.q)
        if len(self.blocks) != self.p:
            raise ArityError(f"Ожидалось {self.p} блоков, получено {len(self.blocks)}")
        for index, block in enumerate(self.blocks):
            if len(block) != width:
                raise ArityError(f"Блок {index}: ожидалось {width} коэффициентов, получено {len(block)}")

    @property
    def selector_limit(self) -> int:
        return 2 ** (3 ** self.p)


def sign_tuples(p: int) -> list[tuple[int, ...]]:
    """Все наборы знаков длины p в порядке их номеров."""
    return list(itertools.product(_SIGNS, repeat=p))


def encode(d: SaDescription, p: int, q: int) -> ParamPoint:
    """Кодирует описание сложности не выше (p, q).

    Args:
        d: Описание множества
        p: Число многочленов в точке
        q: Максимальная степень

    Returns:
        ParamPoint: Точка, декодирующаяся в то же множество
    """
    complexity = complexity_of(d)
    if not complexity.fits(p, q):
        raise CapacityError(
            f"Сложность ({complexity.p}, {complexity.q}) превышает запрошенную ({p}, {q})"
        )
    polys = d.polys()
    gens = d.gens
    polys += [make_poly(0, gens)] * (p - len(polys))
    index_of = {poly.as_expr(): i for i, poly in reversed(list(enumerate(polys)))}
    basis = monomials(d.ambient, q)
    blocks = []
    for poly in polys:
        terms = terms_of(poly)
        blocks.append(tuple(terms.get(m, Rational(0)) for m in basis))

    selector = 0
    for k, signs in enumerate(sign_tuples(p)):
        for conjunct in d.conjuncts:
            if all(atom.holds(signs[index_of[atom.poly.as_expr()]]) for atom in conjunct):
                selector |= 1 << k
                break
    logger.debug(f"[EncodingService] {d.name}: p={p}, q={q}, |Σ|={bin(selector).count('1')}")
    return ParamPoint(d.ambient, p, q, tuple(blocks), selector)


def decode(a: ParamPoint, name: str = "S") -> SaDescription:
    """Описание с одной конъюнкцией на каждый набор знаков из Σ[l]."""
    if not 0 <= a.selector < a.selector_limit:
        raise SelectorRangeError(f"Селектор {a.selector} вне диапазона [0, 2^(3^{a.p}))")
    gens = variables(a.n)
    basis = monomials(a.n, a.q)
    polys = [from_terms(dict(zip(basis, block)), gens) for block in a.blocks]
    if a.p == 0:
        # единственный пустой набор знаков задаёт всё пространство
        whole = ((SignCond(make_poly(0, gens), SIGN_RELATION[0]),),)
        return SaDescription(a.n, whole if a.selector else (), name)
    conjuncts = []
    for k, signs in enumerate(sign_tuples(a.p)):
        if a.selector >> k & 1:
            conjuncts.append(
                tuple(SignCond(poly, SIGN_RELATION[s]) for poly, s in zip(polys, signs))
            )
    return SaDescription(a.n, tuple(conjuncts), name)


def format_param_point(a: ParamPoint) -> str:
    """Текстовый формат: строка 'param n p q l', затем p строк коэффициентов."""
    lines = [f"param {a.n} {a.p} {a.q} {a.selector}"]
    lines.extend(" ".join(str(c) for c in block) for block in a.blocks)
    return "\n".join(lines) + "\n"


def parse_param_point(text: str) -> ParamPoint:
    lines = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise DescriptionSyntaxError("Пустой файл точки параметров", 1, 1)
    number, header = lines[0]
    if len(header) != 5 or header[0] != "param":
        raise DescriptionSyntaxError("Ожидался заголовок 'param n p q l'", number, 1)
    try:
        n, p, q, selector = (int(v) for v in header[1:])
    except ValueError as exc:
        raise DescriptionSyntaxError(f"Нечисловой заголовок: {' '.join(header)}", number, 1) from exc
    if len(lines) - 1 != p:
        raise DescriptionSyntaxError(f"Ожидалось {p} строк коэффициентов, получено {len(lines) - 1}", number, 1)
    blocks = []
    for number, fields in lines[1:]:
        try:
            blocks.append(tuple(Rational(v) for v in fields))
        except (TypeError, ValueError) as exc:
            raise DescriptionSyntaxError(f"Некорректный коэффициент в строке: {' '.join(fields)}", number, 1) from exc
    point = ParamPoint(n, p, q, tuple(blocks), selector)
    if not 0 <= selector < point.selector_limit:
        raise SelectorRangeError(f"Селектор {selector} вне диапазона [0, 2^(3^{p}))")
    return point
