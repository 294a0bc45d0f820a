"""
Вещественные алгебраические числа и точное определение знака многочлена в них.

Иррациональное число хранится как неприводимый определяющий многочлен от t
и рациональный интервал (lo, hi), на концах которого многочлен меняет знак.
Рациональное число хранится как корень t - r с вырожденным интервалом [r, r].
"""

import logging
from dataclasses import dataclass, replace
from typing import Sequence

from sympy import Dummy, Poly, Rational, Symbol, ceiling, floor

from ..exceptions import DegenerateInputError, DimensionError
from .polynomials import (
    arity,
    degree_in,
    irreducible_factors,
    make_poly,
    resultant,
    sign_of,
    to_rat,
)

logger = logging.getLogger(__name__)

T = Symbol("t")

# Число раундов грубого интервального счёта до построения исключающего результанта
_CHEAP_ROUNDS = 4


@dataclass(frozen=True)
class AlgReal:
    """Вещественное алгебраическое число.

    Attributes:
        defining: Неприводимый монический многочлен от t, корнем которого является число
        lo: Левый конец изолирующего интервала
        hi: Правый конец изолирующего интервала (lo == hi для рациональных)
    """

    defining: Poly
    lo: Rational
    hi: Rational

    @classmethod
    def rational(cls, value) -> "AlgReal":
        value = to_rat(value)
        return cls(make_poly(T - value, (T,)), value, value)

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    def bisected(self) -> "AlgReal":
        """Делит изолирующий интервал пополам."""
        if self.is_rational:
            return self
        mid = (self.lo + self.hi) / 2
        s_mid = sign_of(self.defining.eval(mid))
        if s_mid == 0:
            # неприводимый многочлен степени >= 2 не имеет рациональных корней
            return AlgReal.rational(mid)
        if s_mid == sign_of(self.defining.eval(self.lo)):
            return replace(self, lo=mid)
        return replace(self, hi=mid)

    def refined(self, width) -> "AlgReal":
        """Сужает интервал до ширины не больше width."""
        width = to_rat(width)
        current = self
        while current.width > width:
            current = current.bisected()
        return current

    def to_decimal(self, digits: int = 10) -> str:
        """Десятичное приближение с заданным числом значащих цифр."""
        if self.is_rational:
            return str(self.lo.evalf(digits))
        close = self.refined(Rational(1, 10 ** (digits + 2)))
        return str(((close.lo + close.hi) / 2).evalf(digits))

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.lo)
        return f"root({self.defining.as_expr()}, [{self.lo}, {self.hi}])"


def as_algreal(value) -> AlgReal:
    if isinstance(value, AlgReal):
        return value
    return AlgReal.rational(value)


def isolate_roots(p: Poly) -> list[AlgReal]:
    """Изолирует все различные вещественные корни одномерного многочлена.

    Кратности отбрасываются: многочлен раскладывается на неприводимые
    множители, и каждый корень получает свой определяющий множитель.

    Args:
        p: Ненулевой многочлен от одной переменной

    Returns:
        list[AlgReal]: Корни в порядке возрастания с попарно непересекающимися интервалами
    """
    if arity(p) != 1:
        raise DimensionError(f"Ожидался многочлен от одной переменной, получено {arity(p)}")
    if p.is_zero:
        raise DegenerateInputError("Нельзя изолировать корни нулевого многочлена")
    in_t = make_poly(p.as_expr().subs(p.gens[0], T), (T,))
    roots: list[AlgReal] = []
    for factor in irreducible_factors(in_t):
        if factor.degree() == 1:
            roots.append(AlgReal.rational(-factor.nth(0) / factor.nth(1)))
            continue
        for (lo, hi), _multiplicity in factor.intervals():
            roots.append(AlgReal(factor, Rational(lo), Rational(hi)))
    return _separate_all(roots)


def _separate_all(roots: list[AlgReal]) -> list[AlgReal]:
    """Сужает интервалы различных корней, пока они не станут попарно непересекающимися."""
    while True:
        roots.sort(key=lambda r: (r.lo, r.hi))
        clash = False
        for k in range(len(roots) - 1):
            a, b = roots[k], roots[k + 1]
            if a.hi >= b.lo:
                roots[k], roots[k + 1] = a.bisected(), b.bisected()
                clash = True
        if not clash:
            return roots


def compare(a, b) -> int:
    """Точное сравнение двух алгебраических чисел: -1, 0 или +1."""
    a, b = as_algreal(a), as_algreal(b)
    if a.is_rational and b.is_rational:
        return sign_of(a.lo - b.lo)
    # разные неприводимые многочлены не имеют общих корней
    same_defining = not a.is_rational and not b.is_rational and a.defining == b.defining
    if same_defining and a.hi >= b.lo and b.hi >= a.lo:
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if a.defining.count_roots(lo, hi) == 1:
            return 0
    while a.hi >= b.lo and b.hi >= a.lo:
        a, b = a.bisected(), b.bisected()
    return -1 if a.hi < b.lo else 1


def rational_between(a, b) -> Rational:
    """Самое простое рациональное число строго между a < b (None означает бесконечность)."""
    if a is None and b is None:
        return Rational(0)
    if a is None:
        b = as_algreal(b)
        return Rational(0) if b.lo > 0 else Rational(floor(b.lo)) - 1
    if b is None:
        a = as_algreal(a)
        return Rational(0) if a.hi < 0 else Rational(ceiling(a.hi)) + 1
    a, b = as_algreal(a), as_algreal(b)
    if compare(a, b) >= 0:
        raise DegenerateInputError(f"Интервал пуст: {a} >= {b}")
    while a.hi >= b.lo:
        a, b = a.bisected(), b.bisected()
    return simplest_between(a.hi, b.lo)


def simplest_between(lo: Rational, hi: Rational) -> Rational:
    """Рациональное число с наименьшим знаменателем из открытого интервала (lo, hi)."""
    if lo < 0 < hi:
        return Rational(0)
    if hi <= 0:
        return -_simplest_nonnegative(-hi, -lo)
    return _simplest_nonnegative(lo, hi)


def _simplest_nonnegative(lo: Rational, hi) -> Rational:
    # 0 <= lo < hi, hi=None означает +бесконечность; разложение в цепную дробь
    whole = Rational(floor(lo))
    if hi is None or whole + 1 < hi:
        return whole + 1
    frac_lo, frac_hi = lo - whole, hi - whole
    inner = _simplest_nonnegative(1 / frac_hi, None if frac_lo == 0 else 1 / frac_lo)
    return whole + 1 / inner


def sign_at(p: Poly, x: Sequence) -> int:
    """Точный знак многочлена в вещественной алгебраической точке.

    Args:
        p: Многочлен арности n
        x: n координат (AlgReal или рациональные)

    Returns:
        int: -1, 0 или +1
    """
    if len(x) != arity(p):
        raise DimensionError(
            f"Арность многочлена {arity(p)} не совпадает с размерностью точки {len(x)}"
        )
    return sign_at_prefix(p, x)


def sign_at_prefix(p: Poly, prefix: Sequence) -> int:
    """Знак многочлена, зависящего только от первых len(prefix) переменных."""
    q, irrational = _substitute_rationals(p, [as_algreal(v) for v in prefix])
    if not isinstance(q, Poly):
        return sign_of(q)
    if q.is_ground:
        return sign_of(q.as_expr())

    box = dict(irrational)
    for _ in range(_CHEAP_ROUNDS):
        lo, hi = _interval_eval(q, box)
        if lo > 0 or hi < 0:
            return 1 if lo > 0 else -1
        box = {g: a.bisected() for g, a in box.items()}

    logger.debug(f"[AlgebraicService] Точная проверка нуля для {q.as_expr()}")
    eliminant = _eliminant(q, box)
    sqf = eliminant.sqf_part()
    value_may_vanish = eliminant.eval(0) == 0
    while True:
        lo, hi = _interval_eval(q, box)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if value_may_vanish and sqf.count_roots(lo, hi) == 1:
            return 0
        box = {g: a.bisected() for g, a in box.items()}


def univariate_shadow(p: Poly, base: Sequence[AlgReal]) -> Poly:
    """Одномерный многочлен, среди корней которого все корни p(base, x_k).

    Рациональные координаты подставляются, иррациональные исключаются
    результантами с определяющими многочленами. Перед каждым исключением
    из многочлена выносятся степени определяющего многочлена, чтобы
    результант не обратился в ноль из-за сопряжённых корней.

    Args:
        p: Многочлен от переменных x_1..x_{k+1} (остальные не встречаются)
        base: Координаты x_1..x_k

    Returns:
        Poly: Многочлен от одной переменной x_{k+1}
    """
    k = len(base)
    gen = p.gens[k]
    q, irrational = _substitute_rationals(p, [as_algreal(v) for v in base], keep=gen)
    if not isinstance(q, Poly):
        return make_poly(q, (gen,))
    if q.is_zero:
        raise DegenerateInputError(f"Многочлен тождественно равен нулю над точкой {base}")
    for g, a in irrational:
        m = make_poly(a.defining.as_expr().subs(T, g), q.gens)
        while True:
            common = q.gcd(m)
            if common.is_ground:
                break
            q = q.exquo(common)
        q = resultant(q, m, q.gens.index(g))
    return make_poly(q.as_expr(), (gen,))


def _substitute_rationals(p: Poly, point: list[AlgReal], keep: Symbol | None = None):
    """Подставляет рациональные координаты; возвращает остаток и иррациональные координаты."""
    gens = p.gens
    for index in range(len(point), len(gens)):
        if gens[index] != keep and degree_in(p, index) > 0:
            raise DimensionError(
                f"Многочлен зависит от {gens[index]}, а точка задаёт только {len(point)} координат"
            )
    q = p
    irrational = []
    for g, a in zip(gens, point):
        if a.is_rational:
            q = q.eval(g, a.lo)
        else:
            irrational.append((g, a))
        if not isinstance(q, Poly):
            return Rational(q), []
    for g in gens[len(point):]:
        if g != keep:
            q = q.eval(g, 0)
            if not isinstance(q, Poly):
                return Rational(q), []
    return q, irrational


def _eliminant(q: Poly, box: dict[Symbol, AlgReal]) -> Poly:
    """Многочлен R(s), среди корней которого значение q в точке."""
    s = Dummy("s")
    gens = (s,) + q.gens
    current = make_poly(s - q.as_expr(), gens)
    for g, a in box.items():
        m = make_poly(a.defining.as_expr().subs(T, g), gens)
        current = resultant(current, m, gens.index(g))
    return make_poly(current.as_expr(), (s,))


def _interval_eval(q: Poly, box: dict[Symbol, AlgReal]) -> tuple[Rational, Rational]:
    """Гарантированная оценка значения q на произведении изолирующих интервалов."""
    ranges = [(box[g].lo, box[g].hi) for g in q.gens]
    total_lo, total_hi = Rational(0), Rational(0)
    for monom, coeff in q.terms():
        lo, hi = Rational(coeff), Rational(coeff)
        for (a, b), e in zip(ranges, monom):
            if e:
                lo, hi = _mul((lo, hi), _pow(a, b, e))
        total_lo += lo
        total_hi += hi
    return total_lo, total_hi


def _pow(a: Rational, b: Rational, e: int) -> tuple[Rational, Rational]:
    if a >= 0:
        return a ** e, b ** e
    if b <= 0:
        return (b ** e, a ** e) if e % 2 == 0 else (a ** e, b ** e)
    if e % 2 == 0:
        return Rational(0), max(a ** e, b ** e)
    return a ** e, b ** e


def _mul(x: tuple[Rational, Rational], y: tuple[Rational, Rational]) -> tuple[Rational, Rational]:
    products = [x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1]]
    return min(products), max(products)
