"""
Точная арифметика многочленов с рациональными коэффициентами.

Многочлен представлен как sympy.Poly над QQ с явным списком переменных:
арность многочлена равна числу переменных, а не числу реально встречающихся.
"""

import itertools
import logging
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import Matrix, Poly, QQ, Rational, Symbol, expand, symbols
from sympy import resultant as sympy_resultant

from ..exceptions import DegenerateInputError, DimensionError

logger = logging.getLogger(__name__)

Rat = Rational

_SMALL_NAMES = ("x", "y", "z")


def variables(n: int) -> tuple[Symbol, ...]:
    """Возвращает стандартные переменные пространства R^n.

    Args:
        n: Размерность пространства

    Returns:
        tuple: x, y, z при n <= 3, иначе x1..xn
    """
    if n < 0:
        raise DimensionError(f"Отрицательная размерность: {n}")
    if n <= len(_SMALL_NAMES):
        return tuple(Symbol(name) for name in _SMALL_NAMES[:n])
    return tuple(symbols(f"x1:{n + 1}"))


def to_rat(value) -> Rational:
    """Приводит int, str, Fraction или Rational к точному рациональному числу."""
    if isinstance(value, bool):
        raise TypeError("Булево значение не является рациональным числом")
    if isinstance(value, Rational):
        return value
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, (int, str)):
        return Rational(value)
    raise TypeError(f"Ожидалось точное рациональное число, получено {type(value).__name__}")


def make_poly(expr, gens: Sequence[Symbol]) -> Poly:
    """Строит многочлен над QQ по выражению и списку переменных."""
    if not gens:
        raise DimensionError("Многочлен должен иметь хотя бы одну переменную")
    return Poly(expr, *gens, domain=QQ)


def from_terms(terms: dict[tuple[int, ...], object], gens: Sequence[Symbol]) -> Poly:
    """Собирает многочлен из отображения «вектор показателей -> коэффициент»."""
    clean = {tuple(exps): to_rat(coeff) for exps, coeff in terms.items() if to_rat(coeff) != 0}
    for exps in clean:
        if len(exps) != len(gens):
            raise DimensionError(
                f"Вектор показателей {exps} не соответствует арности {len(gens)}"
            )
    if not clean:
        return make_poly(0, gens)
    return Poly.from_dict(clean, *gens, domain=QQ)


def terms_of(p: Poly) -> dict[tuple[int, ...], Rational]:
    """Отображение «вектор показателей -> ненулевой коэффициент»."""
    return {monom: Rational(coeff) for monom, coeff in p.terms() if coeff != 0}


def arity(p: Poly) -> int:
    return len(p.gens)


def total_degree(p: Poly) -> int:
    """Полная степень; у нулевого многочлена она считается равной 0."""
    if p.is_zero:
        return 0
    return int(p.total_degree())


def degree_in(p: Poly, i: int) -> int:
    """Степень по переменной с индексом i; -1 для нулевого многочлена."""
    _check_index(p, i)
    if p.is_zero:
        return -1
    return int(p.degree(p.gens[i]))


def sign_of(value) -> int:
    """Знак точного числа: -1, 0 или +1."""
    value = Rational(value)
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def eval_poly(p: Poly, x: Sequence) -> Rational:
    """Точное значение многочлена в рациональной точке.

    Args:
        p: Многочлен арности n
        x: Точка из n рациональных координат

    Returns:
        Rational: Значение p(x)
    """
    if len(x) != arity(p):
        raise DimensionError(
            f"Арность многочлена {arity(p)} не совпадает с размерностью точки {len(x)}"
        )
    if p.is_zero:
        return Rational(0)
    return Rational(p.eval(tuple(to_rat(v) for v in x)))


def derivative(p: Poly, i: int) -> Poly:
    """Формальная частная производная по переменной с индексом i."""
    _check_index(p, i)
    return p.diff(p.gens[i])


def resultant(p: Poly, q: Poly, i: int) -> Poly:
    """Результант по переменной с индексом i.

    Знак соответствует определителю матрицы Сильвестра, в которой строки
    коэффициентов p идут первыми. Вычисляется алгоритмом субрезультантов sympy.

    Args:
        p: Первый многочлен
        q: Второй многочлен той же арности
        i: Индекс исключаемой переменной

    Returns:
        Poly: Результант, многочлен той же арности без переменной i
    """
    _check_same_gens(p, q)
    _check_index(p, i)
    dp, dq = degree_in(p, i), degree_in(q, i)
    if dp <= 0 and dq <= 0:
        raise DegenerateInputError(
            f"Оба многочлена постоянны по переменной {p.gens[i]}: результант не определён"
        )
    if p.is_zero or q.is_zero:
        return make_poly(0, p.gens)
    if dq == 0:
        return q ** dp
    if dp == 0:
        return p ** dq
    value = sympy_resultant(p.as_expr(), q.as_expr(), p.gens[i])
    return make_poly(expand(value), p.gens)


def coefficients_in(p: Poly, i: int) -> list[Poly]:
    """Коэффициенты p как многочлена от переменной i, от старшего к младшему."""
    _check_index(p, i)
    if p.is_zero:
        return [make_poly(0, p.gens)]
    univariate = Poly(p.as_expr(), p.gens[i])
    return [make_poly(c, p.gens) for c in univariate.all_coeffs()]


def principal_subresultant_coefficients(p: Poly, q: Poly, i: int) -> list[Poly]:
    """Главные коэффициенты субрезультантов psc_0..psc_{min(m,n)-1}.

    psc_j равен определителю квадратной подматрицы Сильвестра из первых
    m+n-2j столбцов; psc_0 совпадает с результантом.
    """
    _check_same_gens(p, q)
    m, n = degree_in(p, i), degree_in(q, i)
    if m < 1 or n < 1:
        return []
    a = [c.as_expr() for c in coefficients_in(p, i)]
    b = [c.as_expr() for c in coefficients_in(q, i)]
    result = []
    for j in range(min(m, n)):
        size = m + n - 2 * j
        rows = []
        for r in range(n - j):
            rows.append([a[col - r] if 0 <= col - r <= m else 0 for col in range(size)])
        for r in range(m - j):
            rows.append([b[col - r] if 0 <= col - r <= n else 0 for col in range(size)])
        result.append(make_poly(expand(Matrix(rows).det()), p.gens))
    return result


def reducta(p: Poly, i: int) -> list[Poly]:
    """Редукты p по переменной i: p, p без старшего члена и т.д., пока степень >= 1."""
    gen = p.gens[i]
    out = []
    current = p
    while not current.is_zero and degree_in(current, i) >= 1:
        out.append(current)
        lead = coefficients_in(current, i)[0]
        current = current - lead * make_poly(gen ** degree_in(current, i), p.gens)
    return out


def irreducible_factors(p: Poly) -> list[Poly]:
    """Неприводимые множители положительной степени, нормированные до монических."""
    if p.is_zero:
        raise DegenerateInputError("Нулевой многочлен нельзя разложить на множители")
    if p.is_ground:
        return []
    _, factors = p.factor_list()
    out = []
    for factor, _multiplicity in factors:
        factor = make_poly(factor.as_expr(), p.gens)
        if not factor.is_ground:
            out.append(factor.monic())
    return out


def dedupe(polys: Iterable[Poly]) -> list[Poly]:
    """Убирает повторы, сохраняя порядок первого появления."""
    seen = set()
    out = []
    for p in polys:
        key = p.as_expr()
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def monomials(n: int, q: int) -> list[tuple[int, ...]]:
    """Векторы показателей степени <= q в возрастающем лексикографическом порядке."""
    return [e for e in itertools.product(range(q + 1), repeat=n) if sum(e) <= q]


def _check_index(p: Poly, i: int) -> None:
    if not 0 <= i < arity(p):
        raise DimensionError(f"Индекс переменной {i} вне диапазона [0, {arity(p)})")


def _check_same_gens(p: Poly, q: Poly) -> None:
    if p.gens != q.gens:
        raise DimensionError(f"Разные наборы переменных: {p.gens} и {q.gens}")


def format_poly(p: Poly) -> str:
    """Печатает многочлен в синтаксисе parse_poly, члены по убыванию (lex).

    Examples:
        x^2 + y^2 - 1, -1/2*x*y + 3
    """
    if p.is_zero:
        return "0"
    parts = []
    for monom, coeff in p.terms():
        coeff = Rational(coeff)
        factors = [
            g.name if e == 1 else f"{g.name}^{e}" for g, e in zip(p.gens, monom) if e
        ]
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts)
