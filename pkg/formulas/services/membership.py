"""
Формулы принадлежности точки множеству.

Множество подставляется либо явно (описание SaDescription), либо символически:
множество name сложности (p, q) задаётся переменными коэффициентов name.i.k и
селектора name.l, а принадлежность записывается дизъюнкцией по значениям l.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Union

from sympy import Symbol, sympify

from polycore.services import monomials
from semialgebraic.models import SIGN_RELATION
from semialgebraic.services import SaDescription, monomial_count, sign_tuples

from ..exceptions import UnsupportedSchemaError
from .ast import And, Atom, Formula, Or, eq, free_vars

logger = logging.getLogger(__name__)

# Дизъюнкция по селектору растёт как 2^(3^p); при p = 3 это уже 2^27 случаев
MAX_SYMBOLIC_P = 2


@dataclass(frozen=True)
class SymbolicSet:
    """Параметр-множество в R^n сложности не выше (p, q)."""

    name: str
    n: int
    p: int = 1
    q: int = 2

    def coefficient(self, i: int, k: int) -> Symbol:
        return Symbol(f"{self.name}.{i}.{k}")

    @property
    def selector(self) -> Symbol:
        return Symbol(f"{self.name}.l")

    def variable_names(self) -> set[str]:
        width = monomial_count(self.n, self.q)
        names = {self.coefficient(i, k).name for i in range(self.p) for k in range(width)}
        return names | {self.selector.name}


Binding = Union[SaDescription, SymbolicSet]


def binding_ambient(binding: Binding) -> int:
    return binding.ambient if isinstance(binding, SaDescription) else binding.n


def membership(binding: Binding, terms: Sequence) -> Formula:
    """Формула «точка terms принадлежит множеству».

    Args:
        binding: Описание или символическое множество
        terms: Координаты точки (выражения sympy)

    Returns:
        Formula: Дизъюнкция конъюнкций атомов
    """
    terms = [sympify(t) for t in terms]
    if len(terms) != binding_ambient(binding):
        raise UnsupportedSchemaError(
            f"Точка из {len(terms)} координат подставляется в множество из R^{binding_ambient(binding)}"
        )
    if isinstance(binding, SaDescription):
        return _inline(binding, terms)
    return _symbolic(binding, terms)


def _inline(d: SaDescription, terms) -> Formula:
    table = dict(zip(d.gens, terms))
    return Or(
        tuple(
            And(
                tuple(
                    Atom(atom.poly.as_expr().subs(table, simultaneous=True), atom.rel)
                    for atom in conjunct
                )
            )
            for conjunct in d.conjuncts
        )
    )


def _symbolic(s: SymbolicSet, terms) -> Formula:
    if s.p > MAX_SYMBOLIC_P:
        raise UnsupportedSchemaError(
            f"Символическое множество {s.name}: p={s.p} > {MAX_SYMBOLIC_P}, "
            "дизъюнкция по селектору слишком велика"
        )
    basis = monomials(s.n, s.q)
    polys = []
    for i in range(s.p):
        value = sympify(0)
        for k, exps in enumerate(basis):
            monomial = sympify(1)
            for t, e in zip(terms, exps):
                monomial *= t ** e
            value += s.coefficient(i, k) * monomial
        polys.append(value)
    tuples = sign_tuples(s.p)
    cases = []
    for selector in range(2 ** len(tuples)):
        chosen = [signs for k, signs in enumerate(tuples) if selector >> k & 1]
        if not chosen:
            continue
        sign_cases = Or(
            tuple(
                And(tuple(Atom(f, SIGN_RELATION[sign]) for f, sign in zip(polys, signs)))
                for signs in chosen
            )
        )
        cases.append(And((eq(s.selector, selector), sign_cases)))
    logger.debug(f"[MembershipService] {s.name}: {len(cases)} значений селектора")
    return Or(tuple(cases))


def parameter_names(f: Formula) -> set[str]:
    """Имена множеств-параметров по свободным переменным вида name.i.k и name.l."""
    return {name.split(".", 1)[0] for name in free_vars(f) if "." in name}
