"""
Дерево формул первого порядка языка упорядоченных колец.

Атом хранит обе части отношения в раскрытом виде (sympy.expand), поэтому
структурное равенство деревьев совпадает с равенством после разбора.
"""

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from sympy import Rational, Symbol, expand, sympify

from polycore.services import sign_of
from semialgebraic.models import RELATION_SIGN, Relation

from ..exceptions import FormulaError, UnboundVariableError


@dataclass(frozen=True)
class Atom:
    """lhs ⋈ rhs, где ⋈ одно из <, =, >."""

    lhs: object
    rel: Relation
    rhs: object = 0

    def __post_init__(self):
        object.__setattr__(self, "lhs", expand(sympify(self.lhs)))
        object.__setattr__(self, "rhs", expand(sympify(self.rhs)))
        object.__setattr__(self, "rel", Relation(self.rel))

    @property
    def difference(self):
        return expand(self.lhs - self.rhs)


@dataclass(frozen=True)
class And:
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Or:
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class Exists:
    vars: tuple[str, ...]
    body: "Formula"

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))


@dataclass(frozen=True)
class ForAll:
    vars: tuple[str, ...]
    body: "Formula"

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))


Formula = Union[Atom, And, Or, Not, Exists, ForAll]
Quantifier = (Exists, ForAll)

TRUE = And(())
FALSE = Or(())


# Конструкторы, которыми пользуются компиляторы схем

def lt(a, b=0) -> Atom:
    return Atom(a, Relation.LT, b)


def eq(a, b=0) -> Atom:
    return Atom(a, Relation.EQ, b)


def gt(a, b=0) -> Atom:
    return Atom(a, Relation.GT, b)


def le(a, b=0) -> Or:
    return Or((lt(a, b), eq(a, b)))


def ge(a, b=0) -> Or:
    return Or((gt(a, b), eq(a, b)))


def conj(*parts: Formula) -> And:
    return And(parts)


def disj(*parts: Formula) -> Or:
    return Or(parts)


def implies(a: Formula, b: Formula) -> Or:
    return Or((Not(a), b))


def iff(a: Formula, b: Formula) -> And:
    return And((implies(a, b), implies(b, a)))


def exists(names: Iterable[str], body: Formula) -> Formula:
    names = tuple(names)
    return Exists(names, body) if names else body


def forall(names: Iterable[str], body: Formula) -> Formula:
    names = tuple(names)
    return ForAll(names, body) if names else body


def var(name: str) -> Symbol:
    return Symbol(name)


def vec(names: Iterable[str]) -> list[Symbol]:
    return [Symbol(n) for n in names]


def sq_dist(u, v):
    """Квадрат евклидова расстояния между векторами выражений."""
    return sum(((a - b) ** 2 for a, b in zip(u, v)), sympify(0))


def vec_eq(u, v) -> And:
    return And(tuple(eq(a, b) for a, b in zip(u, v)))


def free_vars(f: Formula) -> set[str]:
    """Имена свободных переменных формулы."""
    if isinstance(f, Atom):
        return {s.name for s in (f.lhs.free_symbols | f.rhs.free_symbols)}
    if isinstance(f, (And, Or)):
        return set().union(*(free_vars(a) for a in f.args)) if f.args else set()
    if isinstance(f, Not):
        return free_vars(f.arg)
    return free_vars(f.body) - set(f.vars)


def is_quantifier_free(f: Formula) -> bool:
    if isinstance(f, Atom):
        return True
    if isinstance(f, (And, Or)):
        return all(is_quantifier_free(a) for a in f.args)
    if isinstance(f, Not):
        return is_quantifier_free(f.arg)
    return False


def atoms_of(f: Formula) -> list[Atom]:
    if isinstance(f, Atom):
        return [f]
    if isinstance(f, (And, Or)):
        return [a for arg in f.args for a in atoms_of(arg)]
    if isinstance(f, Not):
        return atoms_of(f.arg)
    return atoms_of(f.body)


def substitute(f: Formula, mapping: Mapping[str, object]) -> Formula:
    """Одновременная подстановка выражений вместо свободных переменных."""
    if not mapping:
        return f
    if isinstance(f, Atom):
        table = {Symbol(k): sympify(v) for k, v in mapping.items()}
        return Atom(
            f.lhs.subs(table, simultaneous=True), f.rel, f.rhs.subs(table, simultaneous=True)
        )
    if isinstance(f, And):
        return And(tuple(substitute(a, mapping) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(substitute(a, mapping) for a in f.args))
    if isinstance(f, Not):
        return Not(substitute(f.arg, mapping))
    inner = {k: v for k, v in mapping.items() if k not in f.vars}
    return type(f)(f.vars, substitute(f.body, inner))


def normalize(f: Formula) -> Formula:
    """Переименовывает связанные переменные так, чтобы на любом пути от корня
    к листу ни одна переменная не связывалась дважды и не совпадала со свободной."""
    return _normalize(f, frozenset(free_vars(f)))


def _normalize(f: Formula, scope: frozenset) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, And):
        return And(tuple(_normalize(a, scope) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(_normalize(a, scope) for a in f.args))
    if isinstance(f, Not):
        return Not(_normalize(f.arg, scope))
    renamed, names = {}, []
    taken = set(scope)
    for name in f.vars:
        fresh = name
        k = 1
        while fresh in taken:
            fresh = f"{name}_{k}"
            k += 1
        taken.add(fresh)
        names.append(fresh)
        if fresh != name:
            renamed[name] = Symbol(fresh)
    body = substitute(f.body, renamed) if renamed else f.body
    return type(f)(tuple(names), _normalize(body, frozenset(taken)))


def skeleton(f: Formula):
    """Форма кванторной структуры: бескванторные поддеревья заменены на 'qf'."""
    if is_quantifier_free(f):
        return "qf"
    if isinstance(f, (And, Or)):
        return (type(f).__name__.lower(), tuple(skeleton(a) for a in f.args))
    if isinstance(f, Not):
        return ("not", skeleton(f.arg))
    kind = "exists" if isinstance(f, Exists) else "forall"
    return (kind, len(f.vars), skeleton(f.body))


def eval_qf(f: Formula, assignment: Mapping[str, object]) -> bool:
    """Истинность бескванторной формулы при рациональном означивании.

    Args:
        f: Бескванторная формула
        assignment: Имя переменной -> рациональное значение

    Returns:
        bool: Классическое значение истинности
    """
    if isinstance(f, Atom):
        table = {}
        for s in f.lhs.free_symbols | f.rhs.free_symbols:
            if s.name not in assignment:
                raise UnboundVariableError(f"Переменная {s.name} не означена")
            table[s] = Rational(assignment[s.name])
        value = f.difference.subs(table) if table else f.difference
        return sign_of(value) == RELATION_SIGN[f.rel]
    if isinstance(f, And):
        return all(eval_qf(a, assignment) for a in f.args)
    if isinstance(f, Or):
        return any(eval_qf(a, assignment) for a in f.args)
    if isinstance(f, Not):
        return not eval_qf(f.arg, assignment)
    raise FormulaError("eval_qf применима только к бескванторным формулам")
