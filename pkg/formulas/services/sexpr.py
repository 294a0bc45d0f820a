"""
Запись формул s-выражениями.

    (> (+ (^ x 2) -2) 0)
    (forall ((x Real)) (exists ((y Real)) (= y x)))

Многочлены печатаются по убыванию членов в lex-порядке переменных,
упорядоченных по имени; рациональные числа как целые или p/q.
"""

import re
from dataclasses import dataclass

from sympy import Poly, Rational, Symbol, sympify

from semialgebraic.models import Relation

from ..exceptions import FormulaSyntaxError
from .ast import And, Atom, Exists, ForAll, Formula, Not, Or

SORT = "Real"

_TOKEN_RE = re.compile(r"(?P<space>\s+)|(?P<open>\()|(?P<close>\))|(?P<atom>[^\s()]+)")
_NUMBER_RE = re.compile(r"-?\d+(/\d+)?$")


def serialize(f: Formula) -> str:
    """Печатает формулу s-выражением."""
    if isinstance(f, Atom):
        return f"({Relation(f.rel).value} {serialize_term(f.lhs)} {serialize_term(f.rhs)})"
    if isinstance(f, (And, Or)):
        head = "and" if isinstance(f, And) else "or"
        return "(" + " ".join([head] + [serialize(a) for a in f.args]) + ")"
    if isinstance(f, Not):
        return f"(not {serialize(f.arg)})"
    head = "exists" if isinstance(f, Exists) else "forall"
    decls = " ".join(f"({name} {SORT})" for name in f.vars)
    return f"({head} ({decls}) {serialize(f.body)})"


def serialize_term(expr) -> str:
    expr = sympify(expr)
    if expr.is_Number:
        return str(Rational(expr))
    gens = sorted(expr.free_symbols, key=lambda s: s.name)
    poly = Poly(expr, *gens)
    terms = [_serialize_monomial(monom, Rational(coeff), gens) for monom, coeff in poly.terms()]
    if len(terms) == 1:
        return terms[0]
    return "(+ " + " ".join(terms) + ")"


def _serialize_monomial(monom, coeff: Rational, gens) -> str:
    factors = [g.name if e == 1 else f"(^ {g.name} {e})" for g, e in zip(gens, monom) if e]
    if not factors:
        return str(coeff)
    if coeff == 1 and len(factors) == 1:
        return factors[0]
    if coeff == 1:
        return "(* " + " ".join(factors) + ")"
    return "(* " + " ".join([str(coeff)] + factors) + ")"


@dataclass(frozen=True)
class _Tok:
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class _List:
    items: tuple
    line: int
    column: int


def parse_formula(text: str) -> Formula:
    """Разбирает формулу из s-выражения.

    Raises:
        FormulaSyntaxError: С номером строки и столбца
    """
    tokens = _tokenize(text)
    if not tokens:
        raise FormulaSyntaxError("Пустой ввод", 1, 1)
    node, pos = _read(tokens, 0)
    if pos != len(tokens):
        extra = tokens[pos]
        raise FormulaSyntaxError(f"Лишний текст: {extra.text!r}", extra.line, extra.column)
    return _formula(node)


def _tokenize(text: str) -> list[_Tok]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        kind = match.lastgroup
        if kind == "space":
            chunk = match.group()
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rindex("\n") + 1
        else:
            tokens.append(_Tok(match.group(), line, pos - line_start + 1))
        pos = match.end()
    return tokens


def _read(tokens: list[_Tok], pos: int):
    if pos >= len(tokens):
        last = tokens[-1]
        raise FormulaSyntaxError("Неожиданный конец ввода", last.line, last.column)
    token = tokens[pos]
    if token.text == ")":
        raise FormulaSyntaxError("Лишняя закрывающая скобка", token.line, token.column)
    if token.text != "(":
        return token, pos + 1
    items = []
    pos += 1
    while True:
        if pos >= len(tokens):
            raise FormulaSyntaxError("Незакрытая скобка", token.line, token.column)
        if tokens[pos].text == ")":
            return _List(tuple(items), token.line, token.column), pos + 1
        item, pos = _read(tokens, pos)
        items.append(item)


def _fail(message: str, node) -> None:
    raise FormulaSyntaxError(message, node.line, node.column)


def _head(node) -> str:
    if not isinstance(node, _List) or not node.items or not isinstance(node.items[0], _Tok):
        _fail("Ожидалась форма (оператор аргументы...)", node)
    return node.items[0].text


def _formula(node) -> Formula:
    head = _head(node)
    args = node.items[1:]
    if head in ("<", "=", ">"):
        if len(args) != 2:
            _fail(f"Отношение {head} требует двух аргументов", node)
        return Atom(_term(args[0]), Relation(head), _term(args[1]))
    if head == "and":
        return And(tuple(_formula(a) for a in args))
    if head == "or":
        return Or(tuple(_formula(a) for a in args))
    if head == "not":
        if len(args) != 1:
            _fail("not требует одного аргумента", node)
        return Not(_formula(args[0]))
    if head in ("exists", "forall"):
        if len(args) != 2 or not isinstance(args[0], _List):
            _fail(f"{head} требует список объявлений и тело", node)
        names = tuple(_declaration(d) for d in args[0].items)
        cls = Exists if head == "exists" else ForAll
        return cls(names, _formula(args[1]))
    _fail(f"Неизвестный оператор формулы {head!r}", node)


def _declaration(node) -> str:
    if (
        not isinstance(node, _List)
        or len(node.items) != 2
        or not all(isinstance(i, _Tok) for i in node.items)
        or node.items[1].text != SORT
    ):
        _fail(f"Ожидалось объявление (имя {SORT})", node)
    return node.items[0].text


def _term(node):
    if isinstance(node, _Tok):
        if _NUMBER_RE.match(node.text):
            return Rational(node.text)
        if node.text in ("+", "*", "-", "^"):
            _fail(f"Оператор {node.text!r} вне формы", node)
        return Symbol(node.text)
    head = _head(node)
    args = [_term(a) for a in node.items[1:]]
    if head == "+" and args:
        return sum(args[1:], args[0])
    if head == "*" and args:
        value = args[0]
        for a in args[1:]:
            value = value * a
        return value
    if head == "-" and len(args) in (1, 2):
        return -args[0] if len(args) == 1 else args[0] - args[1]
    if head == "^" and len(args) == 2:
        exponent = node.items[2]
        if not isinstance(exponent, _Tok) or not exponent.text.isdigit():
            _fail("Показатель степени должен быть натуральным числом", node)
        return args[0] ** int(exponent.text)
    _fail(f"Некорректный терм с оператором {head!r}", node)
