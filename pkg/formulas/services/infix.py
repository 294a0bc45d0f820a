"""
Инфиксная запись формул для командной строки.

    forall x. exists y. y^2 = x
    exists x. forall y. (y - x)^2 >= 0
    ~(x > 0) | x^2 + 1 > 0 -> true

Приоритет по убыванию: ~, &, |, ->, <->. Квантор действует до конца
выражения или до закрывающей скобки.
"""

from sympy import Symbol

from polycore.exceptions import PolySyntaxError
from polycore.services import PolyExpressionParser, Token, TokenStream, tokenize
from semialgebraic.models import Relation

from ..exceptions import FormulaSyntaxError
from .ast import FALSE, TRUE, And, Atom, Exists, ForAll, Formula, Not, Or, iff, implies

_KEYWORDS = {"forall", "exists", "true", "false"}

_RELATIONS = {
    "<": (Relation.LT,),
    "=": (Relation.EQ,),
    ">": (Relation.GT,),
    "<=": (Relation.LT, Relation.EQ),
    ">=": (Relation.GT, Relation.EQ),
    "!=": (Relation.LT, Relation.GT),
}


def parse_infix(text: str) -> Formula:
    """Разбирает формулу в инфиксной записи.

    Нестрогие отношения раскрываются в дизъюнкции строгих атомов,
    цепочки a < b < c в конъюнкции.
    """
    try:
        parser = _InfixParser(TokenStream(tokenize(text)))
        result = parser.formula()
        token = parser.stream.peek()
        if token.kind != "eof":
            parser.stream.fail(f"Лишний текст: {token.text!r}", token)
        return result
    except PolySyntaxError as exc:
        raise FormulaSyntaxError(exc.message, exc.line, exc.column) from exc


def _resolve(token: Token) -> Symbol:
    if token.text in _KEYWORDS:
        raise PolySyntaxError(
            f"Ключевое слово {token.text!r} не может быть переменной", token.line, token.column
        )
    return Symbol(token.text)


class _InfixParser:
    def __init__(self, stream: TokenStream):
        self.stream = stream

    def formula(self) -> Formula:
        left = self.implication()
        if self.stream.accept("<->"):
            return iff(left, self.implication())
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.stream.accept("->"):
            return implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        parts = [self.conjunction()]
        while self.stream.accept("|"):
            parts.append(self.conjunction())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conjunction(self) -> Formula:
        parts = [self.unary()]
        while self.stream.accept("&"):
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def unary(self) -> Formula:
        s = self.stream
        if s.accept("~"):
            return Not(self.unary())
        if s.at("forall", "exists"):
            kind = s.next().text
            names = [self._name()]
            while not s.at("."):
                s.accept(",")
                names.append(self._name())
            s.expect(".")
            body = self.formula()
            return (ForAll if kind == "forall" else Exists)(tuple(names), body)
        return self.primary()

    def primary(self) -> Formula:
        s = self.stream
        if s.accept("true"):
            return TRUE
        if s.accept("false"):
            return FALSE
        if not s.at("("):
            return self.chain()
        start = s.pos
        try:
            return self.chain()
        except PolySyntaxError as as_atom:
            s.pos = start
            try:
                s.expect("(")
                inner = self.formula()
                s.expect(")")
                return inner
            except PolySyntaxError as as_group:
                furthest = max(
                    (as_atom, as_group), key=lambda e: (e.line, e.column)
                )
                raise furthest

    def chain(self) -> Formula:
        s = self.stream
        parser = PolyExpressionParser(s, _resolve)
        left = parser.parse()
        if not s.at(*_RELATIONS):
            s.fail(f"Ожидалось отношение, получено {s.peek().text or 'конец ввода'!r}")
        links = []
        while s.at(*_RELATIONS):
            op = s.next().text
            right = parser.parse()
            options = [Atom(left, rel, right) for rel in _RELATIONS[op]]
            links.append(options[0] if len(options) == 1 else Or(tuple(options)))
            left = right
        return links[0] if len(links) == 1 else And(tuple(links))

    def _name(self) -> str:
        token = self.stream.expect_kind("ident", "имя переменной")
        if token.text in _KEYWORDS:
            self.stream.fail(f"Ключевое слово {token.text!r} не может быть переменной", token)
        return token.text
