"""
Лексер и парсер текстовой записи многочленов.

Грамматика общая для DSL множеств и инфиксных формул:

    poly   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (('*' factor) | ('/' NUMBER))*
    factor := base ('^' NUMBER)?
    base   := '-' base | NUMBER | IDENT | '(' poly ')'
"""

import re
from dataclasses import dataclass
from typing import Callable, Sequence

from sympy import Integer, Poly, Rational, Symbol

from ..exceptions import PolySyntaxError
from .polynomials import make_poly

_TOKEN_RE = re.compile(
    r"(?P<space>[ \t\r]+)"
    r"|(?P<newline>\n)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<number>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>:=|<=|>=|!=|->|<->|[-+*/^(){},|&~.<>=])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


EOF = "eof"


def tokenize(text: str) -> list[Token]:
    """Разбивает текст на токены; переводы строк сохраняются как токены 'newline'."""
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise PolySyntaxError(f"Неожиданный символ {text[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup
        if kind == "newline":
            tokens.append(Token("newline", "\n", line, pos - line_start + 1))
            line += 1
            line_start = match.end()
        elif kind not in ("space", "comment"):
            tokens.append(Token(kind, match.group(), line, pos - line_start + 1))
        pos = match.end()
    tokens.append(Token(EOF, "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    """Поток токенов с откатом; переводы строк пропускаются, если не запрошены явно."""

    def __init__(self, tokens: list[Token], skip_newlines: bool = True):
        self.tokens = [t for t in tokens if not (skip_newlines and t.kind == "newline")]
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        index = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[index]

    def next(self) -> Token:
        token = self.peek()
        if token.kind != EOF:
            self.pos += 1
        return token

    def at(self, *texts: str) -> bool:
        token = self.peek()
        return token.kind in ("op", "ident") and token.text in texts

    def accept(self, *texts: str) -> Token | None:
        if self.at(*texts):
            return self.next()
        return None

    def expect(self, text: str) -> Token:
        token = self.peek()
        if not self.at(text):
            self.fail(f"Ожидалось {text!r}, получено {token.text or 'конец ввода'!r}", token)
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            self.fail(f"Ожидалось {what}, получено {token.text or 'конец ввода'!r}", token)
        return self.next()

    def fail(self, message: str, token: Token | None = None):
        token = token or self.peek()
        raise PolySyntaxError(message, token.line, token.column)


Resolver = Callable[[Token], Symbol]


class PolyExpressionParser:
    """Рекурсивный спуск по грамматике многочленов; строит выражение sympy.

    Args:
        stream: Поток токенов
        resolve: Функция, превращающая токен-идентификатор в переменную
    """

    def __init__(self, stream: TokenStream, resolve: Resolver):
        self.stream = stream
        self.resolve = resolve

    def parse(self):
        s = self.stream
        s.accept("+")
        value = self.term()
        while s.at("+", "-"):
            op = s.next().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        s = self.stream
        value = self.unary()
        while s.at("*", "/"):
            op = s.next().text
            if op == "*":
                value = value * self.unary()
                continue
            token = s.expect_kind("number", "число после '/'")
            if int(token.text) == 0:
                s.fail("Деление на ноль", token)
            value = value * Rational(1, int(token.text))
        return value

    def unary(self):
        """Унарный минус слабее '^': -x^2 = -(x^2) в любой позиции."""
        if self.stream.accept("-"):
            return -self.unary()
        return self.factor()

    def factor(self):
        s = self.stream
        value = self.base()
        if s.accept("^"):
            token = s.expect_kind("number", "натуральный показатель степени")
            value = value ** int(token.text)
        return value

    def base(self):
        s = self.stream
        token = s.peek()
        if token.kind == "number":
            s.next()
            return Integer(int(token.text))
        if token.kind == "ident":
            s.next()
            return self.resolve(token)
        if s.accept("("):
            value = self.parse()
            s.expect(")")
            return value
        s.fail(f"Ожидался многочлен, получено {token.text or 'конец ввода'!r}", token)


def variable_resolver(gens: Sequence[Symbol]) -> Resolver:
    """Разрешает имена x, y, z и их синонимы x1, x2, x3 в переменные gens."""
    table = {g.name: g for g in gens}
    if len(gens) <= 3:
        table.update({f"x{i + 1}": g for i, g in enumerate(gens)})

    def resolve(token: Token) -> Symbol:
        if token.text not in table:
            names = ", ".join(g.name for g in gens)
            raise PolySyntaxError(
                f"Неизвестная переменная {token.text!r} (допустимы: {names})",
                token.line,
                token.column,
            )
        return table[token.text]

    return resolve


def parse_poly(text: str, gens: Sequence[Symbol]) -> Poly:
    """Разбирает многочлен от заданных переменных.

    Args:
        text: Запись вида '3*x^2*y - 1/2'
        gens: Переменные многочлена

    Returns:
        Poly: Многочлен над QQ
    """
    stream = TokenStream(tokenize(text))
    expr = PolyExpressionParser(stream, variable_resolver(gens)).parse()
    token = stream.peek()
    if token.kind != EOF:
        stream.fail(f"Лишний текст после многочлена: {token.text!r}", token)
    return make_poly(expr, gens)
