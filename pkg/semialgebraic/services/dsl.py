"""
Текстовый DSL описаний множеств.

    statement := 'set' NAME 'in' 'R' '^' N ':=' body
    body      := 'empty' | clause ('|' clause)*
    clause    := '{' chain (',' chain)* '}'
    chain     := poly REL poly (REL poly)*
    REL       := '<' | '=' | '>' | '<=' | '>=' | '!='

Нестрогие отношения и цепочки раскрываются в объединение строгих конъюнкций
до построения описания, поэтому сложность считается по раскрытой форме.
"""

import itertools
import logging

from sympy import Symbol

from polycore.exceptions import PolySyntaxError
from polycore.services import (
    PolyExpressionParser,
    Token,
    TokenStream,
    format_poly,
    make_poly,
    tokenize,
    variable_resolver,
    variables,
)

from ..exceptions import ArityError, DescriptionError, DescriptionSyntaxError
from ..models import Relation
from .description import SaDescription, SignCond

logger = logging.getLogger(__name__)

# Строгие отношения, в которые раскрывается каждое отношение DSL
_ALTERNATIVES = {
    "<": (Relation.LT,),
    "=": (Relation.EQ,),
    ">": (Relation.GT,),
    "<=": (Relation.LT, Relation.EQ),
    ">=": (Relation.GT, Relation.EQ),
    "!=": (Relation.LT, Relation.GT),
}

_FLIPPED = {Relation.LT: Relation.GT, Relation.EQ: Relation.EQ, Relation.GT: Relation.LT}

EMPTY_KEYWORD = "empty"


def parse_descriptions(text: str) -> dict[str, SaDescription]:
    """Разбирает все операторы set в тексте.

    Returns:
        dict: Имя множества -> описание, в порядке появления
    """
    try:
        return _DescriptionParser(text).parse_all()
    except PolySyntaxError as exc:
        raise DescriptionSyntaxError(exc.message, exc.line, exc.column) from exc


def parse_description(text: str, name: str | None = None) -> SaDescription:
    """Разбирает описание множества; без имени возвращает первый оператор set.

    Args:
        text: Текст на DSL
        name: Имя нужного множества

    Returns:
        SaDescription: Описание в строгой форме
    """
    found = parse_descriptions(text)
    if not found:
        raise DescriptionSyntaxError("В тексте нет ни одного оператора set", 1, 1)
    if name is None:
        return next(iter(found.values()))
    if name not in found:
        raise DescriptionError(f"Множество {name!r} не найдено, есть: {', '.join(found)}")
    return found[name]


def format_description(d: SaDescription) -> str:
    """Нормализованная запись описания в DSL (только строгие атомы)."""
    head = f"set {d.name} in R^{d.ambient} := "
    if not d.conjuncts:
        return head + EMPTY_KEYWORD
    clauses = [
        "{ " + ", ".join(f"{format_poly(a.poly)} {Relation(a.rel).value} 0" for a in c) + " }"
        for c in d.conjuncts
    ]
    return head + " | ".join(clauses)


class _DescriptionParser:
    def __init__(self, text: str):
        self.stream = TokenStream(tokenize(text))

    def parse_all(self) -> dict[str, SaDescription]:
        found: dict[str, SaDescription] = {}
        while self.stream.peek().kind != "eof":
            start = self.stream.peek()
            d = self.statement()
            if d.name in found:
                self.stream.fail(f"Множество {d.name!r} определено повторно", start)
            found[d.name] = d
            logger.debug(f"[DslService] Разобрано множество {d.name} в R^{d.ambient}")
        return found

    def statement(self) -> SaDescription:
        s = self.stream
        s.expect("set")
        name = s.expect_kind("ident", "имя множества").text
        s.expect("in")
        s.expect("R")
        s.expect("^")
        dim_token = s.expect_kind("number", "размерность пространства")
        ambient = int(dim_token.text)
        if ambient < 1:
            s.fail("Размерность пространства должна быть >= 1", dim_token)
        s.expect(":=")
        gens = variables(ambient)
        if s.accept(EMPTY_KEYWORD):
            return SaDescription(ambient, (), name)
        conjuncts = list(self.clause(gens))
        while s.accept("|"):
            conjuncts.extend(self.clause(gens))
        return SaDescription(ambient, tuple(conjuncts), name)

    def clause(self, gens) -> list[tuple[SignCond, ...]]:
        """Одна фигурная скобка; возвращает её раскрытие в строгие конъюнкции."""
        s = self.stream
        s.expect("{")
        options = self.chain(gens)
        while s.accept(","):
            options.extend(self.chain(gens))
        s.expect("}")
        return [tuple(choice) for choice in itertools.product(*options)]

    def chain(self, gens) -> list[list[SignCond]]:
        s = self.stream
        parser = PolyExpressionParser(s, _resolver(gens))
        left = parser.parse()
        if not s.at(*_ALTERNATIVES):
            s.fail(f"Ожидалось отношение, получено {s.peek().text or 'конец ввода'!r}")
        links = []
        while s.at(*_ALTERNATIVES):
            op = s.next().text
            right = parser.parse()
            links.append(_atom_options(left, op, right, gens))
            left = right
        return links


def _atom_options(left, op: str, right, gens) -> list[SignCond]:
    """Нормализует lhs ⋈ rhs к f ⋈ 0; константа переносится вправо."""
    lhs, rhs = make_poly(left, gens), make_poly(right, gens)
    flip = lhs.is_ground and not rhs.is_ground
    poly = rhs - lhs if flip else lhs - rhs
    return [SignCond(poly, _FLIPPED[rel] if flip else rel) for rel in _ALTERNATIVES[op]]


def _resolver(gens):
    shared = variable_resolver(gens)

    def resolve(token: Token) -> Symbol:
        try:
            return shared(token)
        except PolySyntaxError:
            raise ArityError(
                f"Переменная {token.text!r} не принадлежит R^{len(gens)} "
                f"(строка {token.line}, столбец {token.column})"
            ) from None

    return resolve
