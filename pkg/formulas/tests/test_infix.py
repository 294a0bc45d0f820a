"""Тесты инфиксной записи формул."""

from django.test import SimpleTestCase
from sympy import Symbol

from formulas.exceptions import FormulaSyntaxError
from formulas.services import FALSE, TRUE, Atom, Exists, ForAll, Or, eval_qf, parse_infix
from semialgebraic.models import Relation

x, y = Symbol("x"), Symbol("y")


class ParseInfixTests(SimpleTestCase):
    def test_universal(self):
        self.assertEqual(
            parse_infix("forall x. x^2+1>0"), ForAll(("x",), Atom(x**2 + 1, Relation.GT))
        )

    def test_nested_quantifiers(self):
        f = parse_infix("forall x. exists y. y^2 = x")
        self.assertEqual(f, ForAll(("x",), Exists(("y",), Atom(y**2, Relation.EQ, x))))

    def test_variable_list(self):
        f = parse_infix("exists x, y. x*y = 1")
        self.assertEqual(f.vars, ("x", "y"))

    def test_not_equal(self):
        self.assertEqual(
            parse_infix("x != 0"), Or((Atom(x, Relation.LT), Atom(x, Relation.GT)))
        )

    def test_chain(self):
        f = parse_infix("0 <= x <= 1")
        for value, expected in [(0, True), ("1/2", True), (1, True), (2, False), (-1, False)]:
            self.assertEqual(eval_qf(f, {"x": value}), expected, value)

    def test_precedence(self):
        f = parse_infix("~(x > 0) | x^2 + 1 > 0 -> true")
        self.assertTrue(eval_qf(f, {"x": 5}))
        g = parse_infix("x > 0 & y > 0 | x < 0")
        self.assertTrue(eval_qf(g, {"x": -1, "y": -1}))
        self.assertFalse(eval_qf(g, {"x": 1, "y": -1}))

    def test_parenthesised_term_and_group(self):
        f = parse_infix("(x + 1) * 2 > 0")
        self.assertEqual(f, Atom(2 * x + 2, Relation.GT))
        g = parse_infix("(x > 0) & (y < 0)")
        self.assertTrue(eval_qf(g, {"x": 1, "y": -1}))

    def test_constants(self):
        self.assertEqual(parse_infix("true"), TRUE)
        self.assertEqual(parse_infix("false"), FALSE)

    def test_equivalence(self):
        f = parse_infix("x > 0 <-> 0 < x")
        for value in (-1, 0, 1):
            self.assertTrue(eval_qf(f, {"x": value}))

    def test_syntax_error(self):
        with self.assertRaises(FormulaSyntaxError) as ctx:
            parse_infix("forall x. x^2 +")
        self.assertEqual(ctx.exception.line, 1)

    def test_missing_relation(self):
        with self.assertRaises(FormulaSyntaxError):
            parse_infix("x + 1")

    def test_keyword_as_variable(self):
        with self.assertRaises(FormulaSyntaxError):
            parse_infix("exists true. x > 0")
