"""Тесты формул принадлежности."""

import random

from django.test import SimpleTestCase
from sympy import Symbol

from formulas.exceptions import UnsupportedSchemaError
from formulas.services import (
    And,
    Atom,
    Or,
    SymbolicSet,
    eval_qf,
    free_vars,
    membership,
    parameter_names,
)
from polycore.services import variables
from semialgebraic.models import Relation
from semialgebraic.services import describe, encode, member, parse_description

u, v = Symbol("u"), Symbol("v")
X, Y = variables(2)
(T,) = variables(1)


def selector_assignment(name: str, point):
    """Означивание коэффициентов и селектора символического множества точкой A(n, p, q)."""
    values = {f"{name}.l": point.selector}
    for i, block in enumerate(point.blocks):
        for k, c in enumerate(block):
            values[f"{name}.{i}.{k}"] = c
    return values


class InlineMembershipTests(SimpleTestCase):
    def test_circle_substituted(self):
        circle = describe(2, [(X**2 + Y**2 - 1, "=")])
        self.assertEqual(
            membership(circle, [u, v]), Or((And((Atom(u**2 + v**2 - 1, Relation.EQ),)),))
        )

    def test_terms_are_expressions(self):
        d = describe(1, [(T, ">")])
        f = membership(d, [u + 1])
        self.assertTrue(eval_qf(f, {"u": 0}))
        self.assertFalse(eval_qf(f, {"u": -2}))

    def test_wrong_arity(self):
        with self.assertRaises(UnsupportedSchemaError):
            membership(describe(2, [(X, ">")]), [u])


class SymbolicMembershipTests(SimpleTestCase):
    def test_free_variables(self):
        f = membership(SymbolicSet("S", 1, 1, 1), [u])
        self.assertEqual(free_vars(f), {"u", "S.0.0", "S.0.1", "S.l"})
        self.assertEqual(parameter_names(f), {"S"})

    def test_one_case_per_nonempty_subset(self):
        f = membership(SymbolicSet("S", 1, 1, 1), [u])
        self.assertEqual(len(f.args), 2**3 - 1)

    def test_capacity(self):
        with self.assertRaises(UnsupportedSchemaError):
            membership(SymbolicSet("S", 1, 3, 1), [u])

    def test_agrees_with_encoding(self):
        rng = random.Random(11)
        texts = [
            "set A in R^1 := { x > 0 }",
            "set B in R^1 := { x^2 - 1 < 0 }",
            "set C in R^1 := { x - 1 = 0 } | { x + 1 < 0 }",
        ]
        for text in texts:
            d = parse_description(text)
            point = encode(d, 2, 2)
            f = membership(SymbolicSet("S", 1, 2, 2), [u])
            assignment = selector_assignment("S", point)
            for _ in range(20):
                value = f"{rng.randint(-30, 30)}/{rng.randint(1, 10)}"
                self.assertEqual(
                    eval_qf(f, {**assignment, "u": value}), member(d, [value]), (text, value)
                )

    def test_parameter_names_ignore_plain_variables(self):
        f = And((membership(SymbolicSet("a", 1), [u]), membership(SymbolicSet("b", 1), [v])))
        self.assertEqual(parameter_names(f), {"a", "b"})
