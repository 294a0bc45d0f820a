"""Тесты дерева формул."""

import random

from django.test import SimpleTestCase
from sympy import Symbol

from formulas.exceptions import FormulaError, UnboundVariableError
from formulas.services import (
    And,
    Atom,
    Exists,
    ForAll,
    Not,
    Or,
    eval_qf,
    free_vars,
    is_quantifier_free,
    normalize,
    skeleton,
    substitute,
)
from formulas.services.ast import eq, gt, iff, implies, lt
from semialgebraic.models import Relation

x, y = Symbol("x"), Symbol("y")


class EvalQfTests(SimpleTestCase):
    def test_atom(self):
        self.assertTrue(eval_qf(lt(x**2 - 1), {"x": 0}))
        self.assertFalse(eval_qf(lt(x**2 - 1), {"x": 2}))

    def test_contradiction(self):
        self.assertFalse(eval_qf(And((eq(x), gt(x))), {"x": 0}))

    def test_rational_values(self):
        self.assertTrue(eval_qf(eq(2 * x - 3), {"x": "3/2"}))

    def test_closed_atom(self):
        self.assertTrue(eval_qf(gt(2), {}))

    def test_unbound_variable(self):
        with self.assertRaises(UnboundVariableError):
            eval_qf(gt(x + y), {"x": 1})

    def test_quantified_rejected(self):
        with self.assertRaises(FormulaError):
            eval_qf(ForAll(("x",), gt(x)), {})

    def test_de_morgan(self):
        rng = random.Random(7)
        for _ in range(100):
            a = Atom(rng.randint(-3, 3) * x + rng.randint(-3, 3) * y, rng.choice(list(Relation)))
            b = Atom(x * y - rng.randint(-3, 3), rng.choice(list(Relation)))
            point = {"x": rng.randint(-4, 4), "y": rng.randint(-4, 4)}
            self.assertEqual(
                eval_qf(Not(And((a, b))), point), eval_qf(Or((Not(a), Not(b))), point)
            )
            self.assertEqual(
                eval_qf(Not(Or((a, b))), point), eval_qf(And((Not(a), Not(b))), point)
            )

    def test_implication_and_equivalence(self):
        self.assertTrue(eval_qf(implies(gt(x), gt(x + 1)), {"x": "1/2"}))
        self.assertFalse(eval_qf(iff(gt(x), lt(x)), {"x": 1}))


class StructureTests(SimpleTestCase):
    def test_atom_sides_expanded(self):
        self.assertEqual(Atom((x + 1) ** 2, Relation.EQ), Atom(x**2 + 2 * x + 1, Relation.EQ))

    def test_free_vars(self):
        f = ForAll(("x",), And((gt(x), Exists(("z",), eq(y - Symbol("z"))))))
        self.assertEqual(free_vars(f), {"y"})

    def test_substitute_respects_binders(self):
        f = And((gt(x), Exists(("x",), eq(x - y))))
        g = substitute(f, {"x": 2, "y": x})
        self.assertEqual(g, And((gt(2), Exists(("x",), eq(x - x)))))

    def test_quantifier_free(self):
        self.assertTrue(is_quantifier_free(Or((gt(x), Not(eq(y))))))
        self.assertFalse(is_quantifier_free(Not(Exists(("x",), gt(x)))))


class NormalizeTests(SimpleTestCase):
    def test_shadowed_binder_renamed(self):
        f = ForAll(("x",), And((Exists(("x",), eq(x)), gt(x))))
        x1 = Symbol("x_1")
        self.assertEqual(
            normalize(f), ForAll(("x",), And((Exists(("x_1",), eq(x1)), gt(x))))
        )

    def test_binder_clashing_with_free_variable(self):
        f = And((gt(x), Exists(("x",), eq(x - 1))))
        result = normalize(f)
        self.assertEqual(free_vars(result), {"x"})
        self.assertEqual(result.args[1].vars, ("x_1",))

    def test_already_normal_unchanged(self):
        f = ForAll(("x",), Exists(("y",), eq(y - x)))
        self.assertEqual(normalize(f), f)


class SkeletonTests(SimpleTestCase):
    def test_quantifier_free_parts_abstracted(self):
        f = ForAll(("x",), Or((gt(x), Exists(("y", "z"), eq(y)))))
        self.assertEqual(skeleton(f), ("forall", 1, ("or", ("qf", ("exists", 2, "qf")))))

    def test_atoms_do_not_matter(self):
        f = ForAll(("x",), Exists(("y",), eq(y**2 - x)))
        g = ForAll(("x",), Exists(("y",), And((gt(y), lt(x * y - 3)))))
        self.assertEqual(skeleton(f), skeleton(g))
