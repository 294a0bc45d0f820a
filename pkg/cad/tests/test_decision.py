"""Тесты решения предложений."""

from django.test import SimpleTestCase, override_settings

from cad.exceptions import CadCapacityError, InconsistencyError
from cad.services import assign_levels, decide
from formulas.services import (
    ForAll,
    compile_boundary,
    compile_collapse_clauses,
    compile_homeomorphism_clauses,
    compile_submanifold,
    eval_qf,
    parse_infix,
)
from formulas.models import SchemaKind
from formulas.services import PredicateInstance
from semialgebraic.services import empty_set, parse_description

SENTENCES = [
    ("forall x. x^2 + 1 > 0", True),
    ("exists x. x^2 + 1 = 0", False),
    ("forall x. exists y. y^2 = x", False),
    ("exists x. forall y. (y - x)^2 >= 0", True),
    ("forall x, y. x^2 + y^2 >= 0", True),
    ("exists x. x^2 - 2 = 0", True),
    ("forall x. x > 0 -> exists y. y^2 = x", True),
    ("exists x, y. x^2 + y^2 = 1 & x*y = 1", False),
    ("forall x. exists y. forall z. z^2 + y > x", True),
    ("exists x. forall y. x*y = 0", True),
    ("exists x. x^3 - x - 1 = 0 & x > 1", True),
    ("exists x. forall y. y^2 - x > 0", True),
    ("forall x. exists y. x*y = 1", False),
]

HOMEO_DECIDABLE = ["graph_in_product", "total", "functional", "injective", "onto"]
COLLAPSE_DECIDABLE = [
    "domain",
    "total",
    "functional",
    "injective",
    "base_in_Y",
    "collar_avoids_Y",
    "cover",
]


def sa(text):
    return parse_description(text)


class DecideTests(SimpleTestCase):
    def test_hand_checked_sentences(self):
        for text, expected in SENTENCES:
            with self.subTest(text):
                self.assertEqual(decide(parse_infix(text)), expected)

    def test_quantifier_free_agrees_with_eval(self):
        for text in ["1 < 2", "1 > 2 | 0 = 0", "~(3 = 3) & 1 > 0", "2^3 - 8 = 0"]:
            f = parse_infix(text)
            self.assertEqual(decide(f), eval_qf(f, {}))

    def test_free_variable_rejected(self):
        with self.assertRaises(InconsistencyError):
            decide(parse_infix("exists y. x > y"))

    def test_too_many_variables(self):
        with self.assertRaises(CadCapacityError):
            decide(parse_infix("forall x, y, z, w. x + y + z + w > 0 | x = 0"))

    @override_settings(RCFW_MAX_VARIABLES=1)
    def test_limit_from_settings(self):
        with self.assertRaises(CadCapacityError):
            decide(parse_infix("forall x. exists y. y > x"))

    def test_sibling_quantifiers_share_levels(self):
        f = parse_infix("(forall x. exists y. y > x) & (exists z. forall w. w^2 >= z)")
        _leveled, depth = assign_levels(f)
        self.assertEqual(depth, 2)
        self.assertTrue(decide(f))

    def test_shadowed_variable(self):
        f = ForAll(("x",), parse_infix("x > 0 -> exists x. x < 0"))
        self.assertTrue(decide(f))


class SchemaDecisionTests(SimpleTestCase):
    def submanifold(self, text):
        inst = PredicateInstance(SchemaKind.SUBMANIFOLD, 1, 1, bindings={"S": sa(text)})
        return decide(compile_submanifold(inst))

    def boundary(self, s_text, t):
        inst = PredicateInstance(SchemaKind.BOUNDARY, 1, 1, bindings={"S": sa(s_text)})
        return decide(compile_boundary(inst, t))

    def test_open_interval_is_submanifold(self):
        self.assertTrue(self.submanifold("set S in R^1 := { x^2 - 1 < 0 }"))

    def test_closed_interval_is_not_open(self):
        self.assertFalse(self.submanifold("set S in R^1 := { x^2 - 1 <= 0 }"))

    def test_closed_interval_with_endpoints(self):
        self.assertTrue(
            self.boundary("set S in R^1 := { x^2 - 1 <= 0 }", sa("set T in R^1 := { x^2 - 1 = 0 }"))
        )

    def test_wrong_boundary(self):
        self.assertFalse(
            self.boundary("set S in R^1 := { x^2 - 1 <= 0 }", sa("set T in R^1 := { x = 0 }"))
        )

    def test_empty_boundary_reduces_to_submanifold(self):
        self.assertTrue(self.boundary("set S in R^1 := { x^2 - 1 < 0 }", empty_set(1)))

    def test_homeomorphism_singleton(self):
        point = sa("set P in R^1 := { x = 0 }")
        graph = sa("set G in R^2 := { x = 0, y = 0 }")
        clauses = compile_homeomorphism_clauses(point, point, graph, 1)
        for name in HOMEO_DECIDABLE:
            self.assertTrue(decide(clauses[name]), name)

    def test_homeomorphism_linear(self):
        clauses = compile_homeomorphism_clauses(
            sa("set X in R^1 := { 0 <= x <= 1 }"),
            sa("set Y in R^1 := { 0 <= x <= 2 }"),
            sa("set G in R^2 := { y - 2*x = 0, 0 <= x <= 1 }"),
            1,
        )
        for name in HOMEO_DECIDABLE:
            self.assertTrue(decide(clauses[name]), name)

    def test_square_is_not_injective(self):
        clauses = compile_homeomorphism_clauses(
            sa("set X in R^1 := { -1 <= x <= 1 }"),
            sa("set Y in R^1 := { 0 <= x <= 1 }"),
            sa("set G in R^2 := { y - x^2 = 0, -1 <= x <= 1 }"),
            1,
        )
        self.assertFalse(decide(clauses["injective"]))
        self.assertTrue(decide(clauses["onto"]))

    def test_collapse_of_interval(self):
        clauses = compile_collapse_clauses(
            sa("set X in R^1 := { 0 <= x <= 1 }"),
            sa("set Y in R^1 := { x = 0 }"),
            sa("set C in R^2 := { y - x = 0, 0 <= x <= 1 }"),
            1,
        )
        for name in COLLAPSE_DECIDABLE:
            self.assertTrue(decide(clauses[name]), name)

    def test_collapse_wrong_base(self):
        clauses = compile_collapse_clauses(
            sa("set X in R^1 := { 0 <= x <= 1 }"),
            sa("set Y in R^1 := { 2*x - 1 = 0 }"),
            sa("set C in R^2 := { y - x = 0, 0 <= x <= 1 }"),
            1,
        )
        self.assertFalse(decide(clauses["base_in_Y"]))
