"""Тесты регулярности, компактности, гомеоморфизма и кобордизма."""

from django.test import SimpleTestCase, override_settings
from sympy import symbols

from cad.exceptions import InconsistencyError, UnsupportedDimensionError
from polycore.services import compare
from semialgebraic.services import embed, intersection, parse_description, transpose
from topology.exceptions import PreconditionError
from topology.models import VerdictKind
from topology.serializers import CompactnessSerializer, VerdictSerializer
from topology.services import (
    check_cobordism,
    compactness_check,
    regularity_check,
    verify_homeo,
)

x, y = symbols("x y")

CIRCLE = "set S in R^2 := { x^2 + y^2 - 1 = 0 }"
SEGMENT = "set S in R^2 := { y = 0, 0 <= x <= 1 }"
LEMNISCATE = "set S in R^2 := { x^4 + 2*x^2*y^2 + y^4 - x^2 + y^2 = 0 }"


def sa(text):
    return parse_description(text)


def is_origin(point):
    return all(compare(value, 0) == 0 for value in point)


class RegularityTests(SimpleTestCase):
    def test_circle_passes(self):
        verdict = regularity_check(x**2 + y**2 - 1, sa(CIRCLE))
        self.assertEqual(verdict.kind, VerdictKind.PASS)

    def test_lemniscate_fails_at_origin(self):
        verdict = regularity_check(x**4 + 2 * x**2 * y**2 + y**4 - x**2 + y**2, sa(LEMNISCATE))
        self.assertEqual(verdict.kind, VerdictKind.FAIL)
        self.assertTrue(is_origin(verdict.witness))

    def test_cross_fails_at_origin(self):
        verdict = regularity_check(x * y, sa("set S in R^2 := { x*y = 0 }"))
        self.assertEqual(verdict.kind, VerdictKind.FAIL)
        self.assertTrue(is_origin(verdict.witness))

    def test_arc_of_singular_curve_passes(self):
        # начало координат вырезано
        verdict = regularity_check(x * y, sa("set S in R^2 := { x*y = 0, x > 0 }"))
        self.assertEqual(verdict.kind, VerdictKind.PASS)

    def test_set_outside_zero_locus(self):
        with self.assertRaises(InconsistencyError):
            regularity_check(x, sa(CIRCLE))


class CompactnessTests(SimpleTestCase):
    CASES = [
        (CIRCLE, True, True),
        ("set S in R^2 := { x^2 + y^2 - 1 < 0 }", False, True),
        ("set S in R^1 := { x >= 0 }", True, False),
        ("set S in R^2 := { x*y - 1 = 0 }", True, False),
        (SEGMENT, True, True),
        ("set S in R^2 := { y = 0, 0 <= x < 1 }", False, True),
        ("set S in R^2 := { x^2 + y^2 - 1 <= 0 }", True, True),
        ("set S in R^2 := empty", True, True),
    ]

    def test_cases(self):
        for text, closed, bounded in self.CASES:
            with self.subTest(text):
                result = compactness_check(sa(text))
                self.assertEqual((result.closed, result.bounded), (closed, bounded))

    def test_three_dimensions_unsupported(self):
        with self.assertRaises(UnsupportedDimensionError):
            compactness_check(sa("set S in R^3 := { z = 0 }"))

    def test_json(self):
        data = CompactnessSerializer(compactness_check(sa(CIRCLE))).data
        self.assertEqual(data, {"closed": True, "bounded": True, "compact": True})


class HomeomorphismTests(SimpleTestCase):
    def test_cubic(self):
        verdict = verify_homeo(
            sa("set X in R^1 := { -1 <= x <= 1 }"),
            sa("set Y in R^1 := { -1 <= x <= 1 }"),
            sa("set G in R^2 := { y - x^3 = 0, -1 <= x <= 1 }"),
        )
        self.assertEqual(verdict.kind, VerdictKind.ACCEPT)

    def test_square_is_not_injective(self):
        verdict = verify_homeo(
            sa("set X in R^1 := { -1 <= x <= 1 }"),
            sa("set Y in R^1 := { 0 <= x <= 1 }"),
            sa("set G in R^2 := { y - x^2 = 0, -1 <= x <= 1 }"),
        )
        self.assertEqual(verdict.kind, VerdictKind.REJECT)
        self.assertEqual(verdict.reason, "injective")

    def test_linear_and_its_inverse(self):
        X = sa("set X in R^1 := { 0 <= x <= 1 }")
        Y = sa("set Y in R^1 := { 0 <= x <= 2 }")
        G = sa("set G in R^2 := { y - 2*x = 0, 0 <= x <= 1 }")
        self.assertEqual(verify_homeo(X, Y, G).kind, VerdictKind.ACCEPT)
        self.assertEqual(verify_homeo(Y, X, transpose(G)).kind, VerdictKind.ACCEPT)

    def test_identity_of_two_intervals(self):
        X = sa("set X in R^1 := { 0 <= x <= 1 } | { 2 <= x <= 3 }")
        diagonal = intersection(sa("set D in R^2 := { y - x = 0 }"), embed(X, [0], 2))
        self.assertEqual(verify_homeo(X, X, diagonal).kind, VerdictKind.ACCEPT)

    def test_discontinuous_bijection(self):
        # f(0) = 1/2, f(1/2) = 0, иначе f(x) = x
        G = sa(
            "set G in R^2 := { y - x = 0, 0 < x < 1/2 } | { y - x = 0, 1/2 < x <= 1 }"
            " | { x = 0, 2*y - 1 = 0 } | { 2*x - 1 = 0, y = 0 }"
        )
        unit = sa("set X in R^1 := { 0 <= x <= 1 }")
        verdict = verify_homeo(unit, unit, G)
        self.assertEqual(verdict.kind, VerdictKind.REJECT)
        self.assertEqual(verdict.reason, "graph_closed")

    def test_not_compact(self):
        with self.assertRaises(PreconditionError):
            verify_homeo(
                sa("set X in R^1 := { x >= 0 }"),
                sa("set Y in R^1 := { x >= 0 }"),
                sa("set G in R^2 := { y - x = 0, x >= 0 }"),
            )

    def test_dimension_mismatch(self):
        with self.assertRaises(PreconditionError):
            verify_homeo(sa(CIRCLE), sa(CIRCLE), sa(CIRCLE))

    def test_projection_of_square_is_falsified(self):
        verdict = verify_homeo(
            sa("set X in R^2 := { 0 <= x <= 1, 0 <= y <= 1 }"),
            sa("set Y in R^2 := { 0 <= x <= 1, y = 0 }"),
            sa("set G in R^4 := { x3 - x1 = 0, x4 = 0, 0 <= x1 <= 1, 0 <= x2 <= 1 }"),
        )
        self.assertEqual(verdict.kind, VerdictKind.REJECT)
        self.assertEqual(verdict.reason, "injective")

    @override_settings(RCFW_FALSIFY_SAMPLES=20)
    def test_falsification_never_accepts(self):
        square = sa("set X in R^2 := { 0 <= x <= 1, 0 <= y <= 1 }")
        identity = sa(
            "set G in R^4 := { x3 - x1 = 0, x4 - x2 = 0, 0 <= x1 <= 1, 0 <= x2 <= 1 }"
        )
        self.assertEqual(verify_homeo(square, square, identity).kind, VerdictKind.UNSUPPORTED)


class CobordismTests(SimpleTestCase):
    ORIGIN = "set M0 in R^2 := { x = 0, y = 0 }"
    EMPTY = "set E in R^2 := empty"

    def test_segment(self):
        verdict = check_cobordism(
            sa(SEGMENT), sa(self.ORIGIN), sa("set M1 in R^2 := { x - 1 = 0, y = 0 }")
        )
        self.assertEqual(verdict.kind, VerdictKind.ACCEPT)

    def test_circle_with_empty_ends(self):
        self.assertEqual(
            check_cobordism(sa(CIRCLE), sa(self.EMPTY), sa(self.EMPTY)).kind, VerdictKind.ACCEPT
        )

    def test_circle_boundary_mismatch(self):
        verdict = check_cobordism(
            sa(CIRCLE), sa("set M0 in R^2 := { x - 1 = 0, y = 0 }"), sa(self.EMPTY)
        )
        self.assertEqual(verdict.kind, VerdictKind.REJECT)

    def test_segment_missing_end(self):
        verdict = check_cobordism(sa(SEGMENT), sa(self.ORIGIN), sa(self.EMPTY))
        self.assertEqual(verdict.kind, VerdictKind.REJECT)

    def test_overlapping_ends(self):
        verdict = check_cobordism(sa(SEGMENT), sa(self.ORIGIN), sa(self.ORIGIN))
        self.assertEqual(verdict.kind, VerdictKind.REJECT)
        self.assertTrue(is_origin(verdict.witness))

    def test_singular_curve(self):
        verdict = check_cobordism(sa(LEMNISCATE), sa(self.EMPTY), sa(self.EMPTY))
        self.assertEqual(verdict.kind, VerdictKind.REJECT)
        self.assertTrue(is_origin(verdict.witness))
        self.assertTrue(VerdictSerializer(data=VerdictSerializer(verdict).data).is_valid())

    def test_non_compact_manifold(self):
        with self.assertRaises(PreconditionError):
            check_cobordism(sa("set M in R^2 := { x*y - 1 = 0 }"), sa(self.EMPTY), sa(self.EMPTY))
