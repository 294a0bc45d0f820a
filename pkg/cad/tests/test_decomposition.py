"""Тесты построения декомпозиции и запросов к множествам."""

import random

from django.test import SimpleTestCase, override_settings

from cad.exceptions import CadCapacityError, InconsistencyError, UnsupportedDimensionError
from cad.models import CellKind
from cad.serializers import CadCellSerializer
from cad.services import (
    decompose,
    dimension,
    is_empty,
    locate,
    set_cells,
    sets_equal,
)
from polycore.services import make_poly, sign_at, variables
from semialgebraic.services import decode, describe, encode, member, parse_description

X, Y = variables(2)
(T,) = variables(1)

CIRCLE = parse_description("set Circle in R^2 := { x^2 + y^2 - 1 = 0 }")


class DecomposeTests(SimpleTestCase):
    def test_line(self):
        tree = decompose([make_poly(T, (T,))], 1)
        kinds = [cell.kinds[-1] for cell in tree.leaves()]
        self.assertEqual(kinds, [CellKind.SECTOR, CellKind.SECTION, CellKind.SECTOR])
        self.assertEqual([cell.signs for cell in tree.leaves()], [(-1,), (0,), (1,)])

    def test_circle_has_thirteen_cells(self):
        tree = decompose(CIRCLE.polys(), 2)
        self.assertEqual(len(tree.leaves()), 13)
        sizes = [len(tree.stack(column)) for column in tree.stack(tree.root)]
        self.assertEqual(sizes, [1, 3, 5, 3, 1])

    def test_no_polynomials(self):
        tree = decompose([], 2)
        self.assertEqual(len(tree.leaves()), 1)
        self.assertEqual(tree.leaves()[0].dim, 2)

    def test_samples_realize_signs(self):
        polys = [
            make_poly(X**2 + Y**2 - 1, (X, Y)),
            make_poly(X * Y - 1, (X, Y)),
            make_poly(Y - X**2, (X, Y)),
        ]
        tree = decompose(polys, 2)
        for cell in tree.leaves():
            self.assertEqual(cell.signs, tuple(sign_at(p, cell.sample) for p in polys))

    def test_dimension_equals_sector_count(self):
        tree = decompose(CIRCLE.polys(), 2)
        for cell in tree.leaves():
            self.assertEqual(cell.dim, cell.kinds.count(CellKind.SECTOR))

    def test_three_dimensions(self):
        x, y, z = variables(3)
        tree = decompose([make_poly(x**2 + y**2 + z**2 - 1, (x, y, z))], 3)
        self.assertEqual(len(tree.leaves()), 25)

    def test_threads_do_not_change_result(self):
        sequential = decompose(CIRCLE.polys(), 2, threads=1).leaves()
        parallel = decompose(CIRCLE.polys(), 2, threads=4).leaves()
        self.assertEqual([c.index for c in sequential], [c.index for c in parallel])
        self.assertEqual([c.signs for c in sequential], [c.signs for c in parallel])

    def test_unsupported_dimension(self):
        with self.assertRaises(UnsupportedDimensionError):
            decompose([], 4)

    @override_settings(RCFW_MAX_DEGREE=2)
    def test_degree_limit(self):
        with self.assertRaises(CadCapacityError):
            decompose([make_poly(T**3 - 2, (T,))], 1)

    def test_serializer_round_trip(self):
        tree = decompose(CIRCLE.polys(), 2)
        for cell in tree.leaves():
            data = CadCellSerializer(cell).data
            self.assertTrue(CadCellSerializer(data=data).is_valid())


class SetCellsTests(SimpleTestCase):
    def test_circle_cells(self):
        tree = decompose(CIRCLE.polys(), 2)
        cells = set_cells(tree, CIRCLE)
        self.assertEqual([cell.dim for cell in cells], [0, 1, 1, 0])

    def test_empty_description(self):
        tree = decompose(CIRCLE.polys(), 2)
        self.assertEqual(set_cells(tree, parse_description("set E in R^2 := empty")), [])

    def test_whole_plane(self):
        tree = decompose(CIRCLE.polys(), 2)
        whole = parse_description(
            "set W in R^2 := { x^2 + y^2 - 1 < 0 } | { x^2 + y^2 - 1 = 0 } | { x^2 + y^2 - 1 > 0 }"
        )
        self.assertEqual(len(set_cells(tree, whole)), 13)

    def test_missing_polynomial(self):
        tree = decompose(CIRCLE.polys(), 2)
        with self.assertRaises(InconsistencyError):
            set_cells(tree, parse_description("set H in R^2 := { x > 0 }"))

    def test_locate_agrees_with_member(self):
        rng = random.Random(5)
        for text in [
            "set C in R^2 := { x^2 + y^2 - 1 = 0 }",
            "set D in R^2 := { x^2 + y^2 - 1 < 0 }",
            "set H in R^2 := { x*y - 1 = 0 } | { y > 0, x < 0 }",
        ]:
            d = parse_description(text)
            tree = decompose(d.polys(), 2)
            points = [(1, 0), (0, 1), (-1, -1), (2, "1/2")] + [
                (f"{rng.randint(-8, 8)}/{rng.randint(1, 4)}", f"{rng.randint(-8, 8)}/{rng.randint(1, 4)}")
                for _ in range(40)
            ]
            for point in points:
                cell = locate(tree, point)
                self.assertEqual(d.satisfied_by(tree.sign_map(cell)), member(d, point), (text, point))


class SetQueryTests(SimpleTestCase):
    def test_dimension(self):
        self.assertEqual(dimension(CIRCLE), 1)
        self.assertEqual(dimension(parse_description("set D in R^2 := { x^2 + y^2 - 1 < 0 }")), 2)
        self.assertEqual(dimension(parse_description("set E in R^2 := { x^2 + y^2 + 1 = 0 }")), -1)

    def test_dimension_monotone_under_union(self):
        circle_or_point = parse_description(
            "set U in R^2 := { x^2 + y^2 - 1 = 0 } | { x - 3 = 0, y = 0 }"
        )
        self.assertEqual(dimension(circle_or_point), 1)

    def test_redundant_atom(self):
        d = parse_description("set C in R^2 := { x^2 + y^2 - 1 = 0, x^2 + y^2 + 1 > 0 }")
        self.assertEqual(dimension(d), 1)

    def test_is_empty(self):
        self.assertTrue(is_empty(parse_description("set E in R^1 := { x^2 < 0 }")))
        self.assertFalse(is_empty(CIRCLE))

    def test_sets_equal(self):
        self.assertTrue(sets_equal(CIRCLE, decode(encode(CIRCLE, 1, 2))))
        self.assertFalse(
            sets_equal(
                parse_description("set A in R^1 := { x > 0 }"),
                parse_description("set B in R^1 := { x >= 0 }"),
            )
        )

    def test_sets_equal_ambient_mismatch(self):
        with self.assertRaises(InconsistencyError):
            sets_equal(CIRCLE, parse_description("set A in R^1 := { x > 0 }"))

    def test_encode_round_trip_by_cad(self):
        rng = random.Random(17)
        monomials = [X, Y, X**2, 1]
        for _ in range(10):
            conjuncts = []
            for _ in range(rng.randint(1, 2)):
                expr = sum(rng.randint(-2, 2) * m for m in monomials)
                if expr == 0:
                    expr = X
                conjuncts.append([(expr, rng.choice(["<", "=", ">"]))])
            d = describe(2, *conjuncts)
            self.assertTrue(sets_equal(d, decode(encode(d, 2, 2))))
