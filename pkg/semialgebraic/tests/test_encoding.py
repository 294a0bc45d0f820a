"""Тесты кодирования описаний точками пространства параметров."""

import random
from math import factorial

from django.test import SimpleTestCase
from sympy import Poly, Rational

from cad.services import sets_equal
from polycore.services import from_terms, monomials, variables
from semialgebraic.exceptions import CapacityError, DescriptionSyntaxError, SelectorRangeError
from semialgebraic.models import Relation
from semialgebraic.serializers import ParamPointSerializer
from semialgebraic.services import (
    ParamPoint,
    SaDescription,
    SignCond,
    complexity_of,
    decode,
    describe,
    empty_set,
    encode,
    format_param_point,
    member,
    monomial_count,
    parse_param_point,
)

X, Y = variables(2)
(T,) = variables(1)


def circle():
    return describe(2, [(X**2 + Y**2 - 1, "=")])


def random_description(rng: random.Random, n: int, p: int, q: int) -> SaDescription:
    gens = variables(n)
    basis = monomials(n, q)
    polys = []
    for _ in range(rng.randint(1, p)):
        terms = {rng.choice(basis): rng.randint(-3, 3) for _ in range(3)}
        terms[rng.choice([m for m in basis if sum(m) > 0])] = rng.choice([-1, 1])
        polys.append(from_terms(terms, gens))
    atoms = [SignCond(rng.choice(polys), rng.choice(list(Relation))) for _ in range(rng.randint(1, p))]
    conjuncts, current = [], []
    for atom in atoms:
        current.append(atom)
        if rng.random() < 0.5:
            conjuncts.append(tuple(current))
            current = []
    if current:
        conjuncts.append(tuple(current))
    return SaDescription(n, tuple(conjuncts))


def random_point(rng: random.Random, n: int):
    return [Rational(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]


def zero_set_points(rng: random.Random, d: SaDescription, tries: int = 20) -> list:
    """Рациональные точки на нулевых множествах атомов (корни по последней координате)."""
    points = []
    for poly in d.polys():
        gens = poly.gens
        for _ in range(tries):
            prefix = random_point(rng, len(gens) - 1)
            fibre = Poly(poly.as_expr().subs(dict(zip(gens[:-1], prefix))), gens[-1], domain="QQ")
            if fibre.is_zero:
                points.append(prefix + [Rational(rng.randint(-9, 9), rng.randint(1, 4))])
                continue
            points.extend(prefix + [root] for root in fibre.ground_roots())
    return points


class MonomialCountTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(monomial_count(2, 2), 6)
        self.assertEqual(monomial_count(1, 3), 4)
        self.assertEqual(monomial_count(3, 0), 1)

    def test_factorial_oracle(self):
        for n in range(1, 7):
            for q in range(0, 7):
                expected = factorial(n + q) // (factorial(n) * factorial(q))
                self.assertEqual(monomial_count(n, q), expected)
                self.assertEqual(len(monomials(n, q)), expected)


class EncodeTests(SimpleTestCase):
    def test_circle(self):
        point = encode(circle(), 1, 2)
        self.assertEqual(point.blocks, ((-1, 0, 1, 0, 0, 1),))
        self.assertEqual(point.selector, 2)

    def test_empty(self):
        point = encode(empty_set(1), 1, 1)
        self.assertEqual(point.selector, 0)
        self.assertEqual(point.blocks, ((0, 0),))

    def test_positive_half_line(self):
        self.assertEqual(encode(describe(1, [(T, ">")]), 1, 1).selector, 4)

    def test_capacity(self):
        with self.assertRaises(CapacityError):
            encode(circle(), 1, 1)
        with self.assertRaises(CapacityError):
            encode(describe(1, [(T, ">")], [(T, "=")]), 1, 1)

    def test_repeated_polynomial_counts_once(self):
        d = describe(1, [(T, ">")], [(T, "=")])
        point = encode(d, 2, 1)
        self.assertEqual(point.blocks[1], (0, 0))


class DecodeTests(SimpleTestCase):
    def test_zero_selector_is_empty(self):
        point = ParamPoint(2, 1, 2, ((-1, 0, 1, 0, 0, 1),), 0)
        self.assertEqual(decode(point).conjuncts, ())

    def test_full_selector_is_whole_space(self):
        point = ParamPoint(2, 2, 1, ((1, 0, 0), (0, 1, -1)), 2**9 - 1)
        d = decode(point)
        self.assertEqual(len(d.conjuncts), 9)
        rng = random.Random(5)
        for _ in range(50):
            self.assertTrue(member(d, random_point(rng, 2)))

    def test_selector_out_of_range(self):
        with self.assertRaises(SelectorRangeError):
            decode(ParamPoint(1, 1, 1, ((0, 1),), 8))

    def test_circle_membership_on_grid(self):
        d = decode(encode(circle(), 1, 2))
        grid = [Rational(k, 3) for k in range(-5, 5)]
        for a in grid:
            for b in grid:
                self.assertEqual(member(d, [a, b]), member(circle(), [a, b]))
        self.assertTrue(member(d, [Rational(3, 5), Rational(4, 5)]))

    def test_degree_never_grows(self):
        rng = random.Random(11)
        for _ in range(20):
            d = random_description(rng, 2, 3, 2)
            self.assertLessEqual(complexity_of(decode(encode(d, 3, 2))).q, 2)


class RoundTripTests(SimpleTestCase):
    def test_membership_agrees(self):
        rng = random.Random(2024)
        on_zero_sets = 0
        for _ in range(100):
            n, p, q = rng.randint(1, 3), rng.randint(1, 4), rng.randint(1, 3)
            d = random_description(rng, n, p, q)
            decoded = decode(encode(d, p, q))
            zeros = zero_set_points(rng, d)
            on_zero_sets += len(zeros)
            for i in range(1000):
                x = rng.choice(zeros) if zeros and i % 2 else random_point(rng, n)
                self.assertEqual(member(decoded, x), member(d, x), (d, x))
            if n <= 2:
                self.assertTrue(sets_equal(decoded, d), d)
        self.assertGreater(on_zero_sets, 0)

    def test_larger_capacity_still_round_trips(self):
        rng = random.Random(8)
        for _ in range(10):
            d = random_description(rng, 2, 2, 2)
            decoded = decode(encode(d, 3, 3))
            for _ in range(40):
                x = random_point(rng, 2)
                self.assertEqual(member(decoded, x), member(d, x))


class ParamPointTextTests(SimpleTestCase):
    def test_format(self):
        text = format_param_point(encode(circle(), 1, 2))
        self.assertEqual(text, "param 2 1 2 2\n-1 0 1 0 0 1\n")

    def test_parse_back(self):
        point = encode(describe(1, [(T - Rational(1, 2), "<")]), 2, 1)
        self.assertEqual(parse_param_point(format_param_point(point)), point)

    def test_bad_header(self):
        with self.assertRaises(DescriptionSyntaxError):
            parse_param_point("point 1 1 1 0\n0 1\n")

    def test_wrong_block_count(self):
        with self.assertRaises(DescriptionSyntaxError):
            parse_param_point("param 1 2 1 0\n0 1\n")

    def test_serializer_accepts_own_output(self):
        point = encode(circle(), 2, 2)
        serializer = ParamPointSerializer(data=ParamPointSerializer(point).data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.to_param_point(), point)
