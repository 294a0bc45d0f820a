"""Тесты комплексов, свободных граней и элементарных шагов."""

import random

from django.conf import settings
from django.test import SimpleTestCase

from collapses.exceptions import ComplexSyntaxError, InvalidStepError
from collapses.services import (
    apply_collapse,
    apply_expansion,
    collapse,
    euler_characteristic,
    expansion,
    format_complex,
    free_faces,
    parse_complex,
)


def corpus(name):
    return parse_complex((settings.RCFW_CORPUS_DIR / name).read_text(encoding="utf-8"))


def names(pairs):
    return [("".join(sorted(s)), "".join(sorted(t))) for s, t in pairs]


class ParseComplexTests(SimpleTestCase):
    def test_full_triangle(self):
        k = parse_complex("abc")
        self.assertEqual(len(k), 7)
        self.assertEqual(k.f_vector, [3, 3, 1])

    def test_hollow_triangle(self):
        k = parse_complex("ab ac bc")
        self.assertEqual(len(k), 6)
        self.assertEqual(format_complex(k), "ab ac bc")

    def test_duplicate_facet(self):
        k = parse_complex("a a")
        self.assertEqual(len(k), 1)
        self.assertEqual(k.vertices, ["a"])

    def test_duplicate_vertex(self):
        with self.assertRaises(ComplexSyntaxError) as ctx:
            parse_complex("ab\naba")
        self.assertEqual(ctx.exception.line, 2)

    def test_empty_facet(self):
        with self.assertRaises(ComplexSyntaxError):
            parse_complex("v1,,v2")

    def test_long_labels(self):
        k = parse_complex("v1,v2,v10 # комментарий")
        self.assertEqual(k.vertices, ["v1", "v10", "v2"])
        self.assertEqual(format_complex(k), "v1,v10,v2")
        self.assertEqual(parse_complex(format_complex(k)), k)

    def test_comment_lines(self):
        self.assertEqual(parse_complex("# треугольник\nabc\n"), parse_complex("abc"))


class FreeFacesTests(SimpleTestCase):
    def test_full_triangle(self):
        self.assertEqual(
            names(free_faces(parse_complex("abc"))), [("ab", "abc"), ("ac", "abc"), ("bc", "abc")]
        )

    def test_hollow_triangle(self):
        self.assertEqual(free_faces(corpus("hollow_triangle.cx")), [])

    def test_dunce_hat(self):
        k = corpus("dunce_hat.cx")
        self.assertEqual(len(k.vertices), 8)
        self.assertEqual(k.f_vector, [8, 24, 17])
        self.assertEqual(free_faces(k), [])
        self.assertEqual(euler_characteristic(k), 1)

    def test_bing_house(self):
        k = corpus("bing_house.cx")
        self.assertEqual(k.f_vector, [72, 237, 166])
        self.assertEqual(free_faces(k), [])
        self.assertEqual(euler_characteristic(k), 1)

    def test_segment_endpoints(self):
        self.assertEqual(names(free_faces(parse_complex("ab"))), [("a", "ab"), ("b", "ab")])


class StepTests(SimpleTestCase):
    def test_collapse_sequence(self):
        k = apply_collapse(parse_complex("abc"), collapse("ab", "abc"))
        self.assertEqual(format_complex(k), "ac bc")
        k = apply_collapse(k, collapse("b", "bc"))
        self.assertEqual(format_complex(k), "ac")

    def test_collapse_of_absent_simplex(self):
        with self.assertRaises(InvalidStepError):
            apply_collapse(parse_complex("ab ac bc"), collapse("ab", "abc"))

    def test_face_not_free(self):
        with self.assertRaises(InvalidStepError):
            apply_collapse(parse_complex("abc abd"), collapse("ab", "abc"))

    def test_wrong_shape(self):
        with self.assertRaises(InvalidStepError):
            apply_collapse(parse_complex("abc"), collapse("a", "abc"))

    def test_expansion(self):
        k = apply_expansion(parse_complex("ab ac"), expansion("bc", "abc"))
        self.assertEqual(format_complex(k), "abc")
        k = apply_expansion(k, expansion("d", "ad"))
        self.assertEqual(format_complex(k), "abc ad")

    def test_expansion_needs_other_faces(self):
        with self.assertRaises(InvalidStepError):
            apply_expansion(parse_complex("ab"), expansion("bc", "abc"))
        with self.assertRaises(InvalidStepError):
            apply_expansion(parse_complex("abc"), expansion("bc", "abc"))

    def test_collapse_then_expansion_is_identity(self):
        rng = random.Random(7)
        for name in ("simplex3.cx", "simplex4.cx"):
            k = corpus(name)
            for _ in range(50):
                pairs = free_faces(k)
                if not pairs:
                    break
                sigma, tau = rng.choice(pairs)
                smaller = apply_collapse(k, collapse(sigma, tau))
                self.assertTrue(smaller.is_face_closed())
                self.assertEqual(apply_expansion(smaller, expansion(sigma, tau)), k)
                k = smaller

    def test_euler_characteristic_is_invariant(self):
        rng = random.Random(11)
        executed = 0
        for name in ("simplex2.cx", "simplex3.cx", "simplex4.cx"):
            for _ in range(50):
                k = corpus(name)
                chi = euler_characteristic(k)
                while True:
                    pairs = free_faces(k)
                    if not pairs:
                        break
                    k = apply_collapse(k, collapse(*rng.choice(pairs)))
                    executed += 1
                    self.assertEqual(euler_characteristic(k), chi)
        self.assertGreaterEqual(executed, 1000)
