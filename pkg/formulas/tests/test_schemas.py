"""Тесты компиляторов схем предложений."""

from django.test import SimpleTestCase

from formulas.exceptions import UnsupportedSchemaError
from formulas.models import SchemaKind
from formulas.services import (
    PredicateInstance,
    SchemaService,
    compile_boundary,
    compile_collapse,
    compile_collapse_clauses,
    compile_homeomorphism,
    compile_homeomorphism_clauses,
    compile_submanifold,
    free_vars,
    parameter_names,
    skeleton,
)
from formulas.services.ast import Exists, ForAll
from polycore.services import variables
from semialgebraic.services import describe, empty_set, parse_description

(T,) = variables(1)


def submanifold(s, n=1, m=1, r=0, **kwargs):
    return PredicateInstance(SchemaKind.SUBMANIFOLD, n, m, r, bindings={"S": s}, **kwargs)


def bound_names(f, acc=None):
    acc = [] if acc is None else acc
    if isinstance(f, (Exists, ForAll)):
        acc.extend(f.vars)
        bound_names(f.body, acc)
    elif hasattr(f, "args"):
        for a in f.args:
            bound_names(a, acc)
    elif hasattr(f, "arg"):
        bound_names(f.arg, acc)
    return acc


class SubmanifoldSchemaTests(SimpleTestCase):
    def test_closed_in_point_and_radii(self):
        f = compile_submanifold(submanifold("S"))
        self.assertTrue(all("." in name for name in free_vars(f)))
        self.assertEqual(parameter_names(f), {"S"})

    def test_inlined_set_gives_sentence(self):
        f = compile_submanifold(submanifold(parse_description("set S in R^1 := { x^2 - 1 < 0 }")))
        self.assertEqual(free_vars(f), set())

    def test_skeleton_stable_across_sets(self):
        for n, m in [(1, 1), (2, 1), (2, 0)]:
            first = describe(n, [(variables(n)[0], ">")])
            second = describe(n, [(variables(n)[0] ** 2 - 1, "<")], [(variables(n)[-1], "=")])
            self.assertEqual(
                skeleton(compile_submanifold(submanifold(first, n, m))),
                skeleton(compile_submanifold(submanifold(second, n, m))),
                (n, m),
            )

    def test_no_binder_reused(self):
        f = compile_submanifold(submanifold("S", n=2, m=1, r=1))
        names = bound_names(f)
        self.assertEqual(len(names), len(set(names)))

    def test_smoothness_changes_structure(self):
        c0 = compile_submanifold(submanifold("S", n=2, m=1, r=0))
        c1 = compile_submanifold(submanifold("S", n=2, m=1, r=1))
        self.assertNotEqual(skeleton(c0), skeleton(c1))

    def test_nash_threshold(self):
        with_flag = compile_submanifold(submanifold("S", n=2, m=1, nash_threshold=1))
        c1 = compile_submanifold(submanifold("S", n=2, m=1, r=1))
        self.assertEqual(skeleton(with_flag), skeleton(c1))
        with self.assertRaises(UnsupportedSchemaError):
            compile_submanifold(submanifold("S", n=2, m=1, nash_threshold=2))

    def test_dimension_out_of_range(self):
        with self.assertRaises(UnsupportedSchemaError):
            compile_submanifold(submanifold("S", n=1, m=2))

    def test_unsupported_smoothness(self):
        with self.assertRaises(UnsupportedSchemaError):
            compile_submanifold(submanifold("S", r=2))

    def test_wrong_ambient(self):
        with self.assertRaises(UnsupportedSchemaError):
            compile_submanifold(submanifold(describe(2, [(variables(2)[0], ">")])))

    def test_schema_mismatch(self):
        inst = PredicateInstance(SchemaKind.BOUNDARY, 1, 1, bindings={"S": "S", "T": "T"})
        with self.assertRaises(UnsupportedSchemaError):
            compile_submanifold(inst)


class BoundarySchemaTests(SimpleTestCase):
    def test_clause_names(self):
        inst = PredicateInstance(SchemaKind.BOUNDARY, 2, 1, bindings={"S": "S", "T": "T"})
        self.assertEqual(set(SchemaService.clauses(inst)), {"interior", "boundary"})

    def test_boundary_passed_separately(self):
        inst = PredicateInstance(SchemaKind.BOUNDARY, 1, 1, bindings={"S": "S"})
        f = compile_boundary(inst, "T")
        self.assertEqual(parameter_names(f), {"S", "T"})

    def test_missing_boundary(self):
        inst = PredicateInstance(SchemaKind.BOUNDARY, 1, 1, bindings={"S": "S"})
        with self.assertRaises(UnsupportedSchemaError):
            compile_boundary(inst)

    def test_dimension_zero_rejected(self):
        inst = PredicateInstance(SchemaKind.BOUNDARY, 1, 0, bindings={"S": "S", "T": "T"})
        with self.assertRaises(UnsupportedSchemaError):
            compile_boundary(inst)

    def test_surface_with_boundary_compiles(self):
        inst = PredicateInstance(SchemaKind.BOUNDARY, 2, 2, bindings={"S": "S", "T": "T"})
        names = bound_names(compile_boundary(inst))
        self.assertEqual(len(names), len(set(names)))

    def test_empty_boundary_is_sentence(self):
        inst = PredicateInstance(
            SchemaKind.BOUNDARY,
            1,
            1,
            bindings={"S": describe(1, [(T**2 - 1, "<")]), "T": empty_set(1)},
        )
        self.assertEqual(free_vars(compile_boundary(inst)), set())


class HomeomorphismSchemaTests(SimpleTestCase):
    def test_parameters(self):
        f = compile_homeomorphism("a", "b", "c", 1)
        self.assertEqual(parameter_names(f), {"a", "b", "c"})

    def test_clause_names(self):
        clauses = compile_homeomorphism_clauses("a", "b", "c", 1)
        self.assertEqual(
            list(clauses),
            [
                "graph_in_product",
                "total",
                "functional",
                "injective",
                "onto",
                "continuous",
                "inverse_continuous",
            ],
        )

    def test_graph_dimension_checked(self):
        graph = describe(1, [(T, "=")])
        with self.assertRaises(UnsupportedSchemaError):
            compile_homeomorphism("a", "b", graph, 1)


class CollapseSchemaTests(SimpleTestCase):
    def test_parameters(self):
        f = compile_collapse("X", "Y", "c", 1)
        self.assertEqual(parameter_names(f), {"X", "Y", "c"})

    def test_clause_names(self):
        clauses = compile_collapse_clauses("X", "Y", "c", 2, ambient=2)
        self.assertEqual(
            set(clauses),
            {
                "domain",
                "total",
                "functional",
                "injective",
                "base_in_Y",
                "collar_avoids_Y",
                "cover",
                "continuous",
                "inverse_continuous",
            },
        )

    def test_registry_covers_all_kinds(self):
        self.assertEqual(set(SchemaService.COMPILERS), set(SchemaKind.values))
