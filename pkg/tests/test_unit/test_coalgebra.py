# -*- coding: utf-8 -*-

"""
Unit tests for coalgebras, comodules and the constructions on them.

Author: Gertjan van den Burg

"""

import unittest

from hypothesis import given
from hypothesis import seed
from hypothesis import settings
from hypothesis import strategies as st

from aqcoalg.coalgebra import Coalgebra
from aqcoalg.coalgebra import CoalgebraMap
from aqcoalg.coalgebra import Comodule
from aqcoalg.coalgebra import Shifted
from aqcoalg.coalgebra import SubcoalgebraPair
from aqcoalg.coalgebra import coabelianize
from aqcoalg.coalgebra import coalgebra_map_freedom
from aqcoalg.coalgebra import comodule_homs
from aqcoalg.coalgebra import comodule_isomorphism
from aqcoalg.coalgebra import cotensor
from aqcoalg.coalgebra import derivations
from aqcoalg.coalgebra import enumerate_coalgebra_maps
from aqcoalg.coalgebra import find_grouplikes
from aqcoalg.coalgebra import iota
from aqcoalg.coalgebra import primitives
from aqcoalg.coalgebra import primitives_rel
from aqcoalg.coalgebra import quotient_comodule
from aqcoalg.coalgebra import root_map
from aqcoalg.coalgebra import shift
from aqcoalg.coalgebra import star_and_circ
from aqcoalg.coalgebra import sub_comodule
from aqcoalg.coalgebra import tensor_coalgebra
from aqcoalg.coalgebra import validate_coalgebra
from aqcoalg.exceptions import BudgetExceeded
from aqcoalg.exceptions import UnsupportedInput
from aqcoalg.exceptions import ValidationError
from aqcoalg.linalg import Field
from aqcoalg.linalg import GradedLinearMap
from aqcoalg.linalg import GradedVectorSpace
from aqcoalg.linalg import Subspace
from aqcoalg.steenrod import UnstableRightModule


def dual_numbers(field):
    """Degree zero coalgebra dual to F[e]/(e^2); it is not set-like."""
    carrier = GradedVectorSpace(field, 0, [["a", "b"]])
    one = field.one
    coproduct = {
        "a": {("a", "a"): one},
        "b": {("a", "b"): one, ("b", "a"): one},
    }
    return Coalgebra(carrier, coproduct, {"a": one}, basepoint="a")


def point_module(C, degree, label="m"):
    """A one dimensional trivial comodule concentrated in one degree."""
    basis = [[] for _ in range(C.max_degree + 1)]
    basis[degree].append(label)
    W = GradedVectorSpace(C.field, C.max_degree, basis)
    return Comodule.trivial(C, W, coabelian=True)


class CoalgebraTestCase(unittest.TestCase):
    def test_standard_examples_valid(self):
        for field in (Field.F2, Field.Q):
            examples = [
                Coalgebra.terminal(field, 3),
                Coalgebra.exterior(field, 1, 3),
                Coalgebra.exterior(field, 2, 3),
                Coalgebra.set_like(field, ["p", "q"], 2),
                Coalgebra.divided_power(field, 2, 3, 4),
            ]
            for C in examples:
                with self.subTest(field=field, coalgebra=C.name):
                    report = validate_coalgebra(C)
                    self.assertTrue(report.ok, msg=report.violations)

    def test_divided_power_action(self):
        C = Coalgebra.divided_power(Field.F2, 1, 4, 3)
        self.assertEqual(C.carrier.dims(), [1, 1, 1, 1])
        self.assertEqual(C.action().act("g2", 1), {"g1": 1})
        self.assertEqual(C.action().act("g3", 1), {})
        self.assertEqual(root_map(C, "g2"), {"g1": 1})
        self.assertTrue(validate_coalgebra(C).ok)

    @seed(20190723)
    @settings(max_examples=25, deadline=None)
    @given(
        st.sampled_from([Field.F2, Field.Q]),
        st.lists(
            st.tuples(
                st.sampled_from(["exterior", "divided"]),
                st.integers(min_value=1, max_value=3),
            ),
            min_size=1,
            max_size=2,
        ),
    )
    def test_tensor_products_valid(self, field, factors):
        built = []
        for i, (kind, m) in enumerate(factors):
            name = "g%i" % i
            if kind == "exterior":
                built.append(Coalgebra.exterior(field, m, 3, generator=name))
            else:
                # over Q only even generators have nonzero squares
                height = 3 if field is Field.F2 or m % 2 == 0 else 2
                built.append(Coalgebra.divided_power(field, m, height, 3, name=name))
        C = built[0] if len(built) == 1 else tensor_coalgebra(built)
        report = validate_coalgebra(C)
        self.assertTrue(report.ok, msg=str(report.violations))
        with self.assertRaises(ValueError):
            Coalgebra.divided_power(Field.Q, 1, 3, 3)

    def test_connected(self):
        C = Coalgebra.exterior(Field.Q, 2, 4)
        self.assertTrue(C.is_connected())
        self.assertEqual(C.unit_label(), "1")
        self.assertFalse(Coalgebra.set_like(Field.Q, ["p", "q"], 1).is_connected())

    def test_degree_additivity(self):
        carrier = GradedVectorSpace(Field.F2, 2, [["1"], [], ["x"]])
        coproduct = {"1": {("1", "1"): 1}, "x": {("x", "x"): 1}}
        C = Coalgebra(carrier, coproduct, {"1": 1}, basepoint="1")
        report = validate_coalgebra(C)
        self.assertEqual(report.axioms(), ["degree additivity"])
        self.assertEqual(report.violations[0].witness, "x")

    def test_coassociativity(self):
        carrier = GradedVectorSpace(Field.F2, 3, [["1"], ["x"], ["y"], ["z"]])
        coproduct = {
            "1": {("1", "1"): 1},
            "x": {("x", "1"): 1, ("1", "x"): 1},
            "y": {("y", "1"): 1, ("1", "y"): 1, ("x", "x"): 1},
            "z": {("z", "1"): 1, ("1", "z"): 1, ("y", "x"): 1},
        }
        C = Coalgebra(carrier, coproduct, {"1": 1}, basepoint="1")
        report = validate_coalgebra(C)
        self.assertFalse(report.ok)
        self.assertIn("coassociativity", report.axioms())
        witnesses = [
            v.witness for v in report.violations if v.axiom == "coassociativity"
        ]
        self.assertEqual(witnesses, ["z"])

    def test_counit(self):
        carrier = GradedVectorSpace(Field.Q, 1, [["1"], ["x"]])
        coproduct = {"1": {("1", "1"): 1}, "x": {("x", "1"): 1}}
        C = Coalgebra(carrier, coproduct, {"1": 1}, basepoint="1")
        self.assertIn("counit", validate_coalgebra(C).axioms())

    def test_set_like(self):
        for field in (Field.F2, Field.Q):
            with self.subTest(field=field):
                report = validate_coalgebra(dual_numbers(field))
                self.assertEqual(report.axioms(), ["set-like"])
                self.assertTrue(
                    validate_coalgebra(dual_numbers(field), check_unstable=False).ok
                )
        self.assertEqual(find_grouplikes(dual_numbers(Field.F2)), [{"a": 1}])
        points = Coalgebra.set_like(Field.F2, ["p", "q"], 0)
        self.assertEqual(find_grouplikes(points), [{"q": 1}, {"p": 1}])

    def test_root_map_violation(self):
        C = Coalgebra.divided_power(Field.F2, 3, 3, 6)
        self.assertEqual(root_map(C, "g2"), {"g1": 1})
        report = validate_coalgebra(C)
        self.assertIn("root map", report.axioms())

    def test_tensor(self):
        for field in (Field.F2, Field.Q):
            X = Coalgebra.exterior(field, 1, 2, generator="x")
            Y = Coalgebra.exterior(field, 1, 2, generator="y")
            C = tensor_coalgebra([X, Y])
            with self.subTest(field=field):
                self.assertEqual(C.carrier.dims(), [1, 2, 1])
                self.assertEqual(C.basepoint, ("1", "1"))
                self.assertTrue(validate_coalgebra(C).ok)

    def test_relabel(self):
        C = Coalgebra.exterior(Field.F2, 2, 2)
        R = C.relabel({"1": "e", "x": "t"})
        self.assertEqual(R.delta("t"), {("t", "e"): 1, ("e", "t"): 1})
        self.assertEqual(R.basepoint, "e")
        self.assertTrue(validate_coalgebra(R).ok)


class CoalgebraMapTestCase(unittest.TestCase):
    def test_identity(self):
        C = Coalgebra.divided_power(Field.F2, 1, 3, 2)
        self.assertTrue(CoalgebraMap.identity(C).check().ok)

    def test_failures(self):
        C = Coalgebra.exterior(Field.F2, 1, 1)
        f = CoalgebraMap.from_columns(C, C, {"x": {"x": 1}})
        report = f.check()
        self.assertEqual(report.axioms(), ["comultiplicative", "counital"])

    def test_enumerate_points(self):
        C = Coalgebra.set_like(Field.F2, ["p", "q"], 1)
        self.assertEqual(len(enumerate_coalgebra_maps(C, C)), 4)
        self.assertEqual(len(enumerate_coalgebra_maps(C, C, invertible=True)), 2)
        with self.assertRaises(BudgetExceeded):
            enumerate_coalgebra_maps(C, C, limit=2)

    def test_enumerate_exterior(self):
        C = Coalgebra.exterior(Field.F2, 1, 1)
        maps = enumerate_coalgebra_maps(C, C)
        self.assertEqual(len(maps), 2)
        auts = enumerate_coalgebra_maps(C, C, invertible=True)
        self.assertEqual(auts, [GradedLinearMap.identity(C.carrier)])
        rows = coalgebra_map_freedom(C, C, {"1": {"1": 1}})
        self.assertEqual(rows, [dict(degree=1, freedom=1, solvable=True)])

    def test_enumerate_rejects(self):
        with self.assertRaises(UnsupportedInput):
            enumerate_coalgebra_maps(dual_numbers(Field.F2), dual_numbers(Field.F2))
        C = Coalgebra.exterior(Field.Q, 1, 1)
        with self.assertRaises(ValueError):
            enumerate_coalgebra_maps(C, C)


class ComoduleTestCase(unittest.TestCase):
    def setUp(self):
        self.L = Coalgebra.exterior(Field.F2, 1, 2)
        self.F = Coalgebra.terminal(Field.F2, 2)

    def test_regular_and_from_map(self):
        R = Comodule.regular(self.L)
        self.assertTrue(R.validate().ok)
        M = Comodule.from_map(CoalgebraMap.identity(self.L))
        self.assertEqual(M.coaction, R.coaction)
        self.assertEqual(R.right_rho("x"), {("x", "1"): 1, ("1", "x"): 1})

    def test_cofree(self):
        W = GradedVectorSpace(Field.F2, 2, [["w"], ["v"]])
        M = Comodule.cofree(self.L, W)
        self.assertEqual(M.carrier.dims(), [1, 2, 1])
        self.assertTrue(M.validate().ok)

    def test_trivial_needs_basepoint(self):
        C = Coalgebra.set_like(Field.F2, [], 1)
        W = GradedVectorSpace(Field.F2, 1, [["w"]])
        with self.assertRaises(ValueError):
            Comodule.trivial(C, W)

    def test_counit_violation(self):
        W = GradedVectorSpace(Field.F2, 2, [["m"]])
        M = Comodule(self.L, W, {"m": {}})
        self.assertEqual(M.validate().axioms(), ["comodule counit"])

    def test_sub_and_quotient(self):
        R = Comodule.regular(self.L)
        position = self.L.carrier.position
        unit = Subspace.span(Field.F2, [{"1": 1}], position)
        sub = sub_comodule(R, unit)
        self.assertEqual(sub.carrier.dims(), [1, 0, 0])
        self.assertEqual(sub.inclusion.image_of("ker:0:0"), {"1": 1})
        self.assertTrue(sub.validate().ok)
        Q, projection = quotient_comodule(R, unit, name="L/F")
        self.assertEqual(Q.carrier.dims(), [0, 1, 0])
        self.assertEqual(Q.rho("x"), {("1", "x"): 1})
        self.assertEqual(projection.image_of("1"), {})
        self.assertTrue(Q.validate().ok)
        top = Subspace.span(Field.F2, [{"x": 1}], position)
        with self.assertRaises(ValueError):
            sub_comodule(R, top)


class IsomorphismTestCase(unittest.TestCase):
    def test_regular(self):
        R = Comodule.regular(Coalgebra.exterior(Field.F2, 1, 2))
        f = comodule_isomorphism(R, R)
        self.assertIsNotNone(f)
        self.assertTrue(f.is_injective())
        with self.assertRaises(BudgetExceeded):
            comodule_isomorphism(R, R, limit=1)

    def test_rational_block(self):
        # a generic endomorphism of two trivial points has determinant
        # c0 c3 - c1 c2
        F = Coalgebra.terminal(Field.Q, 1)
        M = Comodule.trivial(F, GradedVectorSpace(Field.Q, 1, [["a", "b"], []]))
        self.assertEqual(comodule_homs(M, M).dim, 4)
        f = comodule_isomorphism(M, M)
        self.assertIsNotNone(f)
        self.assertTrue(f.is_injective())

    def test_not_isomorphic(self):
        L = Coalgebra.exterior(Field.Q, 1, 1)
        R = Comodule.regular(L)
        W = GradedVectorSpace(Field.Q, 1, [["w"], ["v"]])
        T = Comodule.trivial(L, W)
        self.assertEqual(R.carrier.dims(), T.carrier.dims())
        self.assertIsNone(comodule_isomorphism(R, T))
        Z = Comodule.trivial(L, GradedVectorSpace.zero(Field.Q, 1))
        self.assertIsNone(comodule_isomorphism(R, Z))


class CotensorTestCase(unittest.TestCase):
    def test_over_ground_field(self):
        F = Coalgebra.terminal(Field.F2, 2)
        W = GradedVectorSpace(Field.F2, 2, [["a"], ["b", "c"]])
        V = GradedVectorSpace(Field.F2, 2, [["d"], ["e"]])
        M, N = Comodule.trivial(F, W), Comodule.trivial(F, V)
        self.assertEqual(cotensor(M, N).dims(), [1, 3, 2])

    def test_regular_unit(self):
        for field in (Field.F2, Field.Q):
            L = Coalgebra.exterior(field, 1, 2)
            R = Comodule.regular(L)
            with self.subTest(field=field):
                self.assertEqual(cotensor(R, R).dims(), [1, 1, 0])

    def test_point_cotensor(self):
        L = Coalgebra.exterior(Field.F2, 2, 4)
        P = point_module(L, 0, label="p")
        product = cotensor(P, P)
        self.assertEqual(product.dims(), [1, 0, 0, 0, 0])
        self.assertEqual(
            product.inclusion.image_of("ker:0:0"), {("p", "p"): 1}
        )

    def test_cofree_right(self):
        L = Coalgebra.exterior(Field.F2, 1, 2)
        W = GradedVectorSpace(Field.F2, 2, [["w"]])
        self.assertEqual(
            cotensor(Comodule.regular(L), Comodule.cofree(L, W)).dims(), [1, 1, 0]
        )

    def test_symmetric_dims(self):
        L = Coalgebra.exterior(Field.Q, 1, 2)
        R, P = Comodule.regular(L), point_module(L, 1)
        self.assertEqual(cotensor(R, P).dims(), cotensor(P, R).dims())

    def test_different_bases(self):
        A = Comodule.regular(Coalgebra.exterior(Field.F2, 1, 2))
        B = Comodule.regular(Coalgebra.exterior(Field.F2, 1, 2))
        with self.assertRaises(ValueError):
            cotensor(A, B)


class PrimitivesTestCase(unittest.TestCase):
    def test_exterior(self):
        for field in (Field.F2, Field.Q):
            C = Coalgebra.exterior(field, 2, 3)
            with self.subTest(field=field):
                P = primitives(C)
                self.assertEqual(P.carrier.dims(), [0, 0, 1, 0])
                self.assertEqual(P.inclusion.image_of("pr:2:0"), {"x": field.one})

    def test_terminal_and_divided_power(self):
        self.assertEqual(primitives(Coalgebra.terminal(Field.Q, 2)).carrier.total_dim, 0)
        C = Coalgebra.divided_power(Field.F2, 1, 4, 3)
        self.assertEqual(primitives(C).carrier.dims(), [0, 1, 0, 0])

    def test_unpointed(self):
        with self.assertRaises(ValueError):
            primitives(Coalgebra.set_like(Field.Q, [], 1))

    def test_relative(self):
        L = Coalgebra.exterior(Field.F2, 1, 2)
        P = primitives_rel(Comodule.regular(L))
        self.assertEqual(P.carrier.dims(), [1, 0, 0])


class SquareZeroTestCase(unittest.TestCase):
    def test_exterior_from_point(self):
        for field in (Field.F2, Field.Q):
            F = Coalgebra.terminal(field, 2)
            M = point_module(F, 2)
            E = iota(F, M)
            with self.subTest(field=field):
                self.assertEqual(E.carrier.dims(), [1, 0, 1])
                self.assertEqual(
                    E.delta("m"), {("1", "m"): field.one, ("m", "1"): field.one}
                )
                self.assertTrue(validate_coalgebra(E).ok)
                self.assertEqual(E.name, "ι(M)")
                composite = E.projection.compose(E.inclusion)
                self.assertEqual(
                    composite.linear, GradedLinearMap.identity(F.carrier)
                )
                self.assertTrue(E.inclusion.check().ok)
                self.assertTrue(E.projection.check().ok)

    def test_rejects(self):
        F = Coalgebra.terminal(Field.F2, 2)
        W = GradedVectorSpace(Field.F2, 2, [[], ["y"], ["x"]])
        action = UnstableRightModule(W, {("x", 1): {"y": 1}})
        M = Comodule.trivial(F, W, steenrod=action)
        self.assertTrue(M.validate().ok)
        with self.assertRaises(ValidationError):
            iota(F, M)
        with self.assertRaises(ValidationError):
            iota(F, point_module(F, 1, label="1"))
        G = Coalgebra.terminal(Field.F2, 2)
        with self.assertRaises(ValueError):
            iota(G, point_module(F, 1))

    def test_shift(self):
        L = Coalgebra.exterior(Field.F2, 1, 4)
        R = Comodule.regular(L)
        self.assertIs(shift(R, 0), R)
        once = shift(shift(R, 1), 1)
        twice = shift(R, 2)
        self.assertEqual(once.carrier, twice.carrier)
        self.assertEqual(once.coaction, twice.coaction)
        self.assertEqual(twice.carrier.dims(), [0, 0, 1, 1, 0])
        self.assertEqual(Shifted(Shifted("x", 1), 1), Shifted("x", 2))
        self.assertTrue(twice.coabelian)
        self.assertEqual(twice.name, "%s[2]" % R.name)
        with self.assertRaises(ValueError):
            shift(R, -1)


class StarCircTestCase(unittest.TestCase):
    def test_whole_coalgebra(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        pair = SubcoalgebraPair.from_labels(C, ["1", "x"], ["1", "x"])
        self.assertTrue(pair.validate().ok)
        result = star_and_circ(pair)
        self.assertEqual(result.star_dims(), [0, 0, 0])
        self.assertEqual(result.circ_dims(), [0, 0, 0])

    def test_unit_pair(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        result = star_and_circ(SubcoalgebraPair.from_labels(C, ["1"], ["1"]))
        self.assertEqual(result.star_dims(), [0, 1, 0])
        self.assertEqual(result.circ_dims(), [0, 0, 0])

    def test_not_subcoalgebra(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        with self.assertRaises(ValidationError):
            SubcoalgebraPair.from_labels(C, ["x"], ["1"])


class DerivationTestCase(unittest.TestCase):
    def test_square_zero_target(self):
        F = Coalgebra.terminal(Field.F2, 2)
        M = point_module(F, 2)
        E = iota(F, M)
        space = derivations(M, E.inclusion)
        self.assertEqual(space.dim, 1)
        self.assertEqual(space.dims_by_degree(), {2: 1})

    def test_ground_field_target(self):
        F = Coalgebra.terminal(Field.F2, 2)
        space = derivations(point_module(F, 2), CoalgebraMap.identity(F))
        self.assertEqual(space.dim, 0)

    def test_adjunction(self):
        F = Coalgebra.terminal(Field.F2, 2)
        M = point_module(F, 2)
        E = iota(F, M)
        ab = coabelianize(E.inclusion)
        self.assertEqual(ab.carrier.dims(), [0, 0, 1])
        self.assertTrue(ab.coabelian)
        homs = comodule_homs(M, ab)
        self.assertEqual(homs.dim, derivations(M, E.inclusion).dim)

    def test_not_coabelian(self):
        F = Coalgebra.terminal(Field.F2, 2)
        W = GradedVectorSpace(Field.F2, 2, [[], ["y"], ["x"]])
        M = Comodule.trivial(
            F, W, steenrod=UnstableRightModule(W, {("x", 1): {"y": 1}})
        )
        with self.assertRaises(ValidationError):
            derivations(M, CoalgebraMap.identity(F))


if __name__ == "__main__":
    unittest.main()
