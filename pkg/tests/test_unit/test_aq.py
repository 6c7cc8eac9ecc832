# -*- coding: utf-8 -*-

"""
Unit tests for André-Quillen cohomology and objects of type K(M, n).

Author: Gertjan van den Burg

"""

import unittest

from aqcoalg.aq import aq_cohomology
from aqcoalg.aq import aq_dual_oracle
from aqcoalg.aq import filtration_table
from aqcoalg.aq import k_object
from aqcoalg.aq import k_object_by_pullback
from aqcoalg.aq import k_object_map
from aqcoalg.caps import Caps
from aqcoalg.coalgebra import Coalgebra
from aqcoalg.coalgebra import CoalgebraMap
from aqcoalg.coalgebra import Comodule
from aqcoalg.coalgebra import derivations
from aqcoalg.coalgebra import hom_unknowns
from aqcoalg.coalgebra import tensor_coalgebra
from aqcoalg.cofree import cofree_coalgebra
from aqcoalg.cofree import comonad_resolution
from aqcoalg.exceptions import BudgetExceeded
from aqcoalg.exceptions import UnsupportedInput
from aqcoalg.exceptions import ValidationError
from aqcoalg.linalg import Field
from aqcoalg.linalg import GradedLinearMap
from aqcoalg.linalg import GradedVectorSpace
from aqcoalg.steenrod import UnstableRightModule


def point_module(C, degree, label="m"):
    basis = [[] for _ in range(C.max_degree + 1)]
    basis[degree].append(label)
    W = GradedVectorSpace(C.field, C.max_degree, basis)
    return Comodule.trivial(C, W, coabelian=True)


def module(C, generators, coaction):
    """A coabelian comodule from ``(label, degree)`` pairs and a coaction."""
    basis = [[] for _ in range(C.max_degree + 1)]
    for label, degree in generators:
        basis[degree].append(label)
    W = GradedVectorSpace(C.field, C.max_degree, basis)
    return Comodule(C, W, coaction, coabelian=True)


def under_ground_field(D):
    """The coalgebra D under F through its basepoint."""
    F = Coalgebra.terminal(D.field, D.max_degree)
    under = CoalgebraMap.from_columns(
        F, D, {F.basepoint: {D.basepoint: D.field.one}}
    )
    return F, under


class FiltrationTestCase(unittest.TestCase):
    def test_two_classes(self):
        field = Field.Q
        level = GradedVectorSpace(field, 0, [["u", "v"]])
        dout = GradedLinearMap.zero(level, GradedVectorSpace.zero(field, 0))
        components = {"u": {"m1": field.one}, "v": {"m2": field.one}}
        degrees = {"m1": 1, "m2": 2}
        table = filtration_table(
            field, level, dout, None, components.get, degrees.get, 2
        )
        self.assertEqual(table, {1: 1, 2: 1})


class AQTestCase(unittest.TestCase):
    def test_degree_zero_is_derivations(self):
        for field in (Field.F2, Field.Q):
            D = Coalgebra.exterior(field, 1, 2)
            F, under = under_ground_field(D)
            M = point_module(F, 1)
            with self.subTest(field=field):
                result = aq_cohomology(under, M, 0, cross_check=True)
                self.assertEqual(result.dim, derivations(M, under).dim)
                self.assertEqual(result.table, {1: 1})
                self.assertEqual(result.basis(), ["aq0:1:0"])
                self.assertEqual(result.dims(), [0, 1])
                self.assertEqual(result.window, (1, 2))

    def test_exterior_rational(self):
        D = Coalgebra.exterior(Field.Q, 1, 2)
        F, under = under_ground_field(D)
        result = aq_cohomology(under, point_module(F, 1), 1, cross_check=True)
        self.assertTrue(result.vanishes)

    def test_relation_rational(self):
        # the dual of Λ(x) with |x| = 2 has the relation x^2 = 0 in degree 4
        D = Coalgebra.exterior(Field.Q, 2, 4)
        F, under = under_ground_field(D)
        M = point_module(F, 4)
        self.assertTrue(aq_cohomology(under, M, 0).vanishes)
        result = aq_cohomology(under, M, 1, cross_check=True)
        self.assertEqual(result.table, {4: 1})
        dual = aq_dual_oracle(under, M, 1)
        self.assertEqual(dual.method, "dual")
        self.assertEqual(dual.table, result.table)

    def test_relation_f2(self):
        D = Coalgebra.exterior(Field.F2, 1, 2)
        F, under = under_ground_field(D)
        result = aq_cohomology(under, point_module(F, 2), 1, cross_check=True)
        self.assertEqual(result.table, {2: 1})
        self.assertEqual(result.method, "direct")

    def test_shortcut(self):
        D = Coalgebra.exterior(Field.F2, 1, 2)
        F, under = under_ground_field(D)
        M = point_module(F, 2)
        direct = aq_cohomology(under, M, 1)
        short = aq_cohomology(under, M, 1, shortcut=True)
        self.assertEqual(short.method, "shortcut")
        self.assertEqual(short.derivation_dims, direct.derivation_dims)
        self.assertEqual(short.table, direct.table)

    def test_reuse_resolution(self):
        D = Coalgebra.exterior(Field.F2, 1, 2)
        F, under = under_ground_field(D)
        resolution = comonad_resolution(under, 2)
        result = aq_cohomology(
            under, point_module(F, 1), 1, resolution=resolution
        )
        self.assertEqual(result.fingerprint, resolution.fingerprint())
        self.assertEqual(result.to_dict()["caps"], Caps().to_dict())

    def test_rejects(self):
        D = Coalgebra.exterior(Field.F2, 1, 2)
        F, under = under_ground_field(D)
        with self.assertRaises(ValueError):
            aq_cohomology(under, point_module(F, 1), -1)
        with self.assertRaises(ValueError):
            aq_cohomology(under, point_module(D, 1, label="y"), 0)
        with self.assertRaises(UnsupportedInput):
            aq_cohomology(under, point_module(F, 0), 0, shortcut=True)
        with self.assertRaises(UnsupportedInput):
            aq_dual_oracle(under, point_module(F, 1), 0)

        W = GradedVectorSpace(Field.F2, 2, [[], ["y"], ["z"]])
        action = UnstableRightModule(W, {("z", 1): {"y": 1}})
        M = Comodule.trivial(F, W, steenrod=action)
        with self.assertRaises(ValidationError):
            aq_cohomology(under, M, 0)

    def test_resolution_length(self):
        cases = [
            (Coalgebra.exterior(Field.F2, 1, 2), 2, 1),
            (Coalgebra.exterior(Field.Q, 2, 4), 4, 1),
            (Coalgebra.exterior(Field.F2, 1, 2), 1, 0),
        ]
        for D, degree, n in cases:
            F, under = under_ground_field(D)
            M = point_module(F, degree)
            with self.subTest(field=D.field, n=n):
                short = aq_cohomology(under, M, n)
                longer = aq_cohomology(
                    under, M, n, resolution=comonad_resolution(under, n + 2)
                )
                self.assertEqual(longer.table, short.table)

    def test_budget(self):
        D = Coalgebra.exterior(Field.F2, 1, 2)
        F, under = under_ground_field(D)
        with self.assertRaises(BudgetExceeded):
            aq_cohomology(under, point_module(F, 1), 0, caps=Caps(budget=2))


class CofreeTargetTestCase(unittest.TestCase):
    """Higher AQ of a cofree coalgebra vanishes."""

    def test_vanishes(self):
        spaces = [
            GradedVectorSpace(Field.F2, 2, [[], ["v"], []]),
            GradedVectorSpace(Field.Q, 4, [[], [], ["v"], [], []]),
        ]
        for V in spaces:
            G = cofree_coalgebra(V)
            F, under = under_ground_field(G)
            for degree in range(1, G.max_degree + 1):
                M = point_module(F, degree)
                for n in (1, 2):
                    with self.subTest(field=V.field, degree=degree, n=n):
                        self.assertTrue(aq_cohomology(under, M, n).vanishes)


class WindowTestCase(unittest.TestCase):
    """Derivation unknowns live in the degrees of M, but the equations see
    the whole coproduct of the target."""

    def test_unknowns_in_window(self):
        D = tensor_coalgebra(
            [
                Coalgebra.exterior(Field.F2, 1, 3),
                Coalgebra.exterior(Field.F2, 2, 3, generator="y"),
            ]
        )
        F, _ = under_ground_field(D)
        M = point_module(F, 3)
        self.assertEqual(hom_unknowns(M, D), [("m", ("x", "y"))])

    def test_low_degrees_matter(self):
        # x⊗y is not primitive only through its (1, 2) component
        D = tensor_coalgebra(
            [
                Coalgebra.exterior(Field.F2, 1, 3),
                Coalgebra.exterior(Field.F2, 2, 3, generator="y"),
            ]
        )
        F, under = under_ground_field(D)
        self.assertEqual(D.carrier.dim(3), 1)
        self.assertEqual(derivations(point_module(F, 3), under).dim, 0)

        E = Coalgebra.exterior(Field.F2, 3, 3, generator="z")
        G, under = under_ground_field(E)
        self.assertEqual(derivations(point_module(G, 3), under).dim, 1)


class KObjectTestCase(unittest.TestCase):
    def setUp(self):
        self.C = Coalgebra.exterior(Field.F2, 1, 2)
        self.M = point_module(self.C, 1, label="m")

    def test_degree_one(self):
        K = k_object(self.C, self.M, 1, 2)
        self.assertEqual(K.S, 2)
        self.assertEqual(K.copies, [0, 1, 2])
        report, table = K.verify()
        self.assertTrue(report.ok)
        self.assertEqual(table, [[1, 1, 0], [0, 1, 0]])

    def test_degree_zero(self):
        K = k_object(self.C, self.M, 0, 2)
        report, table = K.verify()
        self.assertTrue(report.ok)
        self.assertEqual(table[0], [1, 2, 0])
        self.assertEqual(table[1], [0, 0, 0])

    def test_higher_degrees(self):
        L = Coalgebra.exterior(Field.Q, 2, 4)
        cases = [
            (self.C, self.M, [0, 1, 0]),
            (L, point_module(L, 2), [0, 0, 1, 0, 0]),
        ]
        for C, M, expected in cases:
            for n in (2, 3):
                with self.subTest(field=C.field, n=n):
                    K = k_object(C, M, n, n + 1)
                    report, table = K.verify()
                    self.assertTrue(report.ok)
                    self.assertEqual(table[0], C.carrier.dims())
                    self.assertEqual(table[n], expected)
                    zero = [0] * (C.max_degree + 1)
                    for s in range(1, n):
                        self.assertEqual(table[s], zero)

    def test_rejects(self):
        with self.assertRaises(ValueError):
            k_object(self.C, self.M, 2, 2)
        with self.assertRaises(ValueError):
            k_object(self.C, self.M, -1, 2)
        other = Coalgebra.exterior(Field.F2, 1, 2)
        with self.assertRaises(ValueError):
            k_object(other, self.M, 1, 2)
        with self.assertRaises(BudgetExceeded):
            k_object(self.C, self.M, 1, 2, caps=Caps(budget=3))

    def test_map(self):
        K = k_object(self.C, self.M, 1, 2)
        identity = GradedLinearMap.identity(self.M.carrier)
        F = k_object_map(identity, K, K)
        self.assertTrue(F.validate().ok)
        zero = GradedLinearMap.zero(self.M.carrier, self.M.carrier)
        self.assertTrue(k_object_map(zero, K, K).validate().ok)
        with self.assertRaises(ValueError):
            k_object_map(identity, K, k_object(self.C, self.M, 0, 2))

    def test_pullback(self):
        pullback, report = k_object_by_pullback(self.C, self.M, 2)
        self.assertTrue(report.ok)
        self.assertEqual(pullback.S, 2)


class PullbackTestCase(unittest.TestCase):
    """π^1 of ``cC ×^h cC`` over ``cι_C(M)`` is M with its coaction."""

    def cases(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        yield C, point_module(C, 1)
        C = Coalgebra.exterior(Field.F2, 1, 2)
        yield C, point_module(C, 2)
        C = Coalgebra.exterior(Field.F2, 1, 3)
        yield C, module(
            C,
            [("a", 1), ("b", 2)],
            {"a": {("1", "a"): 1}, "b": {("1", "b"): 1, ("x", "a"): 1}},
        )
        C = Coalgebra.exterior(Field.Q, 2, 4)
        yield C, point_module(C, 2)
        C = Coalgebra.exterior(Field.Q, 2, 4)
        one = Field.Q.one
        yield C, module(
            C,
            [("a", 2), ("b", 4)],
            {"a": {("1", "a"): one}, "b": {("1", "b"): one, ("x", "a"): one}},
        )
        C = Coalgebra.set_like(Field.F2, ["p", "q"], 1)
        yield C, module(C, [("m", 1)], {"m": {("q", "m"): 1}})

    def test_pi1_is_m(self):
        for i, (C, M) in enumerate(self.cases()):
            with self.subTest(case=i):
                self.assertTrue(M.validate(strict=True).ok)
                pullback, report = k_object_by_pullback(C, M, 2)
                self.assertTrue(report.ok, report.violations)
                self.assertEqual(pullback.dims()[0], C.carrier.dims())
                self.assertEqual(pullback.dims()[1], M.carrier.dims())


if __name__ == "__main__":
    unittest.main()
