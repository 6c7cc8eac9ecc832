# -*- coding: utf-8 -*-

"""
Unit tests for Cotor, derived cotensor products and homotopy pullbacks.

Author: Gertjan van den Burg

"""

import unittest

from hypothesis import given
from hypothesis import seed
from hypothesis import settings
from hypothesis import strategies as st

from aqcoalg.caps import Caps
from aqcoalg.coalgebra import Coalgebra
from aqcoalg.coalgebra import Comodule
from aqcoalg.coalgebra import SubcoalgebraPair
from aqcoalg.coalgebra import primitives
from aqcoalg.coalgebra import tensor_coalgebra
from aqcoalg.coalgebra import validate_coalgebra
from aqcoalg.cosimplicial import CosimplicialMap
from aqcoalg.cosimplicial import cohomotopy
from aqcoalg.cosimplicial import constant
from aqcoalg.cotor import basepoint_map
from aqcoalg.cotor import cobar_complex
from aqcoalg.cotor import cobar_resolution
from aqcoalg.cotor import connectivity
from aqcoalg.cotor import cotor
from aqcoalg.cotor import cotor1_star_check
from aqcoalg.cotor import derived_cotensor
from aqcoalg.cotor import euler_characteristic
from aqcoalg.cotor import homotopy_pullback
from aqcoalg.cotor import loop_object
from aqcoalg.cotor import vanishing_region
from aqcoalg.exceptions import BudgetExceeded
from aqcoalg.exceptions import ValidationError
from aqcoalg.linalg import Field
from aqcoalg.linalg import GradedLinearMap
from aqcoalg.linalg import GradedVectorSpace


def point(C, label="p"):
    """The ground field as a trivial comodule in degree zero."""
    W = GradedVectorSpace(C.field, C.max_degree, [[label]])
    return Comodule.trivial(C, W, coabelian=True)


class ResolutionTestCase(unittest.TestCase):
    def setUp(self):
        self.C = Coalgebra.exterior(Field.F2, 1, 3)
        self.P = point(self.C)

    def test_stages(self):
        resolution = cobar_resolution(self.P, 2)
        self.assertTrue(resolution.check_exact().ok)
        self.assertEqual(
            resolution.dims(), [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
        )
        self.assertEqual(resolution.cogenerators(0).dims(), [1, 0, 0, 0])
        self.assertEqual(resolution.cogenerators(1).dims(), [0, 1, 0, 0])
        self.assertEqual(resolution.cogenerators(2).dims(), [0, 0, 1, 0])

    def test_budget(self):
        with self.assertRaises(BudgetExceeded) as cm:
            cobar_resolution(self.P, 2, caps=Caps(budget=1))
        self.assertEqual(cm.exception.needed, 2)
        self.assertEqual(cm.exception.budget, 1)

    def test_rejects(self):
        with self.assertRaises(ValueError):
            cobar_resolution(self.P, -1)
        W = GradedVectorSpace(Field.F2, 3, [["m"]])
        broken = Comodule(self.C, W, {"m": {}})
        with self.assertRaises(ValidationError):
            cobar_resolution(broken, 1)


class CotorTestCase(unittest.TestCase):
    def test_exterior_periodic(self):
        cases = [(Field.F2, 1, 4), (Field.Q, 1, 4), (Field.Q, 2, 6)]
        for field, m, D in cases:
            C = Coalgebra.exterior(field, m, D)
            P = point(C)
            expected = {(p, p * m): 1 for p in range(4)}
            for method in ("resolution", "cobar"):
                with self.subTest(field=field, m=m, method=method):
                    groups = cotor(P, P, 3, method=method)
                    self.assertEqual(groups.dims(), expected)

    def test_cross_check(self):
        C = Coalgebra.divided_power(Field.F2, 1, 3, 3)
        P = point(C)
        groups = cotor(P, P, 2, cross_check=True)
        self.assertEqual(groups.dim(0, 0), 1)
        self.assertEqual(groups.dim(1, 1), 1)

    def test_ground_field(self):
        F = Coalgebra.terminal(Field.Q, 2)
        W = GradedVectorSpace(Field.Q, 2, [["a"], ["b"]])
        M = Comodule.trivial(F, W)
        groups = cotor(M, M, 2, cross_check=True)
        self.assertEqual(groups.dims(), {(0, 0): 1, (0, 1): 2, (0, 2): 1})

    def test_cofree_vanishes(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        R = Comodule.regular(C)
        groups = cotor(R, R, 2)
        self.assertEqual(groups.column(0), [1, 1, 0])
        self.assertEqual(groups.column(1), [0, 0, 0])
        self.assertEqual(groups.column(2), [0, 0, 0])

    def test_labels(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        P = point(C)
        groups = cotor(P, P, 1)
        self.assertEqual(groups.basis(1, 1), ["cotor1:1:0"])
        self.assertIn("cotor1:1:0", groups.representatives)

    def test_euler(self):
        C = Coalgebra.exterior(Field.F2, 1, 4)
        P = point(C)
        chi = euler_characteristic(cotor(P, P, 3))
        self.assertEqual(chi, {0: 1, 1: -1, 2: 1, 3: -1})

    def test_rejects(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        P = point(C)
        with self.assertRaises(ValueError):
            cotor(P, P, 1, method="koszul")
        with self.assertRaises(ValueError):
            cotor(P, point(Coalgebra.exterior(Field.F2, 1, 2)), 1)

    def test_cobar_budget(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        P = point(C)
        with self.assertRaises(BudgetExceeded):
            cobar_complex(P, P, 3, caps=Caps(budget=4))


STAR_COALGEBRAS = [
    Coalgebra.exterior(Field.F2, 1, 2),
    Coalgebra.exterior(Field.Q, 2, 4),
    Coalgebra.divided_power(Field.F2, 1, 3, 2),
    tensor_coalgebra(
        [
            Coalgebra.exterior(Field.F2, 1, 2, generator="x"),
            Coalgebra.exterior(Field.F2, 1, 2, generator="y"),
        ]
    ),
]


def delta_closure(C, labels):
    """The smallest subset of the basis containing ``labels`` and the
    basepoint whose span is a subcoalgebra."""
    keep = set(labels) | {C.basepoint}
    todo = list(keep)
    while todo:
        for a, b in C.delta(todo.pop()):
            for y in (a, b):
                if y not in keep:
                    keep.add(y)
                    todo.append(y)
    return [x for x in C.carrier.labels() if x in keep]


class StarTestCase(unittest.TestCase):
    def test_unit_pair(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        pair = SubcoalgebraPair.from_labels(C, ["1"], ["1"])
        check = cotor1_star_check(pair)
        self.assertTrue(check.ok)
        self.assertEqual(check.to_dict()["cotor1"], [0, 1, 0])

    @seed(20190723)
    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_random_pairs(self, data):
        C = data.draw(st.sampled_from(STAR_COALGEBRAS))
        labels = list(C.carrier.labels())
        K = data.draw(st.lists(st.sampled_from(labels), max_size=len(labels)))
        L = data.draw(st.lists(st.sampled_from(labels), max_size=len(labels)))
        pair = SubcoalgebraPair.from_labels(
            C, delta_closure(C, K), delta_closure(C, L)
        )
        check = cotor1_star_check(pair)
        self.assertEqual(check.cotor_dims, check.star_dims)

    def test_vanishing_region(self):
        C = Coalgebra.exterior(Field.F2, 2, 3)
        P = point(C)
        self.assertEqual(vanishing_region(P, P, 2), [])
        self.assertEqual(vanishing_region(P, P, 3), [(1, 2)])

    def test_vanishing_region_three(self):
        for field in (Field.F2, Field.Q):
            with self.subTest(field=field):
                P = point(Coalgebra.exterior(field, 3, 4))
                self.assertEqual(vanishing_region(P, P, 3), [])
        P = point(Coalgebra.exterior(Field.F2, 2, 4))
        self.assertEqual(vanishing_region(P, P, 3), [(1, 2)])


class DerivedCotensorTestCase(unittest.TestCase):
    def test_constant_comodules(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        P = constant(point(C), 2)
        result = derived_cotensor(P, P, cross_check=True)
        self.assertEqual(result.S, 2)
        self.assertTrue(result.object.validate().ok)
        self.assertEqual(result.dims(), [[1, 0, 0], [0, 1, 0]])

    def test_rejects_mixed(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        with self.assertRaises(ValueError):
            derived_cotensor(constant(point(C), 2), constant(C.carrier, 2))

    def test_loop(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        X = constant(C, 2)
        self.assertTrue(basepoint_map(X).validate().ok)
        loop = loop_object(X, 1)
        self.assertEqual(loop.kind, "coalgebra")
        self.assertTrue(loop.validate().ok)
        self.assertEqual(loop.name, "Ω^1(cΛ(x))")

    def test_loop_primitives(self):
        # π^n of the n-fold loop object on cC is Pr(C)
        for C in (
            Coalgebra.exterior(Field.F2, 1, 3),
            Coalgebra.exterior(Field.Q, 2, 4),
        ):
            expected = primitives(C).carrier.dims()
            for n in (1, 2):
                with self.subTest(field=C.field, n=n):
                    X = loop_object(constant(C, n + 1), n)
                    self.assertEqual(cohomotopy(X, n).dims(), expected)
                    self.assertEqual(cohomotopy(X, 0).total_dim, 1)

    def test_pullback(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        X = constant(C, 2)
        point_map = basepoint_map(X)
        result = homotopy_pullback(point_map, point_map)
        self.assertEqual(result.dims(), [[1, 0, 0], [0, 1, 0]])
        pi0 = result.pi0_coalgebra()
        self.assertEqual(pi0.carrier.dims(), [1, 0, 0])
        self.assertTrue(validate_coalgebra(pi0).ok)
        self.assertTrue(result.leg("left").validate().ok)
        self.assertTrue(result.leg("right").validate().ok)

    def test_unpointed(self):
        C = Coalgebra.set_like(Field.F2, ["p", "q"], 1)
        C.basepoint = None
        with self.assertRaises(ValueError):
            basepoint_map(constant(C, 1))
        with self.assertRaises(ValueError):
            loop_object(constant(C.carrier, 1))


class ConnectivityTestCase(unittest.TestCase):
    def setUp(self):
        self.V = GradedVectorSpace(Field.Q, 1, [["a"], ["b"]])
        self.Z = GradedVectorSpace.zero(Field.Q, 1)

    def test_identity(self):
        f = CosimplicialMap.identity(constant(self.V, 2))
        report = connectivity(f)
        self.assertEqual(report.n, 1)
        self.assertEqual(report.to_dict()["truncation"], 2)

    def test_zero(self):
        f = CosimplicialMap.constant(GradedLinearMap.zero(self.V, self.V), 2)
        self.assertEqual(connectivity(f).n, -1)

    def test_from_zero(self):
        f = CosimplicialMap.constant(GradedLinearMap.zero(self.Z, self.V), 2)
        self.assertEqual(connectivity(f).n, 0)


if __name__ == "__main__":
    unittest.main()
