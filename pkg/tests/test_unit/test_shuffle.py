# -*- coding: utf-8 -*-

"""
Unit tests for the shuffle coproduct on bigraded cohomotopy.

Author: Gertjan van den Burg

"""

import unittest

from aqcoalg.caps import Caps
from aqcoalg.coalgebra import Coalgebra
from aqcoalg.cosimplicial import constant
from aqcoalg.cotor import basepoint_map
from aqcoalg.cotor import loop_object
from aqcoalg.linalg import Field
from aqcoalg.shuffle import Retraction
from aqcoalg.shuffle import ShuffleCoalgebra
from aqcoalg.shuffle import codegeneracy_composite
from aqcoalg.shuffle import shuffles
from aqcoalg.specseq import kunneth_b

UNIT = "pi0:0:0"


class ShufflesTestCase(unittest.TestCase):
    def test_small(self):
        self.assertEqual(shuffles(1, 1), (((0,), (1,), 0), ((1,), (0,), 1)))
        self.assertEqual(shuffles(0, 2), (((), (0, 1), 0),))
        self.assertEqual(shuffles(2, 0), (((0, 1), (), 0),))

    def test_count(self):
        self.assertEqual(len(shuffles(2, 2)), 6)
        self.assertEqual(len(shuffles(1, 3)), 4)
        # the shuffle moving both elements of mu past both of nu
        self.assertIn(((2, 3), (0, 1), 4), shuffles(2, 2))

    def test_codegeneracy_composite(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        X = constant(C, 3)
        self.assertEqual(codegeneracy_composite(X, 3, (0, 2), {"x": 1}), {"x": 1})
        self.assertEqual(codegeneracy_composite(X, 2, (), {"1": 1}), {"1": 1})


class ConstantTestCase(unittest.TestCase):
    def setUp(self):
        self.C = Coalgebra.exterior(Field.F2, 1, 2)
        self.pi = ShuffleCoalgebra(constant(self.C, 2), 1)

    def test_dims(self):
        self.assertEqual(self.pi.dims(), {0: [1, 1, 0], 1: [0, 0, 0]})

    def test_coproduct(self):
        one, x = self.pi.retraction.groups[0].space.labels()
        self.assertEqual(self.pi.delta(one), {(one, one): 1})
        self.assertEqual(self.pi.delta(x), {(x, one): 1, (one, x): 1})
        self.assertEqual(self.pi.counit, {one: 1})
        self.assertTrue(self.pi.check().ok)

    def test_retraction(self):
        R = Retraction(constant(self.C, 2), 1)
        # on level 1 of a constant object the differential is the identity
        self.assertEqual(R(1, {"x": 1}), {})
        self.assertEqual(R(0, {"x": 1, "1": 1}), {"pi0:0:0": 1, "pi0:1:0": 1})
        with self.assertRaises(ValueError):
            Retraction(constant(self.C, 2), 2)


class LoopTestCase(unittest.TestCase):
    def setUp(self):
        C = Coalgebra.exterior(Field.F2, 1, 3)
        self.X = loop_object(constant(C, 3))
        self.pi = ShuffleCoalgebra(self.X, 2)

    def test_dims(self):
        self.assertEqual(
            self.pi.dims(), {0: [1, 0, 0, 0], 1: [0, 1, 0, 0], 2: [0, 0, 1, 0]}
        )

    def test_structure(self):
        report = self.pi.check()
        self.assertTrue(report.ok, msg=[str(v) for v in report.violations])
        y = "pi1:1:0"
        self.assertEqual(self.pi.delta(y), {(y, UNIT): 1, (UNIT, y): 1})
        self.assertEqual(self.pi.bidegree[y], (1, 1))
        self.assertEqual(self.pi.counit, {UNIT: 1})

    def test_kunneth_b(self):
        point = basepoint_map(self.X)
        result = kunneth_b(point, point, caps=Caps(pmax=2), cross_check=True)
        self.assertEqual(result.reliable, 2)
        e2 = result.e2()
        self.assertEqual(result.cotor.dims(), e2.dims())
        self.assertEqual(e2.dim(0, 0, 0), 1)
        self.assertEqual(e2.dim(1, 1, 1), 1)
        self.assertTrue(result.cotor.left.check().ok)
        self.assertTrue(result.cotor.right.check().ok)


if __name__ == "__main__":
    unittest.main()
