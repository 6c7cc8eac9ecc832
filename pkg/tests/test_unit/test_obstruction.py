# -*- coding: utf-8 -*-

"""
Unit tests for automorphism groups and the obstruction tower.

Author: Gertjan van den Burg

"""

import unittest

from aqcoalg.aq import aq_dual_oracle
from aqcoalg.caps import Caps
from aqcoalg.coalgebra import Coalgebra
from aqcoalg.coalgebra import CoalgebraMap
from aqcoalg.coalgebra import Comodule
from aqcoalg.coalgebra import shift
from aqcoalg.exceptions import BudgetExceeded
from aqcoalg.exceptions import ValidationError
from aqcoalg.linalg import Field
from aqcoalg.linalg import GradedVectorSpace
from aqcoalg.obstruction import StageRecord
from aqcoalg.obstruction import aut_coalgebra
from aqcoalg.obstruction import aut_comodule
from aqcoalg.obstruction import compatible_maps
from aqcoalg.obstruction import tower
from aqcoalg.obstruction import tower_stage


def trivial_module(C, degree, labels):
    basis = [[] for _ in range(C.max_degree + 1)]
    basis[degree].extend(labels)
    W = GradedVectorSpace(C.field, C.max_degree, basis)
    return Comodule.trivial(C, W, coabelian=True)


class AutCoalgebraTestCase(unittest.TestCase):
    def test_points(self):
        group = aut_coalgebra(Coalgebra.set_like(Field.F2, ["p", "q"], 1))
        self.assertEqual(group.order, 2)
        self.assertTrue(group.report.ok)
        self.assertEqual(group.to_dict()["group_axioms"], True)

    def test_exterior(self):
        group = aut_coalgebra(Coalgebra.exterior(Field.F2, 1, 2))
        self.assertEqual(group.order, 1)

    def test_rational(self):
        group = aut_coalgebra(Coalgebra.terminal(Field.Q, 2))
        self.assertEqual((group.order, group.description), (1, "trivial"))
        group = aut_coalgebra(Coalgebra.exterior(Field.Q, 1, 2))
        self.assertIsNone(group.order)
        self.assertEqual(group.description, "not enumerated over Q")


class AutComoduleTestCase(unittest.TestCase):
    def test_general_linear(self):
        F = Coalgebra.terminal(Field.F2, 2)
        data = aut_comodule(F, trivial_module(F, 2, ["a", "b"]))
        self.assertEqual(data.order, 6)
        self.assertTrue(data.report.ok)
        data = aut_comodule(F, trivial_module(F, 2, ["a"]))
        self.assertEqual(data.order, 1)

    def test_compatible(self):
        F = Coalgebra.terminal(Field.F2, 2)
        M = trivial_module(F, 2, ["a", "b"])
        unknowns, sub = compatible_maps(M, CoalgebraMap.identity(F))
        self.assertEqual(len(unknowns), 4)
        self.assertEqual(sub.dim, 4)

    def test_rational(self):
        F = Coalgebra.terminal(Field.Q, 2)
        data = aut_comodule(F, trivial_module(F, 1, ["a"]))
        self.assertIsNone(data.order)
        self.assertEqual(data.description, "Q^×")
        data = aut_comodule(F, trivial_module(F, 1, ["a", "b"]))
        self.assertEqual(data.description, "open subset of Q^4 over id_C")

    def test_rejects(self):
        F = Coalgebra.terminal(Field.F2, 2)
        M = trivial_module(F, 2, ["a", "b"])
        with self.assertRaises(BudgetExceeded):
            aut_comodule(F, M, limit=8)
        with self.assertRaises(ValueError):
            aut_comodule(Coalgebra.terminal(Field.F2, 2), M)


class TowerTestCase(unittest.TestCase):
    def test_ground_field(self):
        F = Coalgebra.terminal(Field.F2, 2)
        report = tower(F, 2, caps=Caps(budget=500))
        self.assertEqual(report.aut["order"], 1)
        self.assertEqual([s.n for s in report.stages], [1, 2])
        for stage in report.stages:
            with self.subTest(n=stage.n):
                self.assertEqual(stage.flags, [])
                self.assertEqual(stage.choice["dim"], 0)
                self.assertEqual(stage.obstruction["dim"], 0)
                self.assertTrue(stage.obstruction_vanishes)
        d = report.to_dict()
        self.assertEqual(d["field"], "F2")
        self.assertEqual(d["caps"]["budget"], 500)

    def test_ground_field_three_stages(self):
        F = Coalgebra.terminal(Field.F2, 3)
        report = tower(F, 3, caps=Caps(budget=500), aut=False)
        self.assertEqual([s.n for s in report.stages], [1, 2, 3])
        for stage in report.stages:
            with self.subTest(n=stage.n):
                self.assertEqual(stage.flags, [])
                self.assertEqual(stage.choice["dim"], 0)
                self.assertEqual(stage.obstruction["dim"], 0)
                self.assertTrue(stage.obstruction_vanishes)

    def test_rational_exterior(self):
        # the groups of every stage agree with the dual algebra route
        C = Coalgebra.exterior(Field.Q, 2, 4)
        report = tower(C, 2, aut=False)
        under = CoalgebraMap.identity(C)
        for stage in report.stages:
            M = shift(Comodule.regular(C), stage.n)
            groups = (("choice", stage.n + 1), ("obstruction", stage.n + 2))
            for name, degree in groups:
                with self.subTest(n=stage.n, group=name):
                    self.assertEqual(stage.flags, [])
                    dual = aq_dual_oracle(under, M, degree)
                    self.assertEqual(getattr(stage, name)["dim"], dual.dim)

    def test_budget_flags(self):
        C = Coalgebra.exterior(Field.F2, 1, 2)
        record = StageRecord.from_dict(
            tower_stage(C, 1, Caps(budget=2), aut=False)
        )
        self.assertIsNone(record.choice)
        self.assertIsNone(record.obstruction_vanishes)
        self.assertEqual(record.flags[0]["kind"], "BudgetExceeded")
        self.assertEqual(record.flags[0]["stage"], "resolution stage 0")

    def test_no_aut(self):
        F = Coalgebra.terminal(Field.F2, 1)
        report = tower(F, 1, aut=False)
        self.assertIsNone(report.aut)
        self.assertIsNone(report.stages[0].aut)

    def test_invalid_coalgebra(self):
        carrier = GradedVectorSpace(Field.F2, 3, [["1"], ["x"], ["y"], ["z"]])
        coproduct = {
            "1": {("1", "1"): 1},
            "x": {("x", "1"): 1, ("1", "x"): 1},
            "y": {("y", "1"): 1, ("1", "y"): 1, ("x", "x"): 1},
            "z": {("z", "1"): 1, ("1", "z"): 1, ("y", "x"): 1},
        }
        C = Coalgebra(carrier, coproduct, {"1": 1}, basepoint="1")
        with self.assertRaises(ValidationError) as cm:
            tower(C, 1, aut=False)
        self.assertIn("coassociativity", cm.exception.report.axioms())


if __name__ == "__main__":
    unittest.main()
