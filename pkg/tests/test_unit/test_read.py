# -*- coding: utf-8 -*-

"""
Unit tests for the strict file reader.

Author: Gertjan van den Burg

"""

import json
import os
import tempfile
import unittest

from fractions import Fraction

from aqcoalg.coalgebra import Coalgebra
from aqcoalg.coalgebra import Comodule
from aqcoalg.coalgebra import validate_coalgebra
from aqcoalg.exceptions import ParseError
from aqcoalg.exceptions import UnsupportedInput
from aqcoalg.linalg import Field
from aqcoalg.read import COALGEBRA_HEADER
from aqcoalg.read import COMODULE_HEADER
from aqcoalg.read import load
from aqcoalg.read import loads
from aqcoalg.read import parse_coefficient
from aqcoalg.read import parse_field
from aqcoalg.read import split_header


def exterior_object(field="F2"):
    return {
        "field": field,
        "max_internal_degree": 2,
        "generators": [["1", 0], ["x", 1]],
        "counit": {"1": 1},
        "comultiplication": {
            "1": [["1", "1", 1]],
            "x": [["x", "1", 1], ["1", "x", 1]],
        },
        "basepoint": "1",
        "name": "Λ(x)",
    }


def point_module_object(field="F2"):
    return {
        "coalgebra": exterior_object(field),
        "generators": [["m", 1]],
        "coaction": {"m": [["1", "m", 1]]},
        "coabelian": True,
    }


def document(header, obj):
    return header + "\n" + json.dumps(obj)


class HeaderTestCase(unittest.TestCase):
    def test_kinds(self):
        kind, obj = split_header(document(COALGEBRA_HEADER, {}))
        self.assertEqual((kind, obj), ("coalgebra", {}))
        kind, _ = split_header(document(COMODULE_HEADER, {}))
        self.assertEqual(kind, "comodule")

    def test_bom_and_crlf(self):
        text = "\ufeff" + COALGEBRA_HEADER + "\r\n{}"
        self.assertEqual(split_header(text), ("coalgebra", {}))

    def test_bad_header(self):
        with self.assertRaises(ParseError):
            split_header("# aqcoalg coalgebra v2\n{}")
        with self.assertRaises(ParseError):
            split_header("{}")

    def test_bad_json(self):
        with self.assertRaises(ParseError):
            split_header(COALGEBRA_HEADER + "\n{'a': 1}")
        with self.assertRaises(ParseError):
            split_header(COALGEBRA_HEADER + '\n{"a": 1, "a": 2}')


class ScalarTestCase(unittest.TestCase):
    def test_fields(self):
        self.assertIs(parse_field("F2"), Field.F2)
        self.assertIs(parse_field("Q"), Field.Q)
        with self.assertRaises(UnsupportedInput):
            parse_field("F3")
        with self.assertRaises(ParseError):
            parse_field("R")
        with self.assertRaises(ParseError):
            parse_field(2)

    def test_coefficients(self):
        self.assertEqual(parse_coefficient(Field.Q, "1/2"), Fraction(1, 2))
        self.assertEqual(parse_coefficient(Field.Q, " -3 / 6 "), Fraction(-1, 2))
        self.assertEqual(parse_coefficient(Field.Q, 4), 4)
        self.assertEqual(parse_coefficient(Field.F2, 3), 1)
        self.assertEqual(parse_coefficient(Field.F2, "2"), 0)
        for bad in ("1/0", "one", "1.5", True, 1.5, None):
            with self.subTest(value=bad):
                with self.assertRaises(ParseError):
                    parse_coefficient(Field.Q, bad)


class CoalgebraReaderTestCase(unittest.TestCase):
    def _loads(self, obj):
        return loads(document(COALGEBRA_HEADER, obj))

    def _fails(self, obj, exc=ParseError):
        with self.assertRaises(exc):
            self._loads(obj)

    def test_exterior(self):
        for field in ("F2", "Q"):
            with self.subTest(field=field):
                C = self._loads(exterior_object(field))
                self.assertIsInstance(C, Coalgebra)
                self.assertEqual(C.carrier.dims(), [1, 1, 0])
                self.assertEqual(C.basepoint, "1")
                self.assertEqual(C.name, "Λ(x)")
                self.assertTrue(validate_coalgebra(C).ok)

    def test_members(self):
        obj = exterior_object()
        obj["colour"] = "red"
        self._fails(obj)
        obj = exterior_object()
        del obj["counit"]
        self._fails(obj)
        self._fails([])

    def test_labels(self):
        obj = exterior_object()
        obj["generators"].append(["y", 3])
        self._fails(obj)
        obj = exterior_object()
        obj["generators"].append(["x", 2])
        self._fails(obj)
        obj = exterior_object()
        obj["comultiplication"]["x"].append(["z", "1", 1])
        self._fails(obj)
        obj = exterior_object()
        obj["basepoint"] = "z"
        self._fails(obj)
        obj = exterior_object()
        obj["generators"][1] = ["x", "1"]
        self._fails(obj)

    def test_counit(self):
        obj = exterior_object()
        obj["counit"]["x"] = 1
        self._fails(obj)

    def test_unsupported_prime(self):
        self._fails(exterior_object("F3"), exc=UnsupportedInput)

    def test_steenrod(self):
        obj = exterior_object()
        obj["max_internal_degree"] = 3
        obj["generators"] = [["1", 0], ["x", 1], ["y", 3]]
        obj["comultiplication"]["y"] = [["y", "1", 1], ["1", "y", 1]]
        obj["steenrod_action"] = {"y": {"1": []}}
        C = self._loads(obj)
        self.assertEqual(C.steenrod.table(), {})

        obj["steenrod_action"] = {"y": {"1": [["x", 1]]}}
        self._fails(obj)
        obj["steenrod_action"] = {"y": {"0": []}}
        self._fails(obj)
        obj["steenrod_action"] = {"y": {"2": [["x", 1]]}}
        self._loads(obj)
        obj["steenrod_generators_only"] = "yes"
        self._fails(obj)

        obj = exterior_object("Q")
        obj["steenrod_action"] = {}
        self._fails(obj)

    def test_grouplikes(self):
        obj = exterior_object()
        obj["grouplike_basis"] = [{"1": 1}]
        C = self._loads(obj)
        self.assertEqual(C.grouplikes, [{"1": 1}])
        obj["grouplike_basis"] = [{"x": 1}]
        self._fails(obj)
        obj["grouplike_basis"] = {"1": 1}
        self._fails(obj)


class ComoduleReaderTestCase(unittest.TestCase):
    def test_point(self):
        M = loads(document(COMODULE_HEADER, point_module_object()))
        self.assertIsInstance(M, Comodule)
        self.assertEqual(M.name, "M")
        self.assertTrue(M.coabelian)
        self.assertEqual(M.carrier.dims(), [0, 1, 0])
        self.assertEqual(M.base.name, "Λ(x)")
        self.assertTrue(M.validate().ok)

    def test_rejects(self):
        obj = point_module_object()
        obj["coaction"]["m"] = [["m", "1", 1]]
        with self.assertRaises(ParseError):
            loads(document(COMODULE_HEADER, obj))
        obj = point_module_object()
        obj["coabelian"] = 1
        with self.assertRaises(ParseError):
            loads(document(COMODULE_HEADER, obj))
        obj = point_module_object()
        del obj["coalgebra"]
        with self.assertRaises(ParseError):
            loads(document(COMODULE_HEADER, obj))


class LoadTestCase(unittest.TestCase):
    def _write(self, data):
        tmpfd, tmpfname = tempfile.mkstemp(prefix="aqcoalg_", suffix=".json")
        with os.fdopen(tmpfd, "wb") as fid:
            fid.write(data)
        self.addCleanup(os.unlink, tmpfname)
        return tmpfname

    def test_load(self):
        text = document(COALGEBRA_HEADER, exterior_object())
        filename = self._write(text.encode("utf-8"))
        C, data = load(filename)
        self.assertEqual(C.carrier.dims(), [1, 1, 0])
        self.assertEqual(data, text.encode("utf-8"))

    def test_not_utf8(self):
        filename = self._write(COALGEBRA_HEADER.encode("utf-8") + b"\n\xff\xfe")
        with self.assertRaises(ParseError):
            load(filename)


if __name__ == "__main__":
    unittest.main()
