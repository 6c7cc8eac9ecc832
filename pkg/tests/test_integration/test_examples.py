# -*- coding: utf-8 -*-

"""
Integration tests that run the console application on the documents in the
example directory.

Every exit code of the command line interface is covered here, next to the
determinism of the reports across cache hits and worker counts.

Author: Gertjan van den Burg

"""

import glob
import json
import os
import tempfile
import unittest

from unittest import mock

from cleo.testers import CommandTester

from aqcoalg import __version__
from aqcoalg.console import build_application
from aqcoalg.exceptions import CrossCheckMismatch
from aqcoalg.read import COALGEBRA_HEADER
from aqcoalg.wrappers import validate_file

THIS_DIR = os.path.abspath(os.path.dirname(__file__))
EXAMPLE_DIR = os.path.join(os.path.dirname(os.path.dirname(THIS_DIR)), "example")


def read_example(name):
    with open(example(name), "r", encoding="utf-8") as fid:
        return fid.read()


def example(name):
    return os.path.join(EXAMPLE_DIR, name)


class ExamplesTestCase(unittest.TestCase):
    def setUp(self):
        self._tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmpdir.cleanup)

    def _run(self, name, args):
        application = build_application()
        tester = CommandTester(application.find(name))
        status = tester.execute(args)
        return status, tester.io.fetch_output(), tester.io.fetch_error()

    def _json(self, name, args):
        status, output, error = self._run(name, "--json " + args)
        self.assertEqual(status, 0, msg=error)
        return json.loads(output)

    def _tmpfile(self, name, text):
        filename = os.path.join(self._tmpdir.name, name)
        with open(filename, "w", encoding="utf-8") as fid:
            fid.write(text)
        return filename

    def test_all_examples_validate(self):
        files = sorted(glob.glob(os.path.join(EXAMPLE_DIR, "*.json")))
        self.assertEqual(len(files), 6)
        for filename in files:
            with self.subTest(filename=os.path.basename(filename)):
                _, report = validate_file(filename)
                self.assertTrue(report.ok, msg=str(report.violations))
                status, output, _ = self._run("validate", filename)
                self.assertEqual(status, 0)
                self.assertTrue(output.strip().endswith("is valid."))

    def test_cotor_diagonal(self):
        P = example("point_f2.json")
        doc = self._json("cotor", "--pmax 2 --cross-check %s %s" % (P, P))
        self.assertEqual(doc["version"], __version__)
        self.assertEqual(
            doc["results"]["cotor"], {"0,0": 1, "1,1": 1, "2,2": 1}
        )

    def test_kobject_cohomotopy(self):
        M = example("line_f2.json")
        doc = self._json(
            "cohomotopy", "--object kobject --degree 1 --smax 1 %s" % M
        )
        self.assertEqual(doc["results"]["cohomotopy"], [[1, 1, 0], [0, 1, 0]])

    def test_aq_rational(self):
        S = example("sphere_q.json")
        for n in (0, 1):
            with self.subTest(n=n):
                doc = self._json("aq", "--cross-check %s %i" % (S, n))
                self.assertEqual(doc["results"]["aq"]["dim"], 0)
                self.assertEqual(doc["results"]["aq"]["field"], "Q")

    def test_tower_terminal(self):
        C = example("terminal_f2.json")
        doc = self._json("tower", "--n-max 2 --cap-dim 500 %s" % C)
        self.assertEqual(doc["flags"], [])
        stages = doc["results"]["tower"]["stages"]
        self.assertEqual([s["n"] for s in stages], [1, 2])
        for stage in stages:
            self.assertTrue(stage["obstruction_vanishes"])

    def test_deterministic_across_jobs(self):
        C = example("exterior_f2.json")
        args = "--json --smax 2 %s" % C
        _, single, _ = self._run("cohomotopy", "--jobs 1 " + args)
        _, multi, _ = self._run("cohomotopy", "--jobs 2 " + args)
        self.assertEqual(single, multi)

    def test_cache_hit_is_identical(self):
        P = example("point_f2.json")
        cache_dir = os.path.join(self._tmpdir.name, "cache")
        cold = os.path.join(self._tmpdir.name, "cold.json")
        warm = os.path.join(self._tmpdir.name, "warm.json")
        args = "--pmax 1 --cache-dir %s --out %%s %s %s" % (cache_dir, P, P)
        self.assertEqual(self._run("cotor", args % cold)[0], 0)
        self.assertEqual(len(os.listdir(cache_dir)), 1)
        self.assertEqual(self._run("cotor", args % warm)[0], 0)
        with open(cold, "rb") as fid:
            cold_bytes = fid.read()
        with open(warm, "rb") as fid:
            self.assertEqual(fid.read(), cold_bytes)

    def test_exit_bad_argument(self):
        C = example("exterior_f2.json")
        status, _, error = self._run("cohomotopy", "--object sphere %s" % C)
        self.assertEqual(status, 1)
        self.assertIn("sphere", error)

    def test_exit_parse_error(self):
        text = read_example("exterior_f2.json")
        cases = {
            "header.json": text.replace(COALGEBRA_HEADER, "# aqcoalg coalgebra v2"),
            "degree.json": text.replace('["x", 1]', '["x", 3]'),
            "member.json": text.replace('"name": "L"', '"title": "L"'),
            "odd.json": text.replace('"field": "F2"', '"field": "F3"'),
        }
        expected = {
            "header.json": 2,
            "degree.json": 2,
            "member.json": 2,
            "odd.json": 3,
        }
        for name, body in cases.items():
            with self.subTest(name=name):
                status, _, _ = self._run("validate", self._tmpfile(name, body))
                self.assertEqual(status, expected[name])

    def test_exit_validation_error(self):
        text = read_example("exterior_f2.json")
        body = text.replace('["x", "1", 1], ["1", "x", 1]', '["x", "1", 1]')
        path = self._tmpfile("broken.json", body)
        status, output, _ = self._run("validate", path)
        self.assertEqual(status, 3)
        self.assertTrue(output.startswith("L is invalid:"))

        P = example("point_f2.json")
        status, _, error = self._run("cotor", "%s %s" % (path, P))
        self.assertEqual(status, 3)
        self.assertIn("ValidationError", error)

        # a coalgebra file where a comodule is expected
        C = example("exterior_f2.json")
        status, _, error = self._run("cotor", "%s %s" % (C, P))
        self.assertEqual(status, 2)
        self.assertIn("is a coalgebra file", error)

    def test_exit_budget(self):
        S = example("sphere_q.json")
        status, output, error = self._run("aq", "--cap-dim 1 %s 1" % S)
        self.assertEqual(status, 4)
        self.assertEqual(output, "")
        self.assertIn("BudgetExceeded", error)
        self.assertIn("budget = 1", error)

    def test_exit_cross_check_mismatch(self):
        P = example("point_f2.json")
        target = "aqcoalg.console.commands.cotor.cotor_files"
        with mock.patch(target, side_effect=CrossCheckMismatch("differs")):
            status, output, error = self._run(
                "cotor", "--cross-check %s %s" % (P, P)
            )
        self.assertEqual(status, 5)
        self.assertEqual(output, "")
        self.assertEqual(error.strip(), "CrossCheckMismatch: differs")


if __name__ == "__main__":
    unittest.main()
