# -*- coding: utf-8 -*-

"""
Unit tests for validation reports.

Author: Gertjan van den Burg

"""

import unittest

from aqcoalg.exceptions import ValidationError
from aqcoalg.validation import ValidationReport


class ValidationReportTestCase(unittest.TestCase):
    def test_empty(self):
        report = ValidationReport("C")
        self.assertTrue(report.ok)
        self.assertIs(report.raise_if_invalid(), report)
        self.assertEqual(
            report.to_dict(),
            dict(subject="C", valid=True, violations=[], notes=[]),
        )

    def test_violations(self):
        report = ValidationReport("C")
        report.add("counit", "x", "left")
        report.add("coassociativity", ("x", "y"))
        self.assertFalse(report)
        self.assertEqual(report.axioms(), ["coassociativity", "counit"])
        self.assertEqual(str(report.violations[0]), "counit violated at x (left)")
        with self.assertRaises(ValidationError) as cm:
            report.raise_if_invalid()
        self.assertIs(cm.exception.report, report)
        self.assertEqual(cm.exception.exit_code, 3)

    def test_extend(self):
        a = ValidationReport("a")
        b = ValidationReport("b")
        b.add("unstable", "x")
        b.note("checked through degree 4")
        a.extend(b)
        self.assertEqual(a.axioms(), ["unstable"])
        self.assertEqual(a.to_dict()["notes"], ["checked through degree 4"])


if __name__ == "__main__":
    unittest.main()
