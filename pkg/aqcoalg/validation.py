# -*- coding: utf-8 -*-

"""
Validation reports listing violated axioms together with a witness.

Author: Gertjan van den Burg

"""

from .exceptions import ValidationError
from .linalg import format_label


class Violation(object):
    def __init__(self, axiom, witness, detail=""):
        self.axiom = axiom
        self.witness = witness
        self.detail = detail

    def to_dict(self):
        return dict(
            axiom=self.axiom,
            witness=format_label(self.witness),
            detail=self.detail,
        )

    def __repr__(self):
        return "Violation(%r, %s)" % (self.axiom, format_label(self.witness))

    def __str__(self):
        text = "%s violated at %s" % (self.axiom, format_label(self.witness))
        if self.detail:
            text += " (%s)" % self.detail
        return text


class ValidationReport(object):
    """
    The outcome of a validation run. An empty report means the input is
    valid.

    """

    def __init__(self, subject="", violations=None):
        self.subject = subject
        self.violations = list(violations or [])
        self.notes = []

    def add(self, axiom, witness, detail=""):
        self.violations.append(Violation(axiom, witness, detail))

    def extend(self, other):
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)

    def note(self, text):
        self.notes.append(text)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def axioms(self):
        return sorted({v.axiom for v in self.violations})

    def raise_if_invalid(self):
        if not self.ok:
            raise ValidationError(
                "%s is invalid: %s" % (self.subject, self.violations[0]),
                report=self,
            )
        return self

    def to_dict(self):
        return dict(
            subject=self.subject,
            valid=self.ok,
            violations=[v.to_dict() for v in self.violations],
            notes=list(self.notes),
        )

    def __repr__(self):
        return "ValidationReport(%r, %i violations)" % (
            self.subject,
            len(self.violations),
        )
