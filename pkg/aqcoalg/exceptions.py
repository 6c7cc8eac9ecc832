# -*- coding: utf-8 -*-

"""
Exceptions for aqcoalg

The command line maps every subclass of :class:`Error` to a stable exit code.

Author: Gertjan van den Burg

"""


class Error(Exception):
    exit_code = 1


class ParseError(Error):
    """Raised when an input file does not follow the strict schema."""

    exit_code = 2


class ValidationError(Error):
    """Raised when an input violates an algebraic axiom.

    The ``report`` attribute holds the :class:`ValidationReport` with the
    violated axioms and their witnesses, if one is available.
    """

    exit_code = 3

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BudgetExceeded(Error):
    """Raised when a computation would exceed its dimension budget."""

    exit_code = 4

    def __init__(self, message, stage=None, needed=None, budget=None):
        super().__init__(message)
        self.stage = stage
        self.needed = needed
        self.budget = budget


class CrossCheckMismatch(Error):
    """Two independent routes to the same invariant disagree."""

    exit_code = 5


class UnsupportedInput(ValidationError):
    """Raised for inputs outside the implemented theory, such as odd primes
    or rational coalgebras that are not connected."""
