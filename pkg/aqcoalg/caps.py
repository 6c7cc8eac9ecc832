#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Definitions for the computation caps.

Author: Gertjan van den Burg

"""

import json
import os

from .exceptions import BudgetExceeded

CACHE_ENV = "AQCOALG_CACHE_DIR"

DEFAULT_BUDGET = 20000


class Caps(object):
    """
    The limits under which a computation runs.

    Parameters
    ----------
    pmax : int
        The largest cohomological degree p of Cotor and spectral sequence
        pages.

    smax : int
        The largest cosimplicial degree s for which cohomotopy is reported.
        Cosimplicial objects are built up to level ``smax + 1``.

    budget : int
        The largest total dimension any single stage may reach. A stage that
        would exceed it raises :class:`BudgetExceeded` instead of truncating.

    jobs : int
        Number of worker processes for independent sub-computations.

    cache_dir : str
        Directory for cached reports, or None to disable caching. Defaults
        to the ``AQCOALG_CACHE_DIR`` environment variable.

    """

    def __init__(
        self, pmax=3, smax=3, budget=DEFAULT_BUDGET, jobs=1, cache_dir=None
    ):
        self.pmax = pmax
        self.smax = smax
        self.budget = budget
        self.jobs = jobs
        if cache_dir is None:
            cache_dir = os.environ.get(CACHE_ENV) or None
        self.cache_dir = cache_dir

    def validate(self):
        for name in ("pmax", "smax"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(
                    "%s should be a non-negative integer, got: %r" % (name, value)
                )
        if not isinstance(self.budget, int) or self.budget < 1:
            raise ValueError(
                "Budget should be a positive integer, got: %r" % self.budget
            )
        if not isinstance(self.jobs, int) or self.jobs < 1:
            raise ValueError(
                "Jobs should be a positive integer, got: %r" % self.jobs
            )

    @property
    def levels(self):
        """The truncation S of cosimplicial objects built under these caps."""
        return self.smax + 1

    def check(self, stage, needed):
        """Raise :class:`BudgetExceeded` if ``needed`` is over the budget."""
        if needed > self.budget:
            raise BudgetExceeded(
                "Stage %s needs dimension %i, budget is %i"
                % (stage, needed, self.budget),
                stage=stage,
                needed=needed,
                budget=self.budget,
            )
        return needed

    @classmethod
    def from_dict(cls, d):
        return cls(
            pmax=d["pmax"],
            smax=d["smax"],
            budget=d["budget"],
            jobs=d.get("jobs", 1),
            cache_dir=d.get("cache_dir"),
        )

    def to_dict(self):
        """The caps that determine a result; ``jobs`` and ``cache_dir`` do
        not change output and are left out."""
        self.validate()
        return dict(pmax=self.pmax, smax=self.smax, budget=self.budget)

    def serialize(self):
        """ Serialize caps to a JSON object """
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def deserialize(cls, obj):
        """ Deserialize caps from a JSON object """
        return cls.from_dict(json.loads(obj))

    def __repr__(self):
        return "Caps(pmax=%r, smax=%r, budget=%r)" % (
            self.pmax,
            self.smax,
            self.budget,
        )

    def __key(self):
        return (self.pmax, self.smax, self.budget)

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        if not isinstance(other, Caps):
            return False
        return self.__key() == other.__key()
