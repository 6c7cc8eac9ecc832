# -*- coding: utf-8 -*-

from cleo import Command

from aqcoalg.wrappers import tower_file

from ._utils import CAPS_OPTIONS
from ._utils import caps_from_options
from ._utils import guarded
from ._utils import parse_int


class TowerCommand(Command):
    __doc__ = (
        """
    Compute the obstruction tower report of a coalgebra

    tower
        { path : Coalgebra file of C }
        { --n-max= : The last stage (default 3). }
        { --no-aut : Skip the automorphism groups. }
        { --cross-check : Recompute every group along a second route. }
"""
        + CAPS_OPTIONS
    )

    help = """\
The <info>tower</info> command reports, for every stage n, the group of
choices AQ^(n+1)_C(C; C[n]) and the obstruction group AQ^(n+2)_C(C; C[n]).
Stages that exceed the budget are flagged, never left out.
    """

    def handle(self):
        verbose = self.io.verbosity > 0
        n_max = parse_int(self.option("n-max"), "n-max")
        return guarded(
            self,
            lambda: tower_file(
                self.argument("path"),
                3 if n_max is None else n_max,
                caps_from_options(self),
                aut=not self.option("no-aut"),
                cross_check=self.option("cross-check"),
                verbose=verbose,
            ),
        )
