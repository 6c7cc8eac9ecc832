# -*- coding: utf-8 -*-

from cleo import Command

from aqcoalg.wrappers import hopullback_file

from ._utils import CAPS_OPTIONS
from ._utils import caps_from_options
from ._utils import guarded


class HoPullbackCommand(Command):
    __doc__ = (
        """
    Compute the homotopy pullback along a square-zero extension

    hopullback
        { path : Comodule file of M over C }
        { --cross-check : Recompute with the two sides exchanged. }
"""
        + CAPS_OPTIONS
    )

    help = """\
The <info>hopullback</info> command computes the cohomotopy of the homotopy
pullback of the two inclusions of C into the square-zero extension of C by M.
    """

    def handle(self):
        verbose = self.io.verbosity > 0
        return guarded(
            self,
            lambda: hopullback_file(
                self.argument("path"),
                caps_from_options(self),
                cross_check=self.option("cross-check"),
                verbose=verbose,
            ),
        )
