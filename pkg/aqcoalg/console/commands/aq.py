# -*- coding: utf-8 -*-

from cleo import Command

from aqcoalg.wrappers import aq_file

from ._utils import CAPS_OPTIONS
from ._utils import caps_from_options
from ._utils import guarded
from ._utils import parse_int


class AQCommand(Command):
    __doc__ = (
        """
    Compute André-Quillen cohomology of a coalgebra

    aq
        { path : Comodule file of the coefficients M over C }
        { n : The cohomological degree }
        { --shortcut : Compute derivations through the cofree adjunction. }
        { --dual : Use the dual free resolution (rational, connected). }
        { --cross-check : Recompute along the other routes and compare. }
"""
        + CAPS_OPTIONS
    )

    help = """\
The <info>aq</info> command computes AQ^n_C(C; M) on a comonad resolution
and reports its dimension table by internal degree and filtration.
    """

    def handle(self):
        verbose = self.io.verbosity > 0
        return guarded(
            self,
            lambda: aq_file(
                self.argument("path"),
                parse_int(self.argument("n"), "n"),
                caps_from_options(self),
                shortcut=self.option("shortcut"),
                dual=self.option("dual"),
                cross_check=self.option("cross-check"),
                verbose=verbose,
            ),
        )
