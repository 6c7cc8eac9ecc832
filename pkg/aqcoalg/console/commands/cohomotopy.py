# -*- coding: utf-8 -*-

from cleo import Command

from aqcoalg.wrappers import cohomotopy_file

from ._utils import CAPS_OPTIONS
from ._utils import caps_from_options
from ._utils import guarded
from ._utils import parse_int


class CohomotopyCommand(Command):
    __doc__ = (
        """
    Compute the cohomotopy of a cosimplicial object

    cohomotopy
        { path : Coalgebra file, or comodule file for kobject }
        { --object= : One of constant (default), loop or kobject. }
        { --degree= : Loop count, or the degree n of the K-object (default
        1). }
        { --cross-check : Compare with the cohomology of the Moore complex. }
"""
        + CAPS_OPTIONS
    )

    help = """\
The <info>cohomotopy</info> command builds the constant object on a
coalgebra, its n-fold loop object or an object of type K_C(M, n), and prints
the dimensions of its cohomotopy groups.
    """

    def handle(self):
        verbose = self.io.verbosity > 0
        n = parse_int(self.option("degree"), "degree")
        return guarded(
            self,
            lambda: cohomotopy_file(
                self.argument("path"),
                caps_from_options(self),
                obj=self.option("object") or "constant",
                n=1 if n is None else n,
                cross_check=self.option("cross-check"),
                verbose=verbose,
            ),
        )
