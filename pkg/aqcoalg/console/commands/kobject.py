# -*- coding: utf-8 -*-

from cleo import Command

from aqcoalg.wrappers import kobject_file

from ._utils import CAPS_OPTIONS
from ._utils import caps_from_options
from ._utils import guarded
from ._utils import parse_int


class KObjectCommand(Command):
    __doc__ = (
        """
    Build an object of type K_C(M, n) and check its cohomotopy

    kobject
        { path : Comodule file of M over C }
        { n : The degree n }
        { --cross-check : Compare with the Moore complex and, for n = 1, with
        the homotopy pullback. }
"""
        + CAPS_OPTIONS
    )

    help = """\
The <info>kobject</info> command builds the cosimplicial coalgebra of type
K_C(M, n) and verifies that its cohomotopy is C in degree 0, M in degree n
and zero elsewhere.
    """

    def handle(self):
        verbose = self.io.verbosity > 0
        return guarded(
            self,
            lambda: kobject_file(
                self.argument("path"),
                parse_int(self.argument("n"), "n"),
                caps_from_options(self),
                cross_check=self.option("cross-check"),
                verbose=verbose,
            ),
        )
