# -*- coding: utf-8 -*-

from cleo import Command

from aqcoalg.wrappers import cotor_files

from ._utils import CAPS_OPTIONS
from ._utils import caps_from_options
from ._utils import guarded


class CotorCommand(Command):
    __doc__ = (
        """
    Compute Cotor of two comodules over a coalgebra

    cotor
        { b : Comodule file of the left factor B }
        { a : Comodule file of the right factor A }
        { --m|method= : Either resolution (default) or cobar. }
        { --cross-check : Recompute with the other method and compare. }
"""
        + CAPS_OPTIONS
    )

    help = """\
The <info>cotor</info> command computes Cotor^p_C(B, A) for p up to
<comment>--pmax</comment>, as a table of dimensions per internal degree.
    """

    def handle(self):
        verbose = self.io.verbosity > 0
        return guarded(
            self,
            lambda: cotor_files(
                self.argument("b"),
                self.argument("a"),
                caps_from_options(self),
                method=self.option("method") or "resolution",
                cross_check=self.option("cross-check"),
                verbose=verbose,
            ),
        )
