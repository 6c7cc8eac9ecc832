# -*- coding: utf-8 -*-

from cleo import Command

from aqcoalg.wrappers import kunneth_files

from ._utils import CAPS_OPTIONS
from ._utils import caps_from_options
from ._utils import guarded


class KunnethCommand(Command):
    __doc__ = (
        """
    Compute a Künneth spectral sequence of two comodules

    kunneth
        { b : Comodule file of the left factor B }
        { a : Comodule file of the right factor A }
        { --which= : Spectral sequence a (cohomotopy of Cotor, default) or b
        (Cotor of cohomotopy). }
        { --cross-check : Compare the abutment with the derived cotensor
        product. }
"""
        + CAPS_OPTIONS
    )

    help = """\
The <info>kunneth</info> command computes the pages of a Künneth spectral
sequence for the constant cosimplicial comodules on B and A.
    """

    def handle(self):
        verbose = self.io.verbosity > 0
        return guarded(
            self,
            lambda: kunneth_files(
                self.argument("b"),
                self.argument("a"),
                caps_from_options(self),
                which=self.option("which") or "a",
                cross_check=self.option("cross-check"),
                verbose=verbose,
            ),
        )
