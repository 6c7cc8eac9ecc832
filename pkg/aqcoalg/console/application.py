# -*- coding: utf-8 -*-

"""
aqcoalg command line application.

"""

from cleo import Application

from .. import __version__
from .config import Config
from .commands import (
    AQCommand,
    CohomotopyCommand,
    CotorCommand,
    HoPullbackCommand,
    KObjectCommand,
    KunnethCommand,
    TowerCommand,
    ValidateCommand,
)


def build_application():
    config = Config("aqcoalg", __version__)
    app = Application(config=config, complete=False)
    app.add(ValidateCommand())
    app.add(CotorCommand())
    app.add(KunnethCommand())
    app.add(HoPullbackCommand())
    app.add(CohomotopyCommand())
    app.add(AQCommand())
    app.add(KObjectCommand())
    app.add(TowerCommand())
    return app
