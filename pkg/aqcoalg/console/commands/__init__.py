# -*- coding: utf-8 -*-

from .aq import AQCommand
from .cohomotopy import CohomotopyCommand
from .cotor import CotorCommand
from .hopullback import HoPullbackCommand
from .kobject import KObjectCommand
from .kunneth import KunnethCommand
from .tower import TowerCommand
from .validate import ValidateCommand
