# -*- coding: utf-8 -*-

from .__version__ import __version__

from .aq import aq_cohomology, aq_dual_oracle, k_object
from .caps import Caps
from .coalgebra import Coalgebra, CoalgebraMap, Comodule, validate_coalgebra
from .cofree import cofree_coalgebra, comonad_resolution
from .cosimplicial import CosimplicialObject, cohomotopy, constant
from .cotor import cotor, derived_cotensor, homotopy_pullback, loop_object
from .exceptions import (
    BudgetExceeded,
    CrossCheckMismatch,
    Error,
    ParseError,
    UnsupportedInput,
    ValidationError,
)
from .linalg import Field, GradedLinearMap, GradedVectorSpace
from .obstruction import aut_coalgebra, aut_comodule, tower
from .read import load, loads
from .specseq import kunneth_a, kunneth_b
from .steenrod import SteenrodElement, UnstableRightModule
