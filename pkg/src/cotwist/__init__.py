"""Exact computations with twistings of Hopf module coalgebras.

The building blocks are exact linear maps between labelled tensor spaces
(:mod:`cotwist.linmap`), a wiring builder for Sweedler-style formulas
(:mod:`cotwist.wiring`) and checkers that return :class:`CheckReport`
objects with counterexample witnesses.
"""

from .errors import CotwistError
from .field import GF, QQ, FieldSpec
from .hopf import HopfAlgebra, check_hopf
from .linmap import LinMap, Space
from .modcoalg import ModuleCoalgebra, check_module_coalgebra
from .report import CheckReport
from .twistings import LeftTwist, RightTwist

__all__ = ["CheckReport", "CotwistError", "FieldSpec", "GF", "HopfAlgebra", "LeftTwist",
           "LinMap", "ModuleCoalgebra", "QQ", "RightTwist", "Space", "check_hopf",
           "check_module_coalgebra"]

__version__ = "0.1.0"
