"""Diamond closure on cover graphs of finite modular lattices, checked
against exact Wedderburn-polynomial lattices over the rational quaternions."""

from .exactnum import Quaternion, quat_conjugate_by, quat_inv
from .lattice import FiniteLattice, LatticeError, make_standard
from .ncpoly import NCPoly, gcrd, lclm, wedderburn

__version__ = "0.1.0"

__all__ = [
    "Quaternion",
    "quat_inv",
    "quat_conjugate_by",
    "NCPoly",
    "gcrd",
    "lclm",
    "wedderburn",
    "FiniteLattice",
    "LatticeError",
    "make_standard",
]
