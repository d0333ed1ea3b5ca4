"""Trivariate diagonal harmonics and r-Tamari combinatorics, exactly.

The package computes the combinatorial side (r-Dyck paths, the r-Tamari
poset, r-parking functions with their statistics), the algebraic side
(symmetric functions, the n = 3 nabla iteration, harmonic spaces cut
out by differential operators over exact rationals), and a harness that
checks every identity tying the two together.
"""

from .nabla3 import FrobVector3, TwoRowElem, h3, h3_closed, nabla_apply
from .parking import ParkingFunction, all_parking, dinv, is_parking, rearrange
from .partitions import partitions_of, z_of
from .qpoly import QPoly3, schur_decompose_q3, schur_q3
from .symfunc import SymFunc, omega, plethystic_point_eval
from .tamari import DyckPath, TamariPoset, build_poset, enumerate_paths, fuss_catalan

__version__ = "0.1.0"

__all__ = [
    "DyckPath",
    "FrobVector3",
    "ParkingFunction",
    "QPoly3",
    "SymFunc",
    "TamariPoset",
    "TwoRowElem",
    "all_parking",
    "build_poset",
    "dinv",
    "enumerate_paths",
    "fuss_catalan",
    "h3",
    "h3_closed",
    "is_parking",
    "nabla_apply",
    "omega",
    "partitions_of",
    "plethystic_point_eval",
    "rearrange",
    "schur_decompose_q3",
    "schur_q3",
    "z_of",
    "__version__",
]
