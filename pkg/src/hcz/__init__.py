"""Exact-arithmetic workbench for GL(N) principal-series intertwining
operators: Gamma-factor symbolic algebra, type-A Weyl/Kostant combinatorics,
rank-one Harish-Chandra module computations, the spectral parameter layer,
and the factorized intertwiner with its pi-power rationality report."""

from .gamma_algebra import GammaExpr, IrrationalGamma, PoleError, ZeroError
from .gaussian import GaussianRational
from .poly import Polynomial, RationalFunction
from .weyl import (
    ParabolicGLN,
    Weight,
    WeylElement,
    dot_action,
    is_balanced,
    is_kostant,
    kostant_set,
    wp_factorization,
)

__all__ = [
    "GammaExpr",
    "GaussianRational",
    "IrrationalGamma",
    "ParabolicGLN",
    "PoleError",
    "Polynomial",
    "RationalFunction",
    "Weight",
    "WeylElement",
    "ZeroError",
    "dot_action",
    "is_balanced",
    "is_kostant",
    "kostant_set",
    "wp_factorization",
]

__version__ = "0.1.0"
