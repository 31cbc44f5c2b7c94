"""Floating-point validation layer: Lanczos Gamma, numeric evaluation of
Gamma expressions, and direct quadrature of the rank-one intertwining
integral.

Everything exact in the package is cross-checkable here in doubles; nothing
here feeds back into the exact layer.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from scipy.integrate import quad

from .gamma_algebra import GammaExpr


class PoleArgument(ArithmeticError):
    """Gamma evaluated at a nonpositive integer."""


class ConvergenceFailure(ArithmeticError):
    pass


@dataclass(frozen=True)
class NumericConfig:
    quadrature_tol: float = 1e-10
    tail_cutoff: float = 1e6  # only used when the tangent substitution is off
    gamma_precision: str = "double"

    def __post_init__(self):
        if self.quadrature_tol <= 0 or self.tail_cutoff <= 0:
            raise ValueError("tolerances must be positive")


DEFAULT_CONFIG = NumericConfig()

# Lanczos g = 7, n = 9 coefficient set (double precision, relative error
# well under 1e-13 on the right half plane).
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_num(x: float) -> float:
    """Gamma(x) via the Lanczos approximation, with the reflection formula for
    x < 0.5; poles at nonpositive integers raise PoleArgument."""
    if x < 0.5:
        if x == math.floor(x):
            raise PoleArgument(f"Gamma pole at {x}")
        return math.pi / (math.sin(math.pi * x) * gamma_num(1.0 - x))
    x -= 1.0
    acc = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        acc += c / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * acc


def ge_eval_numeric(expr: GammaExpr, z: float) -> float:
    """Evaluate a Gamma expression at a real z with floating-point Gamma.

    The rational prefactor is evaluated exactly (a float is a rational), so
    only the Gamma factors carry rounding; this keeps canonical and
    non-canonical forms in agreement near the zeros of the prefactor.
    """
    zq = Fraction(z)
    num = expr.prefactor.num.eval(zq)
    den = expr.prefactor.den.eval(zq)
    if den == 0:
        raise PoleArgument(f"prefactor pole at z = {z}")
    value = float(num / den) * math.pi ** (expr.pi_half / 2.0)
    for (sign, shift), exp in expr.factors:
        arg = sign * z / 2.0 + float(shift)
        value *= gamma_num(arg) ** exp
    return value


def intertwine_quadrature(
    z: float,
    nu: int = 0,
    d: Fraction = Fraction(0),
    m: tuple[int, int] = (0, 0),
    config: NumericConfig = DEFAULT_CONFIG,
    tangent_substitution: bool = True,
) -> complex:
    """The rank-one intertwining integral at the identity,

        integral over u of (1+u^2)^(-z/2) * exp(i*nu*phi(u)) du,

    where phi(u) = atan2(1, -u) is the rotation angle in the Iwasawa
    decomposition of [[0,1],[-1,-u]] (both triangular entries positive, so
    the sign characters m do not enter at the identity).  Converges for
    z > 1.

    The substitution u = tan(theta) turns the line into (-pi/2, pi/2);
    with it off, the integral is truncated at the configured tail cutoff.
    For K-types of odd nu the value is i times the Gamma-quotient
    eigenvalue; for even nu the two agree on the nose.
    """
    if z <= 1:
        raise ConvergenceFailure(f"integral diverges for z = {z} <= 1")

    def integrand(u: float) -> complex:
        phi = math.atan2(1.0, -u)
        return (1.0 + u * u) ** (-z / 2.0) * cmath.exp(1j * nu * phi)

    points = None
    if tangent_substitution:
        def f(theta: float) -> complex:
            u = math.tan(theta)
            sec2 = 1.0 + u * u
            return integrand(u) * sec2

        lo, hi = -math.pi / 2, math.pi / 2
    else:
        f = integrand
        lo, hi = -config.tail_cutoff, config.tail_cutoff
        points = [-100.0, -1.0, 0.0, 1.0, 100.0]  # guide subdivision to the mass

    re, re_err = quad(lambda t: f(t).real, lo, hi, epsabs=config.quadrature_tol, limit=200, points=points)
    im, im_err = quad(lambda t: f(t).imag, lo, hi, epsabs=config.quadrature_tol, limit=200, points=points)
    if re_err > 1e-6 or im_err > 1e-6:
        raise ConvergenceFailure(f"quadrature error estimate too large: {re_err}, {im_err}")
    return complex(re, im)


def quadrature_phase(nu: int) -> complex:
    """The unit phase relating the literal integral to the Gamma-quotient
    eigenvalue: 1 on even K-types, i on odd ones (the orientation choice in
    the angle coordinate contributes i^eps; the mirror sign for nu < 0 is
    already part of the symbolic eigenvalue)."""
    return 1.0 + 0.0j if nu % 2 == 0 else 1j


def quadrature_vs_symbolic(z: float, nu: int, eps: int | None = None) -> tuple[float, float]:
    """Return (quadrature value / phase, symbolic T_st value) at a real z."""
    from .gl2 import CharacterGL2, T_st

    if eps is None:
        eps = abs(nu) % 2
    chi = CharacterGL2(None, Fraction(0), (eps % 2, 0))
    symbolic = ge_eval_numeric(T_st(chi, nu), z)
    raw = intertwine_quadrature(z, nu)
    folded = raw / quadrature_phase(nu)
    if abs(folded.imag) > 1e-8 * max(1.0, abs(folded.real)):
        raise ConvergenceFailure(f"unexpected imaginary part {folded.imag}")
    return folded.real, symbolic


def beta_integral(s: float) -> float:
    """B(s) = integral of (1+u^2)^(-s/2) = sqrt(pi) Gamma((s-1)/2) / Gamma(s/2)."""
    return math.sqrt(math.pi) * gamma_num((s - 1.0) / 2.0) / gamma_num(s / 2.0)


def gl3_spherical_quadrature(a: float, b: float, c: float, config: NumericConfig = DEFAULT_CONFIG) -> float:
    """The full two-dimensional intertwining integral on GL(3) for the
    sign-trivial section with diagonal exponents (a, b, c):

        integral over (x, y) of f(w u(x, y)),   u = I + x E13 + y E23,

    where w is the permutation sending both unipotent-radical roots of the
    (2,1) parabolic to negative roots (one-line [2,3,1]; this direction is
    what makes the integral converge) and f(g) = prod |t_i(g)|^{e_i} through
    the Iwasawa decomposition.  Closed form (derived by reducing the inner
    integral):

        f(w u(x,y)) = (1+x^2+y^2)^((b-a)/2) * (1+y^2)^((c-b)/2),
        integral = B(a-b) * B(a-c-1),

    which pairs the exponent character against e1-e2 and e1-e3, i.e. the
    roots of the opposite block order, with the height gap entering with a
    minus sign.  Converges for a-b > 1 and a-c > 2.
    """
    if not (a - b > 1 and a - c > 2):
        raise ConvergenceFailure("need a-b > 1 and a-c > 2")
    import numpy as np
    from scipy.integrate import dblquad
    from scipy.linalg import rq

    w = np.zeros((3, 3))
    for k, img in enumerate((2, 3, 1), start=1):
        w[img - 1, k - 1] = 1.0
    e = np.array([a, b, c], dtype=float)

    def f(x: float, y: float) -> float:
        g = w @ np.array([[1.0, 0.0, x], [0.0, 1.0, y], [0.0, 0.0, 1.0]])
        r, _ = rq(g)
        t = np.abs(np.diag(r))
        return float(np.prod(t ** e))

    half_pi = math.pi / 2
    val, err = dblquad(
        lambda ty, tx: f(math.tan(tx), math.tan(ty))
        * (1.0 + math.tan(tx) ** 2)
        * (1.0 + math.tan(ty) ** 2),
        -half_pi,
        half_pi,
        lambda _: -half_pi,
        lambda _: half_pi,
        epsabs=config.quadrature_tol * 100,
        epsrel=1e-9,
    )
    if err > 1e-6:
        raise ConvergenceFailure(f"quadrature error estimate too large: {err}")
    return val
