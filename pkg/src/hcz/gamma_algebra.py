"""Symbolic algebra of Gamma-factor expressions in one variable z.

A ``GammaExpr`` is a product

    prefactor(z) * pi^(pi_half/2) * prod_k Gamma(sign_k*z/2 + shift_k)^(e_k)

with an exact rational-function prefactor.  Gamma(1/2) is never stored as a
factor; it is absorbed into ``pi_half`` (Gamma(1/2)^2 = pi).  The canonical
form moves every shift into the half-open window (0, 1] using
Gamma(s+1) = s*Gamma(s), so that every Gamma factor is finite and nonzero at
z = 0 and all pole/zero data at z = 0 sits in the prefactor.

Factors come in two orientations, argument +z/2 + q or -z/2 + q; at z = 0 the
two coincide, and evaluation groups them accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial, RationalFunction


class PoleError(ArithmeticError):
    """Evaluation at a pole (order at z=0 is negative)."""


class ZeroError(ArithmeticError):
    """Evaluation at a zero (order at z=0 is positive); extract the leading
    coefficient instead."""


class IrrationalGamma(ArithmeticError):
    """A Gamma value at z=0 is neither Gamma(1/2) nor Gamma(1), so the value
    is not of the form rational * pi^(k/2)."""


FactorKey = tuple[int, Fraction]  # (sign, shift): Gamma(sign*z/2 + shift)


def _norm_factors(items) -> tuple[tuple[FactorKey, int], ...]:
    merged: dict[FactorKey, int] = {}
    for key, exp in items:
        sign, shift = key
        if sign not in (1, -1):
            raise ValueError(f"factor sign must be +-1, got {sign}")
        key = (sign, Fraction(shift))
        merged[key] = merged.get(key, 0) + exp
    return tuple(sorted((k, e) for k, e in merged.items() if e != 0))


@dataclass(frozen=True)
class GammaExpr:
    prefactor: RationalFunction
    pi_half: int
    factors: tuple[tuple[FactorKey, int], ...]

    # -- constructors -------------------------------------------------------

    @staticmethod
    def one() -> GammaExpr:
        return GammaExpr(RationalFunction.one(), 0, ())

    @staticmethod
    def of_prefactor(r, pi_half: int = 0) -> GammaExpr:
        return GammaExpr(RationalFunction.of(r), pi_half, ())

    @staticmethod
    def gamma(shift, sign: int = 1, exp: int = 1) -> GammaExpr:
        """Gamma(sign*z/2 + shift)^exp, not yet canonicalized."""
        return GammaExpr(RationalFunction.one(), 0, _norm_factors([(((sign, Fraction(shift))), exp)]))

    @staticmethod
    def sqrt_pi(power: int = 1) -> GammaExpr:
        return GammaExpr(RationalFunction.one(), power, ())

    def __bool__(self) -> bool:
        return bool(self.prefactor)

    # -- algebra -------------------------------------------------------------

    def __mul__(self, other: GammaExpr) -> GammaExpr:
        return GammaExpr(
            self.prefactor * other.prefactor,
            self.pi_half + other.pi_half,
            _norm_factors(list(self.factors) + list(other.factors)),
        )

    def inv(self) -> GammaExpr:
        if not self.prefactor:
            raise ZeroDivisionError("inverse of the zero expression")
        return GammaExpr(
            RationalFunction.make(self.prefactor.den, self.prefactor.num),
            -self.pi_half,
            tuple((k, -e) for k, e in self.factors),
        )

    def is_canonical(self) -> bool:
        return all(0 < shift <= 1 for (_, shift), _ in self.factors)

    def canonical(self) -> GammaExpr:
        """Move every shift into (0, 1] via Gamma(s+1) = s*Gamma(s)."""
        pre = self.prefactor
        out = []
        for (sign, shift), exp in self.factors:
            half = Fraction(sign, 2)
            while shift > 1:
                shift -= 1
                # Gamma(a+1) = a*Gamma(a) with a = sign*z/2 + shift
                pre = pre.times_linear(shift, half, exp)
            while shift <= 0:
                # Gamma(a) = Gamma(a+1)/a with a = sign*z/2 + shift
                pre = pre.times_linear(shift, half, -exp)
                shift += 1
            out.append(((sign, shift), exp))
        return GammaExpr(pre, self.pi_half, _norm_factors(out))

    # -- substitutions -------------------------------------------------------

    def shift_z(self, z0) -> GammaExpr:
        """Substitute z -> z + z0 and re-canonicalize."""
        z0 = Fraction(z0)
        factors = [((sign, shift + Fraction(sign) * z0 / 2), exp) for (sign, shift), exp in self.factors]
        return GammaExpr(self.prefactor.shift(z0), self.pi_half, _norm_factors(factors)).canonical()

    def reflect(self) -> GammaExpr:
        """Substitute z -> 2 - z (so +z/2+q becomes -z/2+(q+1)) and re-canonicalize."""
        factors = [(((-sign), shift + sign), exp) for (sign, shift), exp in self.factors]
        pre = self.prefactor.compose(Polynomial.linear(Fraction(2), Fraction(-1)))
        return GammaExpr(pre, self.pi_half, _norm_factors(factors)).canonical()

    # -- z = 0 data ----------------------------------------------------------

    def order_at_zero(self) -> int:
        """Order of vanishing at z = 0 (negative = pole)."""
        e = self if self.is_canonical() else self.canonical()
        if not e.prefactor:
            raise ValueError("order of the zero expression")
        return e.prefactor.order_at_zero()

    def eval_at_zero(self) -> tuple[int, Fraction]:
        """Exact value at z = 0 as (pi_half, rational), i.e. rational*pi^(pi_half/2).

        Requires order 0.  Gamma factors are grouped by shift across the two
        orientations (their arguments agree at z = 0); net Gamma(1/2) powers
        fold into pi_half, net Gamma(1) powers vanish, anything else raises
        IrrationalGamma.
        """
        e = self if self.is_canonical() else self.canonical()
        order = e.order_at_zero()
        if order < 0:
            raise PoleError(f"pole of order {-order} at z = 0")
        if order > 0:
            raise ZeroError(f"zero of order {order} at z = 0")
        by_shift: dict[Fraction, int] = {}
        for (_, shift), exp in e.factors:
            by_shift[shift] = by_shift.get(shift, 0) + exp
        pi_half = e.pi_half
        for shift, exp in sorted(by_shift.items()):
            if exp == 0 or shift == 1:
                continue
            if shift == Fraction(1, 2):
                pi_half += exp
            else:
                raise IrrationalGamma(f"Gamma({shift}) at z = 0 is not rational*sqrt(pi)^k")
        return pi_half, e.prefactor.value_at_zero()

    def eval_at(self, z0) -> tuple[int, Fraction]:
        """Exact evaluation at a rational point z0, when possible."""
        return self.shift_z(z0).eval_at_zero()

    def order_at(self, z0) -> int:
        return self.shift_z(z0).order_at_zero()

    # -- serialization -------------------------------------------------------

    def to_record(self) -> dict:
        gammas = []
        for (sign, shift), exp in self.factors:
            rec = {"shift": str(shift), "exp": exp}
            if sign < 0:
                rec["sign"] = -1
            gammas.append(rec)
        return {"prefactor": str(self.prefactor), "pi_half": self.pi_half, "gammas": gammas}

    @staticmethod
    def from_record(rec: dict) -> GammaExpr:
        from .poly import rational_function_from_str

        factors = []
        for g in rec.get("gammas", []):
            factors.append(((g.get("sign", 1), Fraction(g["shift"])), g["exp"]))
        return GammaExpr(
            rational_function_from_str(rec["prefactor"]),
            rec.get("pi_half", 0),
            _norm_factors(factors),
        )

    def __str__(self) -> str:
        parts = []
        if str(self.prefactor) != "1" or (self.pi_half == 0 and not self.factors):
            parts.append(str(self.prefactor))
        if self.pi_half:
            parts.append("pi^(%d/2)" % self.pi_half)
        for (sign, shift), exp in self.factors:
            arg = f"{'-' if sign < 0 else ''}z/2{'+' if shift >= 0 else '-'}{abs(shift)}"
            if shift == 0:
                arg = f"{'-' if sign < 0 else ''}z/2"
            s = f"G({arg})"
            if exp != 1:
                s += f"^{exp}"
            parts.append(s)
        return " * ".join(parts)
