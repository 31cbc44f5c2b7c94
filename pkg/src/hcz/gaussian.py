"""Gaussian rationals: the field Q(i) with exact Fraction components."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to Fraction")


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of Q(i), i^2 = -1."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @staticmethod
    def of(x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_frac(x))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other) -> GaussianRational:
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other) -> GaussianRational:
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other) -> GaussianRational:
        return GaussianRational.of(other) - self

    def __mul__(self, other) -> GaussianRational:
        other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other) -> GaussianRational:
        return self * GaussianRational.of(other).inverse()

    def __rtruediv__(self, other) -> GaussianRational:
        return GaussianRational.of(other) * self.inverse()

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        im = "i" if abs(self.im) == 1 else f"{abs(self.im)}i"
        if not self.re:
            return im if self.im > 0 else "-" + im
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{im}"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))
