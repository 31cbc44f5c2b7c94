"""Dense univariate polynomials and rational functions in z over exact scalars.

``Polynomial`` works over any exact field whose elements support +, -, *, /
and truthiness (``fractions.Fraction`` and ``GaussianRational`` both do).
``RationalFunction`` is restricted to Fraction coefficients; it is kept in
normal form (numerator/denominator coprime, denominator monic, zero = 0/1).

>>> z, one = Polynomial.variable(), Polynomial.constant(1)
>>> (z * z - one).coeffs
(Fraction(-1, 1), Fraction(0, 1), Fraction(1, 1))
>>> str(RationalFunction.of(z * z - one) / RationalFunction.of(z - one))
'1 + z'
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients ascending by degree; the zero polynomial has coeffs == ()."""

    coeffs: tuple

    @staticmethod
    def of(coeffs) -> Polynomial:
        return Polynomial(_trim(coeffs))

    @staticmethod
    def constant(c) -> Polynomial:
        if isinstance(c, int):
            c = Fraction(c)
        return Polynomial.of([c])

    @staticmethod
    def variable() -> Polynomial:
        return Polynomial.of([Fraction(0), Fraction(1)])

    @staticmethod
    def linear(c0, c1) -> Polynomial:
        """c0 + c1*z."""
        if isinstance(c0, int):
            c0 = Fraction(c0)
        if isinstance(c1, int):
            c1 = Fraction(c1)
        return Polynomial.of([c0, c1])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1]

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(_trim(out))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if not self or not other:
            return Polynomial(())
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                p = a * b
                out[i + j] = p if out[i + j] is None else out[i + j] + p
        return Polynomial(_trim(out))

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        if not c:
            return Polynomial(())
        return Polynomial(_trim(c * a for a in self.coeffs))

    def __divmod__(self, other: Polynomial):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial(()), self
        rem = list(self.coeffs)
        dd = other.degree
        quot = [Fraction(0)] * (self.degree - dd + 1)
        inv_lead = 1 / other.leading()
        while True:
            while rem and not rem[-1]:
                rem.pop()
            k = len(rem) - 1 - dd
            if k < 0:
                break
            c = rem[-1] * inv_lead
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
            rem.pop()
        return Polynomial(_trim(quot)), Polynomial(_trim(rem))

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if not self:
            return self
        return self.scale(1 / self.leading())

    def eval(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return x * 0  # zero of the right type
        return acc

    def compose(self, inner: Polynomial) -> Polynomial:
        """self(inner(z))."""
        acc = Polynomial(())
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.constant(c)
        return acc

    def order_at_zero(self) -> int:
        """Multiplicity of the root z = 0; undefined (raises) for 0."""
        if not self:
            raise ValueError("order of the zero polynomial")
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise AssertionError


# ---------------------------------------------------------------------------
# gcd over Q via the primitive PRS on integer coefficient lists (keeps
# intermediate coefficients small; plain Fraction Euclid blows up past
# degree ~30).

def _int_content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, abs(c))
    return g or 1


def _int_primitive(a: list[int]) -> list[int]:
    g = _int_content(a)
    return [c // g for c in a]


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (b nonzero, deg a >= deg b)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j in range(db + 1):
            a[shift + j] -= la * b[j]
        while a and a[-1] == 0:
            a.pop()
    return a


def _to_int_poly(p: Polynomial) -> list[int]:
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in p.coeffs]


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd over Q."""
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    a, b = _int_primitive(_to_int_poly(p)), _int_primitive(_to_int_poly(q))
    if len(a) < len(b):
        a, b = b, a
    while any(b):
        r = _int_pseudo_rem(a, b)
        if not any(r):
            b_poly = Polynomial.of([Fraction(c) for c in b])
            return b_poly.monic()
        a, b = b, _int_primitive(r)
    return Polynomial.of([Fraction(c) for c in a]).monic()


def _divide_out_linear(p: Polynomial, c0, c1):
    """Return p / (c0 + c1*z) if it divides exactly, else None."""
    q, r = divmod(p, Polynomial.linear(c0, c1))
    if r:
        return None
    return q


@dataclass(frozen=True)
class RationalFunction:
    """num/den over Q, normalized: coprime, den monic, zero stored as 0/1."""

    num: Polynomial
    den: Polynomial

    @staticmethod
    def make(num: Polynomial, den: Polynomial) -> RationalFunction:
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return RationalFunction(Polynomial(()), Polynomial.constant(1))
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading()
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        return RationalFunction(num, den)

    @staticmethod
    def of(p) -> RationalFunction:
        if isinstance(p, RationalFunction):
            return p
        if isinstance(p, (int, Fraction)):
            p = Polynomial.constant(p)
        return RationalFunction(p, Polynomial.constant(1))

    @staticmethod
    def one() -> RationalFunction:
        return RationalFunction.of(1)

    def __bool__(self) -> bool:
        return bool(self.num)

    def __mul__(self, other) -> RationalFunction:
        other = RationalFunction.of(other)
        if not self or not other:
            return RationalFunction.of(0)
        # cross-cancel first so the gcds stay small
        a, d = self.num, other.den
        g = poly_gcd(a, d)
        if g.degree > 0:
            a, d = a // g, d // g
        b, c = other.num, self.den
        g = poly_gcd(b, c)
        if g.degree > 0:
            b, c = b // g, c // g
        return RationalFunction.make(a * b, c * d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        other = RationalFunction.of(other)
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return self * RationalFunction(other.den, other.num)

    def __add__(self, other) -> RationalFunction:
        other = RationalFunction.of(other)
        return RationalFunction.make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> RationalFunction:
        return self + (-RationalFunction.of(other))

    def times_linear(self, c0, c1, power: int = 1) -> RationalFunction:
        """Multiply by (c0 + c1*z)**power without a general gcd pass."""
        out = self
        for _ in range(abs(power)):
            if power > 0:
                q = _divide_out_linear(out.den, c0, c1)
                if q is not None:  # cancels against the denominator
                    lead = q.leading()
                    out = RationalFunction(out.num.scale(1 / lead), q.scale(1 / lead))
                else:
                    out = RationalFunction(out.num * Polynomial.linear(c0, c1), out.den)
            else:
                q = _divide_out_linear(out.num, c0, c1)
                if q is not None:
                    out = RationalFunction(q, out.den)
                else:
                    den = out.den * Polynomial.linear(c0, c1)
                    lead = den.leading()
                    out = RationalFunction(out.num.scale(1 / lead), den.scale(1 / lead))
        return out

    def eval(self, x):
        return self.num.eval(x) / self.den.eval(x)

    def order_at_zero(self) -> int:
        """Order of vanishing at z=0 (negative for a pole)."""
        if not self.num:
            raise ValueError("order of the zero function")
        return self.num.order_at_zero() - self.den.order_at_zero()

    def value_at_zero(self) -> Fraction:
        num0, den0 = (self.num.coeffs[0] if self.num else Fraction(0)), self.den.coeffs[0]
        if not den0:
            raise ZeroDivisionError("pole at z = 0")
        return num0 / den0

    def compose(self, inner: Polynomial) -> RationalFunction:
        return RationalFunction.make(self.num.compose(inner), self.den.compose(inner))

    def shift(self, z0: Fraction) -> RationalFunction:
        """z -> z + z0."""
        return self.compose(Polynomial.linear(z0, Fraction(1)))

    def __str__(self) -> str:
        num, den = _integerized(self)
        ns = _int_poly_str(num)
        if den == [1]:
            return ns
        return f"({ns})/({_int_poly_str(den)})"


def _integerized(r: RationalFunction) -> tuple[list[int], list[int]]:
    """Scale num/den by a common rational so both have integer coefficients
    with overall content 1 and positive denominator leading coefficient."""
    lcm = 1
    for c in list(r.num.coeffs) + list(r.den.coeffs):
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ni = [int(c * lcm) for c in r.num.coeffs] or [0]
    di = [int(c * lcm) for c in r.den.coeffs]
    g = math.gcd(_int_content(ni) if any(ni) else 0, _int_content(di))
    if g > 1:
        ni = [c // g for c in ni]
        di = [c // g for c in di]
    if di[-1] < 0:
        ni = [-c for c in ni]
        di = [-c for c in di]
    return ni, di


def _int_poly_str(coeffs: list[int]) -> str:
    if not any(coeffs):
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            term = str(abs(c))
        else:
            zpow = "z" if k == 1 else f"z^{k}"
            term = zpow if abs(c) == 1 else f"{abs(c)}*{zpow}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


_TERM_RE = re.compile(r"^([+-]?\d*)(?:\*?z(?:\^(\d+))?)?$")


def _parse_int_poly(s: str) -> Polynomial:
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.replace(" ", "")
    if not s or s == "0":
        return Polynomial(())
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", s)
    coeffs: dict[int, int] = {}
    for t in terms:
        m = _TERM_RE.match(t)
        if not m:
            raise ValueError(f"cannot parse polynomial term {t!r}")
        cs, ps = m.groups()
        has_z = "z" in t
        if cs in ("", "+"):
            c = 1
        elif cs == "-":
            c = -1
        else:
            c = int(cs)
        k = 0
        if has_z:
            k = int(ps) if ps else 1
        coeffs[k] = coeffs.get(k, 0) + c
    deg = max(coeffs)
    return Polynomial.of([Fraction(coeffs.get(k, 0)) for k in range(deg + 1)])


def rational_function_from_str(s: str) -> RationalFunction:
    """Inverse of str(RationalFunction) up to normalization."""
    s = s.strip()
    if ")/(" in s:
        ns, ds = s.split(")/(", 1)
        return RationalFunction.make(_parse_int_poly(ns + ")"), _parse_int_poly("(" + ds))
    return RationalFunction.make(_parse_int_poly(s), Polynomial.constant(1))
