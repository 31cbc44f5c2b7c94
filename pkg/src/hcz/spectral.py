"""Spectral/parameter layer for GL(n): the even-odd parabolic, the
interleaving Weyl element w_un, cuspidal parameters, minimal K-types, the
lowest cohomology degree, orbit classification under the compact Weyl group,
and the u-cohomology degree-uniqueness check.

The even-odd parabolic has Levi blocks (2, 2, ..., 2) for n even and
(2, ..., 2, 1) for n odd (the simple roots of the Levi are the odd-index
ones).  Its unipotent-radical dimension satisfies
floor(n^2/4) = floor(n/2) + length(w_un).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .weyl import (
    ParabolicGLN,
    RankTooLarge,
    Weight,
    WeylElement,
    dot_action,
    kostant_set,
)


class NotSelfDual(ValueError):
    pass


class ParityError(ValueError):
    pass


class DominanceFailure(ValueError):
    pass


def even_odd_parabolic(n: int) -> ParabolicGLN:
    """Blocks (2,...,2) for n even, (2,...,2,1) for n odd."""
    blocks = (2,) * (n // 2) + ((1,) if n % 2 else ())
    return ParabolicGLN(n, blocks)


def w_un(n: int) -> WeylElement:
    """The interleaving Kostant representative: its inverse maps
    1->1, 2->n, 3->2, 4->n-1, ...  Length n(n-2)/4 (n even), (n-1)^2/4 (n odd)."""
    if n < 2:
        raise ValueError("n >= 2 required")
    inv = []
    for k in range(1, n + 1):
        inv.append((k + 1) // 2 if k % 2 else n + 1 - k // 2)
    w = WeylElement(tuple(inv)).inverse()
    expected = n * (n - 2) // 4 if n % 2 == 0 else (n - 1) ** 2 // 4
    if w.length() != expected:
        raise AssertionError("w_un length does not match the closed formula")
    return w


def b_lowest(n: int) -> int:
    """floor(n^2/4), the lowest degree with nonvanishing relative Lie-algebra
    cohomology; equals floor(n/2) + length(w_un) (consistency asserted)."""
    if n < 1:
        raise ValueError("n >= 1 required")
    b = n * n // 4
    if n >= 2:
        assert b == n // 2 + w_un(n).length()
    return b


def cuspidal_b(a, n: int, d=Fraction(0)) -> list[Fraction]:
    """Closed formulas for the block highest-weight coefficients b_1, b_3, ...

    b_{2j-1} = 2a_j + ... + 2a_{n/2-1} + a_{n/2} + n - 2j   (n even)
    b_{2j-1} = 2a_j + ... + 2a_{(n-1)/2} + n - 2j            (n odd)
    """
    a = [Fraction(x) for x in a]
    if len(a) != n - 1:
        raise ValueError(f"expected {n - 1} coefficients, got {len(a)}")
    out = []
    for j in range(1, n // 2 + 1):
        if n % 2 == 0:
            val = 2 * sum(a[j - 1 : n // 2 - 1], Fraction(0)) + a[n // 2 - 1] + n - 2 * j
        else:
            val = 2 * sum(a[j - 1 : (n - 1) // 2], Fraction(0)) + n - 2 * j
        out.append(val)
    return out


def cuspidal_c(n: int) -> list[Fraction]:
    """The bookkeeping constants c(i, n) = (n-i)/2 (n even), (n-1-i)/2 (n odd),
    for odd i."""
    return [
        Fraction(n - i, 2) if n % 2 == 0 else Fraction(n - 1 - i, 2)
        for i in range(1, n, 2)
    ]


@dataclass(frozen=True)
class SpectralParams:
    n: int
    lam: Weight
    d: Fraction
    w: WeylElement
    mu: Weight  # w_un . lam
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    zeta_mu: tuple[Fraction, ...]  # central character data: block sums of mu
    block_twists: tuple[Fraction, ...]  # det-coefficient per GL(2) block (and GL(1) tail)
    circ_r: int
    b_n: int
    regular: bool

    def to_record(self) -> dict:
        a, _ = self.lam.gamma_coefficients()
        rec = {
            "n": self.n,
            "a": [str(x) for x in a],
            "d": str(self.d),
            "b": [str(x) for x in self.b],
            "c": [str(x) for x in self.c],
            "l_wun": self.w.length(),
            "b_n": self.b_n,
            "minimal_k_type": {
                "+1": [str(x) for x in minimal_k_type(self, 1)],
                "-1": [str(x) for x in minimal_k_type(self, -1)],
            },
        }
        return rec


def spectral_params(a, d, n: int, strict: bool = True) -> SpectralParams:
    """Build the parameter set for the weight sum(a_i gamma_i) + d*det on GL(n).

    Validates essential self-duality (a_i = a_{n-i}), integrality of the
    weight, and for n even the constraint a_{n/2} = 2d (mod 2).  The closed
    formulas for the b_i are cross-checked against the dot action of w_un.
    """
    a = [Fraction(x) for x in a]
    d = Fraction(d)
    if len(a) != n - 1:
        raise ValueError(f"expected {n - 1} coefficients, got {len(a)}")
    if any(x != y for x, y in zip(a, reversed(a))):
        raise NotSelfDual(f"{a} is not symmetric")
    lam = Weight.from_gamma_coefficients(n, a, d)
    if strict:
        if not lam.is_integral():
            raise ParityError(f"weight {lam} has non-integral coordinates")
        if n % 2 == 0 and (a[n // 2 - 1] - 2 * d) % 2 != 0:
            raise ParityError(f"a_(n/2) = {a[n // 2 - 1]} and d = {d} must agree mod 2")
    w = w_un(n)
    mu = dot_action(n, w, lam)
    b_closed = cuspidal_b(a, n, d)
    blocks = even_odd_parabolic(n).block_sizes
    b_direct, twists = [], []
    pos = 0
    for size in blocks:
        cs = mu.coords[pos : pos + size]
        if size == 2:
            b_direct.append(cs[0] - cs[1])
            twists.append((cs[0] + cs[1]) / 2)
        else:
            twists.append(cs[0])
        pos += size
    if b_direct != b_closed:
        raise AssertionError(f"closed b {b_closed} != dot-action b {b_direct}")
    # the GL(1) tail coordinate is the middle coordinate of lam plus (n-1)/2
    if n % 2 == 1 and twists[-1] != Fraction(n - 1, 2) + lam.coords[(n - 1) // 2]:
        raise AssertionError("GL(1) tail twist does not match (n-1)/2 + lam_mid")
    return SpectralParams(
        n=n,
        lam=lam,
        d=d,
        w=w,
        mu=mu,
        b=tuple(b_closed),
        c=tuple(cuspidal_c(n)),
        zeta_mu=mu.block_sums(blocks),
        block_twists=tuple(twists),
        circ_r=n // 2,
        b_n=b_lowest(n),
        regular=all(x >= 1 for x in a),
    )


def spectral_params_from_weight(mu: Weight, strict: bool = False) -> SpectralParams:
    """Same as spectral_params but from coordinates (used for parabolic block
    weights, which carry fractional central twists)."""
    a, d = mu.gamma_coefficients()
    n = mu.n
    if n == 1:
        # degenerate GL(1) block: no cuspidal data
        return SpectralParams(
            n=1,
            lam=mu,
            d=mu.coords[0],
            w=WeylElement.identity(1),
            mu=mu,
            b=(),
            c=(),
            zeta_mu=(mu.coords[0],),
            block_twists=(mu.coords[0],),
            circ_r=0,
            b_n=0,
            regular=True,
        )
    if any(x != y for x, y in zip(a, reversed(a))):
        raise NotSelfDual(f"{a} is not symmetric")
    w = w_un(n)
    mu_dot = dot_action(n, w, mu)
    blocks = even_odd_parabolic(n).block_sizes
    b_direct, twists = [], []
    pos = 0
    for size in blocks:
        cs = mu_dot.coords[pos : pos + size]
        if size == 2:
            b_direct.append(cs[0] - cs[1])
            twists.append((cs[0] + cs[1]) / 2)
        else:
            twists.append(cs[0])
        pos += size
    assert b_direct == cuspidal_b(a, n, d)
    return SpectralParams(
        n=n,
        lam=mu,
        d=d,
        w=w,
        mu=mu_dot,
        b=tuple(b_direct),
        c=tuple(cuspidal_c(n)),
        zeta_mu=mu_dot.block_sums(blocks),
        block_twists=tuple(twists),
        circ_r=n // 2,
        b_n=b_lowest(n),
        regular=all(x >= 1 for x in a),
    )


def minimal_k_type(params: SpectralParams, eps: int = 1) -> list[Fraction]:
    """Highest weight of the minimal K-type: (b_1+2, b_3+2, ..., eps*(b_m+2)).

    For n odd the sign choice is immaterial and the all-plus form is returned.
    Dominance (strict decrease of the b_i) is validated.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +-1")
    b = list(params.b)
    if not b:
        return []
    for x, y in zip(b, b[1:]):
        if not x > y:
            raise DominanceFailure(f"b-chain {b} is not strictly decreasing")
    out = [x + 2 for x in b]
    if params.n % 2 == 0:
        out[-1] = eps * out[-1]
    return out


def wc_orbit_class(eps_vector, n: int):
    """Orbit invariant under the compact Weyl group: a single orbit for n odd,
    the product of the signs for n even."""
    eps_vector = tuple(eps_vector)
    if len(eps_vector) != n // 2:
        raise ValueError(f"expected {n // 2} signs, got {len(eps_vector)}")
    if any(e not in (1, -1) for e in eps_vector):
        raise ValueError("signs must be +-1")
    if n % 2 == 1:
        return "single-orbit"
    prod = 1
    for e in eps_vector:
        prod *= e
    return prod


def eta_sign(a_half, d) -> int:
    """(-1)^((a_{n/2} - 2d)/2), the sign through which the orientation-reversing
    element swaps the two sign-choice modules (n even)."""
    a_half, d = Fraction(a_half), Fraction(d)
    if (a_half - 2 * d) % 2 != 0:
        raise ParityError(f"a_(n/2) = {a_half} and 2d = {2 * d} must agree mod 2")
    return (-1) ** int((a_half - 2 * d) / 2 % 2)


def u_cohomology_degrees(a, d, n: int, max_rank: int = 6) -> dict[int, int]:
    """Histogram, by length, of Kostant representatives w of the even-odd
    parabolic whose dot action matches the central character of w_un . lam
    on the block-sum coordinates.

    For self-dual lam the matching elements are exactly the assignments of
    the coordinate pairs {i, n+1-i} of lam+rho to the GL(2) blocks, so the
    histogram is concentrated in the single degree length(w_un) with count
    floor(n/2)!.  (Degree uniqueness is the load-bearing fact; the count is 1
    only for n <= 3.)
    """
    if n > max_rank:
        raise RankTooLarge(f"n = {n} exceeds the enumeration guard {max_rank}")
    params = spectral_params(a, d, n, strict=False)
    p = even_odd_parabolic(n)
    target = params.zeta_mu
    hist: dict[int, int] = {}
    for w in kostant_set(p, max_rank=max_rank):
        image = dot_action(n, w, params.lam)
        if image.block_sums(p.block_sizes) == target:
            hist[w.length()] = hist.get(w.length(), 0) + 1
    return hist
