"""Factorized intertwining operator for a maximal parabolic of GL(N).

The longest Kostant representative w_P factors into dim(U_P) simple
reflections; each step is a rank-one (GL(2)) intertwiner whose lowest-K-type
eigenvalue, restricted to the one-parameter deformation line, is

    Gamma((c_k + eps_k + h_k - 1 + z)/2)
    ------------------------------------ * Gamma(1/2)
    Gamma((c_k + eps_k + h_k + z)/2)

with c_k = <beta_k^vee, chi>, h_k the height gap of beta_k, and eps_k the
parity of c_k.  Multiplying the dim(U_P) factors and evaluating at z = 0
gives pi^(d_U/2) times a nonzero rational: the scalar content of the
rationality theorem at the level of the Gamma prefactor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gamma_algebra import GammaExpr, PoleError, ZeroError
from .gl2 import CharacterGL2, T_st
from .poly import Polynomial, RationalFunction
from .spectral import spectral_params_from_weight
from .weyl import (
    ParabolicGLN,
    Weight,
    WeylElement,
    WordFactorization,
    dot_action,
    fundamental_weight,
    h_of_root,
    is_balanced,
    is_kostant,
    complement,
    kostant_set,
    pairing,
    wp_factorization,
)


class NotBalanced(ValueError):
    pass


class NotSelfDual(ValueError):
    pass


class NotNegativeChamber(ValueError):
    pass


class NonIntegralPairing(ValueError):
    pass


class UnexpectedPole(ArithmeticError):
    pass


class OddDU(ValueError):
    pass


# ---------------------------------------------------------------------------
# the balanced datum


@dataclass(frozen=True)
class BalancedDatum:
    N: int
    n: int
    nprime: int
    w: WeylElement
    wprime: WeylElement
    lam: Weight
    mu_tilde: Weight  # w . lam
    mu_tilde_prime: Weight  # w' . lam
    a_w: Fraction  # gamma_n coefficient of mu_tilde
    b_w: Fraction  # gamma_n coefficient of mu_tilde + rho (= a_w + N/2)
    d_blocks: tuple[Fraction, Fraction]  # det_n, det_n' coefficients of mu_tilde
    weight_w: Fraction  # sum of the Levi b_i = a'_i + 1


def _gamma_n_coefficient(mu: Weight, n: int, nprime: int) -> Fraction:
    s1 = sum(mu.coords[:n], Fraction(0))
    s2 = sum(mu.coords[n:], Fraction(0))
    return s1 / n - s2 / nprime


def _block_self_dual(coords) -> bool:
    diffs = [coords[i] - coords[i + 1] for i in range(len(coords) - 1)]
    return diffs == list(reversed(diffs))


def balanced_datum(N: int, n: int, w, lam: Weight) -> BalancedDatum:
    """Validate the three hypotheses on (w, lam) and assemble the datum:

    a) w is balanced: length(w) = dim(U_P)/2;
    b) both blocks of mu~ = w . lam are essentially self dual;
    c) mu~ lies in the negative chamber: its gamma_n coefficient b(w, lam)
       relative to w(lam+rho) is <= 0.

    The complementary representative w' satisfies length(w) + length(w') =
    dim U_P and the gamma coefficients obey a(w) + a(w') = -N.
    """
    p = ParabolicGLN.maximal(N, n)
    nprime = N - n
    if isinstance(w, int):
        balanced = [x for x in kostant_set(p) if is_balanced(x, p)]
        w = balanced[w]
    if not is_kostant(w, p):
        raise NotBalanced(f"{w} is not a Kostant representative")
    if not is_balanced(w, p):
        raise NotBalanced(f"assumption (a) fails: length {w.length()} != {p.dim_u() // 2}")
    mu = dot_action(N, w, lam)
    if not (_block_self_dual(mu.coords[:n]) and _block_self_dual(mu.coords[n:])):
        raise NotSelfDual("assumption (b) fails: a block of w.lam is not essentially self dual")
    a_w = _gamma_n_coefficient(mu, n, nprime)
    b_w = a_w + Fraction(N, 2)
    if b_w > 0:
        raise NotNegativeChamber(f"assumption (c) fails: b(w,lam) = {b_w} > 0")
    wprime = complement(w, p)
    mu_prime = dot_action(N, wprime, lam)
    a_wp = _gamma_n_coefficient(mu_prime, nprime, n)
    if a_w + a_wp != -N:
        raise AssertionError("gamma-coefficient sum a(w)+a(w') != -N")
    # semisimple parts swap between the two sides
    def diffs(cs):
        return [cs[i] - cs[i + 1] for i in range(len(cs) - 1)]

    if diffs(mu_prime.coords[:nprime]) != diffs(mu.coords[n:]):
        raise AssertionError("semisimple block swap failed")
    d1 = sum(mu.coords[:n], Fraction(0)) / n
    d2 = sum(mu.coords[n:], Fraction(0)) / nprime
    aprime, _ = mu.gamma_coefficients()
    weight_w = sum((aprime[i] + 1 for i in range(N - 1) if i != n - 1), Fraction(0))
    return BalancedDatum(N, n, nprime, w, wprime, lam, mu, mu_prime, a_w, b_w, (d1, d2), weight_w)


# ---------------------------------------------------------------------------
# the induced-from character


def chi_from(datum: BalancedDatum) -> Weight:
    """The principal-series character from which the induced module is built:
    blockwise, apply the interleaving element of the block to the block of
    mu~ (dot action within the block) and add the sum of positive roots of
    each GL(2) factor, i.e. shift every pair (x, y) of the interleaved block
    to (x+1, y-1).

    All coroot pairings of the result against the unipotent roots must be
    integers.
    """
    coords: list[Fraction] = []
    for block in (datum.mu_tilde.coords[: datum.n], datum.mu_tilde.coords[datum.n :]):
        params = spectral_params_from_weight(Weight(block))
        cs = list(params.mu.coords)
        for i in range(0, len(cs) - 1, 2):
            cs[i] += 1
            cs[i + 1] -= 1
        coords.extend(cs)
    chi = Weight(tuple(coords))
    p = ParabolicGLN.maximal(datum.N, datum.n)
    for beta in p.unipotent_roots():
        if pairing(beta, chi).denominator != 1:
            raise NonIntegralPairing(f"<{beta}^vee, chi> = {pairing(beta, chi)} is not integral")
    return chi


# ---------------------------------------------------------------------------
# factors and the product


@dataclass(frozen=True)
class FactorData:
    k: int  # 1-based position in the word
    beta: tuple[int, int]
    r: int  # simple-root index of the reflection
    c: int  # <beta^vee, chi>
    h: int  # height gap of beta
    eps: int  # parity of c
    m: int  # 1 iff h odd and c+eps+h-1 in {0,-2,-4,...}


def factor_data(wf: WordFactorization, chi: Weight) -> list[FactorData]:
    out = []
    for k, (beta, r) in enumerate(zip(wf.betas, wf.word), start=1):
        c = pairing(beta, chi)
        if c.denominator != 1:
            raise NonIntegralPairing(f"<{beta}^vee, chi> = {c} is not integral")
        c = int(c)
        h = h_of_root(beta)
        eps = c % 2
        arg = c + eps + h - 1
        m = 1 if (h % 2 == 1 and arg <= 0 and arg % 2 == 0) else 0
        out.append(FactorData(k, beta, r, c, h, eps, m))
    return out


def factor_gamma(fd: FactorData, strip: bool = False) -> GammaExpr:
    """Gamma((c+eps+h-1+z)/2) Gamma(1/2) / Gamma((c+eps+h+z)/2), times z^m
    when strip is set (the pole is moved out of the scalar factor)."""
    a = Fraction(fd.c + fd.eps + fd.h - 1, 2)
    expr = GammaExpr.gamma(a) * GammaExpr.sqrt_pi() * GammaExpr.gamma(a + Fraction(1, 2), exp=-1)
    if strip and fd.m:
        z_pow = RationalFunction.of(Polynomial.of([Fraction(0)] * fd.m + [Fraction(1)]))
        expr = expr * GammaExpr.of_prefactor(z_pow)
    return expr.canonical()


@dataclass(frozen=True)
class IntertwinerReport:
    N: int
    n: int
    w: WeylElement
    d_U: int
    chi: Weight
    factors: tuple[FactorData, ...]
    prefactor: GammaExpr  # canonical product of the unstripped factors
    total_mk: int
    even_h_count: int
    order_at_zero: int  # order of the scalar product at z = 0
    pi_half: int  # of the leading Laurent coefficient
    rational_value: Fraction  # of the leading Laurent coefficient

    def to_record(self) -> dict:
        return {
            "N": self.N,
            "n": self.n,
            "w": str(self.w),
            "d_U": self.d_U,
            "chi": self.chi.coord_str(),
            "factors": [
                {
                    "k": f.k,
                    "beta": f"e{f.beta[0]}-e{f.beta[1]}",
                    "c": f.c,
                    "h": f.h,
                    "eps": f.eps,
                    "m": f.m,
                    "gamma": factor_gamma(f).to_record(),
                }
                for f in self.factors
            ],
            "pi_half": self.pi_half,
            "rational": str(self.rational_value),
            "even_h_count": self.even_h_count,
            "order_at_zero": self.order_at_zero,
            "total_mk": self.total_mk,
        }


def prefactor_product(
    p: ParabolicGLN, chi: Weight, w: WeylElement | None = None, strict_order: bool = False
) -> IntertwinerReport:
    """Multiply the rank-one Gamma factors over the beta-sequence of w_P,
    canonicalize, and extract the leading Laurent coefficient at z = 0.

    The leading coefficient is always pi^(d_U/2) times a nonzero rational:
    after canonicalization each even-h factor carries Gamma(1/2)^2 = pi and
    each odd-h factor's two sqrt(pi) contributions cancel, while the rational
    prefactor's leading coefficient is a nonzero rational.  Individual
    factors may vanish or blow up at z = 0 (first order, when a Gamma
    argument lands in the nonpositive even integers); the net order is
    recorded in ``order_at_zero``.  It is 0 exactly when no compensation from
    the K-type matrices is needed -- e.g. the trivial-weight GL(3) data -- and
    ``strict_order=True`` turns a nonzero net order into UnexpectedPole.
    """
    if not p.is_maximal():
        raise ValueError("maximal parabolic required")
    d_u = p.dim_u()
    if d_u % 2:
        raise OddDU(f"dim U_P = {d_u} is odd")
    wf = wp_factorization(p)
    gamma_n = fundamental_weight(p.n, p.block_sizes[0])
    for beta in wf.betas:
        if pairing(beta, gamma_n) != 1:
            raise AssertionError("the deformation line meets some root hyperplane unevenly")
    factors = factor_data(wf, chi)
    product = GammaExpr.one()
    for fd in factors:
        product = product * factor_gamma(fd)
    product = product.canonical()
    order = product.order_at_zero()
    if strict_order and order != 0:
        raise UnexpectedPole(f"product has order {order} at z = 0")
    leading = product
    if order:
        z_pow = RationalFunction.make(
            Polynomial.of([Fraction(1)]), Polynomial.of([Fraction(0)] * order + [Fraction(1)])
        ) if order > 0 else RationalFunction.of(
            Polynomial.of([Fraction(0)] * (-order) + [Fraction(1)])
        )
        leading = (product * GammaExpr.of_prefactor(z_pow)).canonical()
    try:
        pi_half, value = leading.eval_at_zero()
    except (PoleError, ZeroError) as exc:  # pragma: no cover - order normalized above
        raise UnexpectedPole(str(exc))
    return IntertwinerReport(
        N=p.n,
        n=p.block_sizes[0],
        w=w if w is not None else wf.prefixes[-1],
        d_U=d_u,
        chi=chi,
        factors=tuple(factors),
        prefactor=product,
        total_mk=sum(f.m for f in factors),
        even_h_count=sum(1 for f in factors if f.h % 2 == 0),
        order_at_zero=order,
        pi_half=pi_half,
        rational_value=value,
    )


def factorize(N: int, n: int, lam: Weight, w=None) -> tuple[BalancedDatum, IntertwinerReport]:
    """End-to-end driver: pick (or validate) a balanced Kostant element,
    build the character, and compute the factorized prefactor."""
    p = ParabolicGLN.maximal(N, n)
    if p.dim_u() % 2:
        raise OddDU(f"dim U_P = {p.dim_u()} is odd; no balanced element exists")
    if w is None:
        last = None
        for cand in (x for x in kostant_set(p) if is_balanced(x, p)):
            try:
                datum = balanced_datum(N, n, cand, lam)
                return datum, prefactor_product(p, chi_from(datum), w=cand)
            except (NotSelfDual, NotNegativeChamber) as exc:
                last = exc
        raise last if last is not None else NotBalanced("no balanced element exists")
    datum = balanced_datum(N, n, w, lam)
    return datum, prefactor_product(p, chi_from(datum), w=datum.w)


# ---------------------------------------------------------------------------
# rank-one chain cross-check


def cross_check_gl2_chain(p: ParabolicGLN, chi: Weight) -> bool:
    """Recompute the product through the dot-action transport: for each step k
    the prefix x_{k-1} drags the (deformed) character to the torus of the
    k-th simple reflection, where the rank-one eigenvalue is the GL(2)
    lowest-K-type value with z-parameter shifted by the transported integer.

    Structural equality of the canonical Gamma expressions checks that the
    closed per-factor data (c_k + h_k shift, parity eps_k) agrees with the
    honest transport (<beta_k^vee, chi> + <beta_k^vee - alpha_k^vee, rho>).
    """
    wf = wp_factorization(p)
    direct = GammaExpr.one()
    chain = GammaExpr.one()
    for k, (beta, r) in enumerate(zip(wf.betas, wf.word), start=1):
        fd_c = int(pairing(beta, chi))
        h = h_of_root(beta)
        eps = fd_c % 2
        fd = FactorData(k, beta, r, fd_c, h, eps, 0)
        direct = direct * factor_gamma(fd)
        # transport: dot action of x_{k-1}^{-1} on chi, restricted to (r, r+1)
        x = wf.prefixes[k - 1]
        dragged = dot_action(p.n, x.inverse(), chi)
        zparam = dragged.coords[r - 1] - dragged.coords[r]
        plain = x.inverse().act_weight(chi)
        parity = int(plain.coords[r - 1] - plain.coords[r]) % 2
        if parity != eps:
            return False
        step = T_st(CharacterGL2(None, Fraction(0), (parity, 0)), parity).shift_z(Fraction(zparam))
        chain = chain * step
    return direct.canonical() == chain.canonical()
