"""Batch verification suites behind the `verify` subcommand.

Each suite returns a list of (name, ok, detail) rows; a suite passes when
every row does.  The suites are trimmed-down versions of the pytest
acceptance tests, sized to run in a few seconds each.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import factorize as fz
from . import gl2, numeric, spectral
from .gamma_algebra import GammaExpr
from .gaussian import GaussianRational
from .poly import Polynomial, RationalFunction
from .weyl import (
    ParabolicGLN,
    Weight,
    complement,
    is_balanced,
    kostant_set,
    wp_factorization,
)

CheckRow = tuple[str, bool, str]


def _random_gamma_expr(rng: random.Random) -> GammaExpr:
    expr = GammaExpr.one()
    for _ in range(rng.randint(1, 4)):
        shift = Fraction(rng.randint(-9, 9), 2)
        sign = rng.choice((1, -1))
        exp = rng.choice((-2, -1, 1, 2))
        expr = expr * GammaExpr.gamma(shift, sign=sign, exp=exp)
    num = Polynomial.of([Fraction(rng.randint(-3, 3)) for _ in range(3)] + [Fraction(1)])
    expr = expr * GammaExpr.of_prefactor(RationalFunction.of(num), pi_half=rng.randint(-2, 2))
    return expr


def _safe_z(rng: random.Random) -> float:
    # stay away from half-integers where a Gamma argument could hit a pole
    return rng.uniform(1.05, 5.95) + 0.011


def suite_arith(rng: random.Random | None = None) -> list[CheckRow]:
    rng = rng or random.Random(20240901)
    rows: list[CheckRow] = []
    worst = 0.0
    ok = True
    for _ in range(30):
        e = _random_gamma_expr(rng)
        c = e.canonical()
        if c.canonical() != c:
            ok = False
            break
        for _ in range(4):
            z = _safe_z(rng)
            try:
                a = numeric.ge_eval_numeric(e, z)
                b = numeric.ge_eval_numeric(c, z)
            except numeric.PoleArgument:
                continue
            rel = abs(a - b) / max(abs(a), 1e-300)
            worst = max(worst, rel)
            if rel > 1e-9:
                ok = False
    rows.append(("canonicalization preserves value / idempotent", ok, f"max rel err {worst:.2e}"))

    rows.append(
        (
            "Gamma(1/2)^2 = pi",
            (GammaExpr.sqrt_pi() * GammaExpr.sqrt_pi()).canonical()
            == GammaExpr.of_prefactor(1, pi_half=2),
            "",
        )
    )
    prods_ok = True
    for _ in range(20):
        a, b, c = (_random_gamma_expr(rng).canonical() for _ in range(3))
        if (a * b) != (b * a) or ((a * b) * c) != (a * (b * c)):
            prods_ok = False
    rows.append(("product commutative/associative", prods_ok, ""))

    conj_ok = True
    for _ in range(30):
        x = GaussianRational(Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        y = GaussianRational(Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        if x.conjugate().conjugate() != x or (x * y).conjugate() != x.conjugate() * y.conjugate():
            conj_ok = False
    rows.append(("Gaussian conjugation is a ring involution", conj_ok, ""))

    rf_ok = True
    for _ in range(20):
        p = Polynomial.of([Fraction(rng.randint(-4, 4)) for _ in range(3)] + [Fraction(1)])
        q = Polynomial.of([Fraction(rng.randint(-4, 4)) for _ in range(2)] + [Fraction(1)])
        r = Polynomial.of([Fraction(rng.randint(-4, 4)), Fraction(1)])
        if RationalFunction.make(p * r, q * r) != RationalFunction.make(p, q):
            rf_ok = False
    rows.append(("rational function normalization cancels common factors", rf_ok, ""))
    return rows


def _gaussian_binomial(n: int, k: int) -> list[int]:
    # coefficient list of the Gaussian binomial [n choose k]_q
    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def one_minus_q_pow(m):
        out = [0] * (m + 1)
        out[0], out[m] = 1, -1
        return out

    num = [1]
    for i in range(1, k + 1):
        num = poly_mul(num, one_minus_q_pow(n - k + i))
    den = [1]
    for i in range(1, k + 1):
        den = poly_mul(den, one_minus_q_pow(i))
    # exact division
    quot = [0] * (len(num) - len(den) + 1)
    num = list(num)
    for d in range(len(quot) - 1, -1, -1):
        c = num[d + len(den) - 1] // den[-1]
        quot[d] = c
        for j, y in enumerate(den):
            num[d + j] -= c * y
    assert not any(num)
    return quot


def suite_weyl(max_n: int = 6) -> list[CheckRow]:
    rows: list[CheckRow] = []
    counts_ok = True
    for n in range(2, max_n + 1):
        for k in range(1, n):
            p = ParabolicGLN.maximal(n, k)
            ks = kostant_set(p)
            if len(ks) != math.comb(n, k):
                counts_ok = False
            hist: dict[int, int] = {}
            for w in ks:
                hist[w.length()] = hist.get(w.length(), 0) + 1
            gb = _gaussian_binomial(n, k)
            if [hist.get(i, 0) for i in range(len(gb))] != gb:
                counts_ok = False
    rows.append((f"|W^P| = C(N,n) and lengths = Gaussian binomial (N<={max_n})", counts_ok, ""))

    beta_ok = True
    for n in range(2, max_n + 1):
        for k in range(1, n):
            p = ParabolicGLN.maximal(n, k)
            wf = wp_factorization(p)
            if sorted(wf.betas) != p.unipotent_roots():
                beta_ok = False
            for i in range(len(wf.word)):
                if wf.prefixes[i].act_root((wf.word[i], wf.word[i] + 1)) != wf.betas[i]:
                    beta_ok = False
                if wf.prefixes[i + 1].inversion_set() != set(wf.betas[: i + 1]):
                    beta_ok = False
    rows.append((f"beta-sequence invariants (N<={max_n})", beta_ok, ""))

    comp_ok = True
    for n in range(2, max_n + 1):
        for k in range(1, n):
            p = ParabolicGLN.maximal(n, k)
            q = ParabolicGLN.maximal(n, n - k)
            for w in kostant_set(p):
                wp = complement(w, p)
                if w.length() + wp.length() != p.dim_u():
                    comp_ok = False
                if complement(wp, q) != w:
                    comp_ok = False
    rows.append((f"complement lengths and involution (N<={max_n})", comp_ok, ""))

    evenh_ok = True
    for n in range(2, 9):
        for k in range(1, n):
            if (k * (n - k)) % 2:
                continue
            wf = wp_factorization(ParabolicGLN.maximal(n, k))
            evens = sum(1 for b in wf.betas if (b[1] - b[0] - 1) % 2 == 0)
            if evens != k * (n - k) // 2:
                evenh_ok = False
    rows.append(("even height-gap count = d_U/2 when n*n' even (N<=8)", evenh_ok, ""))
    return rows


def suite_gl2() -> list[CheckRow]:
    rows: list[CheckRow] = []
    rng = random.Random(11)
    chi0 = gl2.CharacterGL2.symbolic(0)
    chi1 = gl2.CharacterGL2.symbolic(1)
    rows.append(("composite = pi * Lambda (eps=0, |nu|<=8)", gl2.composite_check(chi0, 8), ""))
    rows.append(("composite = pi * Lambda (eps=1, |nu|<=7)", gl2.composite_check(chi1, 7), ""))
    rows.append(
        ("Lambda(1/2) = -4 exactly", gl2.Lambda(chi0).eval_at(Fraction(1, 2)) == (0, Fraction(-4)), "")
    )
    worst = 0.0
    for eps, chi in ((0, chi0), (1, chi1)):
        lam = gl2.Lambda(chi)
        for _ in range(10):
            z = rng.uniform(0.12, 5.9)
            if abs(z - round(z)) < 0.05:
                continue
            a = numeric.ge_eval_numeric(lam, z)
            b = gl2.lambda_closed_form(eps, z)
            worst = max(worst, abs(a - b) / abs(b))
    rows.append(("Lambda matches the trig closed form", worst < 1e-8, f"max rel err {worst:.2e}"))
    rows.append(
        ("pole sets", gl2.poles_of_tst(0, (0, 0), 5) == [1, -1, -3, -5]
         and gl2.poles_of_tst(0, (1, 0), 5) == [0, -2, -4], "")
    )
    seq_ok = True
    for l in (0, -2, -4):
        dim, kt = gl2.invariant_submodule(l)
        if dim != -l + 1:
            seq_ok = False
    for l in (0, 2, 4):
        if not gl2.discrete_series_split(l):
            seq_ok = False
    rows.append(("exact sequences", seq_ok, ""))
    h1 = gl2.h1_cohomology(2, 1)
    rows.append(("H^1 rank 2, degrees 0/2 empty, signs", h1.dims == (0, 2, 0) and h1.eta_signs == (1, -1), ""))
    br_ok = True
    for _ in range(25):
        op1, op2 = rng.choice(gl2.LIE_OPS), rng.choice(gl2.LIE_OPS)
        nu = rng.randint(-8, 8)
        if not gl2.bracket_check(op1, op2, gl2.KVector.basis(nu)):
            br_ok = False
    rows.append(("Lie bracket representation axiom (symbolic z)", br_ok, ""))
    tn_ok = True
    for eps in (0, 1):
        chi = gl2.CharacterGL2.symbolic(eps)
        for nu in (eps, eps + 2, eps + 4, -eps - 2):
            tn = gl2.T_norm(chi, nu)
            for z0 in range(-10, 11):
                if tn.order_at(z0) < 0:
                    tn_ok = False
    rows.append(("normalized operator has no integer poles", tn_ok, ""))
    return rows


def suite_spectral(rng: random.Random | None = None) -> list[CheckRow]:
    rng = rng or random.Random(5)
    rows: list[CheckRow] = []
    b_ok = all(spectral.b_lowest(n) == n * n // 4 for n in range(2, 13))
    rows.append(("b_n = floor(n^2/4) = floor(n/2)+l(w_un), n<=12", b_ok, ""))
    cusp_ok = True
    for _ in range(25):
        n = rng.randint(2, 8)
        half = [rng.randint(0, 4) for _ in range(n // 2)]
        a = (half + half[::-1])[: n - 1] if n % 2 == 1 else half + half[-2::-1]
        d = Fraction(sum(a) % 2, 2)
        try:
            spectral.spectral_params(a, d, n, strict=False)
        except AssertionError:
            cusp_ok = False
    rows.append(("cuspidal closed forms = dot action (random self-dual)", cusp_ok, ""))
    uc_ok = True
    for n in range(2, 7):
        a = [1] * (n - 1)
        d = Fraction(sum(a) % 2, 2)
        hist = spectral.u_cohomology_degrees(a, d, n)
        if set(hist) != {spectral.w_un(n).length()}:
            uc_ok = False
        if sum(hist.values()) != math.factorial(n // 2):
            uc_ok = False
    rows.append(("u-cohomology matches concentrate in degree l(w_un)", uc_ok, ""))
    rows.append(
        ("eta sign flips with d -> d+1", spectral.eta_sign(2, 1) == -spectral.eta_sign(2, 0), "")
    )
    return rows


def suite_factor() -> list[CheckRow]:
    rows: list[CheckRow] = []
    lam3 = Weight.zero(3)
    ok3 = True
    for n in (1, 2):
        datum, rep = fz.factorize(3, n, lam3)
        if rep.pi_half != 2 or rep.rational_value != Fraction(-4, 3) or rep.order_at_zero != 0:
            ok3 = False
        if not fz.cross_check_gl2_chain(ParabolicGLN.maximal(3, n), rep.chi):
            ok3 = False
    rows.append(("GL(3) factorization (both parabolics) and rank-one chain", ok3, ""))
    datum, rep = fz.factorize(5, 2, Weight.zero(5))
    rows.append(
        ("GL(5) n=2: pi^(d_U/2) with nonzero rational",
         rep.pi_half == 6 and rep.rational_value != 0 and rep.even_h_count == 3, str(rep.rational_value))
    )
    sweep_ok = True
    count = 0
    for N in (3, 5, 7):
        for n in range(1, N):
            p = ParabolicGLN.maximal(N, n)
            for w in (x for x in kostant_set(p) if is_balanced(x, p)):
                try:
                    datum = fz.balanced_datum(N, n, w, Weight.zero(N))
                except (fz.NotSelfDual, fz.NotNegativeChamber):
                    continue
                rep = fz.prefactor_product(p, fz.chi_from(datum), w=w)
                if rep.pi_half != rep.d_U or rep.rational_value == 0 or rep.even_h_count != rep.d_U // 2:
                    sweep_ok = False
                count += 1
    rows.append((f"pi-power sweep at the trivial weight ({count} reports)", sweep_ok, ""))
    return rows


def suite_numeric(rng: random.Random | None = None) -> list[CheckRow]:
    rng = rng or random.Random(3)
    rows: list[CheckRow] = []
    worst = 0.0
    for _ in range(100):
        x = rng.uniform(0.1, 20.0)
        rel = abs(numeric.gamma_num(x + 1.0) - x * numeric.gamma_num(x)) / numeric.gamma_num(x + 1.0)
        worst = max(worst, rel)
    rows.append(("Gamma(x+1) = x Gamma(x)", worst < 1e-11, f"max rel err {worst:.2e}"))
    worst = 0.0
    for _ in range(100):
        x = rng.uniform(-5.0, 5.0)
        if abs(x - round(x)) < 1e-2:
            continue
        val = numeric.gamma_num(x) * numeric.gamma_num(1.0 - x) * math.sin(math.pi * x) / math.pi
        worst = max(worst, abs(val - 1.0))
    rows.append(("reflection formula", worst < 1e-9, f"max rel err {worst:.2e}"))
    anchor1 = abs(numeric.intertwine_quadrature(4.0).real - math.pi / 2)
    anchor2 = abs(numeric.intertwine_quadrature(3.0).real - 2.0)
    rows.append(("anchor integrals pi/2 and 2", anchor1 < 1e-8 and anchor2 < 1e-8, f"{anchor1:.2e}, {anchor2:.2e}"))
    worst = 0.0
    for z in (2.5, 4.0):
        for nu in (0, 2, -2, 4, -4, 1, -1):
            q, s = numeric.quadrature_vs_symbolic(z, nu)
            err = abs(q - s) / max(abs(s), 1e-9)
            worst = max(worst, err)
    rows.append(("quadrature vs Gamma formula", worst < 1e-6, f"max rel err {worst:.2e}"))
    val = numeric.gl3_spherical_quadrature(4.0, 2.0, -2.0)
    expected = numeric.beta_integral(2.0) * numeric.beta_integral(5.0)
    rel = abs(val - expected) / expected
    rows.append(("GL(3) double integral vs closed form", rel < 1e-8, f"rel err {rel:.2e}"))
    return rows


SUITES = {
    "arith": suite_arith,
    "weyl": suite_weyl,
    "gl2": suite_gl2,
    "spectral": suite_spectral,
    "factor": suite_factor,
    "numeric": suite_numeric,
}


def run_suite(name: str) -> list[CheckRow]:
    if name == "all":
        rows: list[CheckRow] = []
        for key in SUITES:
            rows.extend((f"{key}: {n}", ok, detail) for n, ok, detail in SUITES[key]())
        return rows
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
