"""GL(2) Harish-Chandra modules over exact scalars.

Principal-series modules on the Phi basis indexed by K-types nu, the Lie
algebra action

    Y Phi_nu = i*nu Phi_nu,   P+ Phi_nu = (z+nu) Phi_{nu+2},
    P- Phi_nu = (z-nu) Phi_{nu-2},

submodule/exact-sequence detection, the standard intertwiner's K-type
eigenvalues as Gamma expressions, the composite scalar, the normalized
operator, and first relative Lie-algebra cohomology with the eta-action.

Coefficients live in Q(i) (algebraic case, z = l an integer) or in
Q(i)[z] (symbolic case, z = None).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gamma_algebra import GammaExpr
from .gaussian import GaussianRational
from .poly import Polynomial, RationalFunction

GR = GaussianRational
_I = GR(Fraction(0), Fraction(1))
_HALF = GR(Fraction(1, 2))
_MINUS_I_HALF = GR(Fraction(0), Fraction(-1, 2))


class ParityMismatch(ValueError):
    """K-type index has the wrong parity for the character."""


class ParityError(ValueError):
    """Character data violates the integrality/parity constraints."""


class ParityViolation(ParityError):
    pass


class NotNegative(ValueError):
    """invariant_submodule needs l <= 0; use the discrete-series check for l >= 0."""


LIE_OPS = ("H", "Y", "E+", "E-", "V", "P+", "P-")


@dataclass(frozen=True)
class CharacterGL2:
    """chi = (z, d, m): |t1/t2|^(z/2) |t1 t2|^d sgn(t1)^m1 sgn(t2)^m2.

    z is an integer in the algebraic case or None for the formal variable.
    """

    z: int | None
    d: Fraction
    m: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "d", Fraction(self.d))
        object.__setattr__(self, "m", (self.m[0] % 2, self.m[1] % 2))
        if self.z is not None and isinstance(self.z, int):
            l, d = self.z, self.d
            if (l - 2 * d) % 2 != 0:
                raise ParityError(f"l = {l} and d = {d} violate l = 2d (mod 2)")

    @staticmethod
    def algebraic(l: int, d) -> CharacterGL2:
        """The evaluation of the weight l*gamma_1 + d*delta; the sign data is
        forced: m1 = (l+2d)/2, m2 = (2d-l)/2 mod 2."""
        d = Fraction(d)
        if (l - 2 * d) % 2 != 0:
            raise ParityError(f"l = {l} and d = {d} violate l = 2d (mod 2)")
        m1 = int((l + 2 * d) / 2) % 2
        m2 = int((2 * d - l) / 2) % 2
        return CharacterGL2(l, d, (m1, m2))

    @staticmethod
    def symbolic(eps: int, d=Fraction(0)) -> CharacterGL2:
        return CharacterGL2(None, Fraction(d), (eps % 2, 0))

    @property
    def eps(self) -> int:
        """Parity of m1 + m2; K-types of the induced module are = eps mod 2."""
        return (self.m[0] + self.m[1]) % 2

    @property
    def a(self) -> int:
        """+1 when eps = 0, else -1."""
        return 1 if self.eps == 0 else -1


# ---------------------------------------------------------------------------
# K-type vectors and the Lie algebra action


@dataclass(frozen=True)
class KVector:
    """Finitely supported vector sum_nu c_nu Phi_nu; all nu = parity mod 2.

    z = None means coefficients are polynomials in z over Q(i), otherwise z is
    the integer parameter and coefficients are Gaussian rationals.
    """

    parity: int
    z: int | None
    coeffs: tuple  # sorted tuple of (nu, coefficient)

    @staticmethod
    def make(parity: int, z: int | None, items) -> KVector:
        merged = {}
        for nu, c in items:
            if (nu - parity) % 2:
                raise ParityMismatch(f"K-type {nu} does not match parity {parity}")
            if nu in merged:
                merged[nu] = merged[nu] + c
            else:
                merged[nu] = c
        return KVector(parity % 2, z, tuple(sorted((k, v) for k, v in merged.items() if v)))

    @staticmethod
    def basis(nu: int, z: int | None = None) -> KVector:
        one = _gpoly_const(GR(Fraction(1))) if z is None else GR(Fraction(1))
        return KVector.make(nu % 2, z, [(nu, one)])

    def __add__(self, other: KVector) -> KVector:
        return KVector.make(self.parity, self.z, list(self.coeffs) + list(other.coeffs))

    def scale(self, c) -> KVector:
        return KVector.make(self.parity, self.z, [(nu, _coef_mul(v, c)) for nu, v in self.coeffs])

    def __sub__(self, other: KVector) -> KVector:
        return self + other.scale(GR(Fraction(-1)))

    def support(self) -> tuple[int, ...]:
        return tuple(nu for nu, _ in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*Phi[{nu}]" for nu, c in self.coeffs)


def _gpoly_const(c: GR) -> Polynomial:
    return Polynomial.of([c])


def _coef_mul(a, b):
    return a * b


def _z_plus(nu: int, z: int | None):
    """The scalar (z + nu) in the right coefficient ring."""
    if z is None:
        return Polynomial.of([GR(Fraction(nu)), GR(Fraction(1))])
    return GR(Fraction(z + nu))


def _z_minus(nu: int, z: int | None):
    if z is None:
        return Polynomial.of([GR(Fraction(-nu)), GR(Fraction(1))])
    return GR(Fraction(z - nu))


def act(op: str, v: KVector) -> KVector:
    """Apply a Lie algebra generator; raising/lowering steps extend the
    support, so the operation is total on finitely supported vectors."""
    z = v.z
    if op == "Y":
        items = [(nu, _coef_mul(c, _i_scalar(nu, z))) for nu, c in v.coeffs]
        return KVector.make(v.parity, z, items)
    if op == "P+":
        return KVector.make(v.parity, z, [(nu + 2, _coef_mul(c, _z_plus(nu, z))) for nu, c in v.coeffs])
    if op == "P-":
        return KVector.make(v.parity, z, [(nu - 2, _coef_mul(c, _z_minus(nu, z))) for nu, c in v.coeffs])
    if op == "H":
        return (act("P+", v) + act("P-", v)).scale(_HALF)
    if op == "V":
        return (act("P+", v) - act("P-", v)).scale(_MINUS_I_HALF)
    if op == "E+":
        return (act("V", v) + act("Y", v)).scale(_HALF)
    if op == "E-":
        return (act("V", v) - act("Y", v)).scale(_HALF)
    raise ValueError(f"unknown Lie operator {op!r}")


def _i_scalar(nu: int, z: int | None):
    c = GR(Fraction(0), Fraction(nu))
    return _gpoly_const(c) if z is None else c


# matrices over Q(i) for the bracket check -------------------------------

_MATS = {
    "H": (GR(1), GR(0), GR(0), GR(-1)),
    "E+": (GR(0), GR(1), GR(0), GR(0)),
    "E-": (GR(0), GR(0), GR(1), GR(0)),
    "V": (GR(0), GR(1), GR(1), GR(0)),
    "Y": (GR(0), GR(1), GR(-1), GR(0)),
    "P+": (GR(1), _I, _I, GR(-1)),
    "P-": (GR(1), -_I, -_I, GR(-1)),
}


def _mat_mul(a, b):
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def _mat_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def act_matrix(m, v: KVector) -> KVector:
    """Apply a traceless 2x2 matrix a*H + b*E+ + c*E- over Q(i)."""
    if m[0] + m[3]:
        raise ValueError("matrix is not traceless")
    out = act("H", v).scale(m[0]) + act("E+", v).scale(m[1]) + act("E-", v).scale(m[2])
    return out


def bracket_check(op1: str, op2: str, v: KVector) -> bool:
    """[op1, op2] acts as op1 op2 - op2 op1 (representation axiom)."""
    bracket = _mat_sub(_mat_mul(_MATS[op1], _MATS[op2]), _mat_mul(_MATS[op2], _MATS[op1]))
    lhs = act_matrix(bracket, v)
    rhs = act(op1, act(op2, v)) - act(op2, act(op1, v))
    return lhs == rhs


# ---------------------------------------------------------------------------
# exact sequences


def invariant_submodule(l: int, d=Fraction(0)) -> tuple[int, tuple[int, ...]]:
    """For l <= 0, verify span{Phi_nu : l <= nu <= -l} is closed under the full
    Lie algebra action (P+ kills Phi_{-l}, P- kills Phi_l), and that the
    quotient splits into a raising-closed and a lowering-closed half.

    Returns (dimension, K-types); dimension = -l + 1.
    """
    if l > 0:
        raise NotNegative("invariant_submodule needs l <= 0; see discrete_series_split")
    ktypes = tuple(range(l, -l + 1, 2))
    inside = set(ktypes)
    for op in LIE_OPS:
        for nu in ktypes:
            img = act(op, KVector.basis(nu, z=l))
            if not set(img.support()) <= inside:
                raise AssertionError(f"{op} leaves the span at Phi_{nu}")
    # quotient splits: each half is closed modulo the submodule
    probes = range(-l + 2, -l + 2 * (abs(l) + 6), 2)
    for op in LIE_OPS:
        for nu in probes:
            up = act(op, KVector.basis(nu, z=l))
            if not all(s >= -l + 2 or s in inside for s in up.support()):
                raise AssertionError("raising half is not closed modulo the submodule")
            down = act(op, KVector.basis(-nu, z=l))
            if not all(s <= l - 2 or s in inside for s in down.support()):
                raise AssertionError("lowering half is not closed modulo the submodule")
    return -l + 1, ktypes


def discrete_series_split(l: int, d=Fraction(0), probe: int = 6) -> bool:
    """For l >= 0, check D+ (+) D- = span{|nu| >= l+2} is a submodule of the
    module with parameter l+2: P- kills Phi_{l+2} and P+ kills Phi_{-l-2}."""
    if l < 0:
        raise ValueError("discrete_series_split needs l >= 0")
    zparam = l + 2
    if act("P-", KVector.basis(l + 2, z=zparam)):
        return False
    if act("P+", KVector.basis(-l - 2, z=zparam)):
        return False
    for op in LIE_OPS:
        for k in range(probe):
            for nu in (l + 2 + 2 * k, -l - 2 - 2 * k):
                img = act(op, KVector.basis(nu, z=zparam))
                if not all(abs(s) >= l + 2 for s in img.support()):
                    return False
    return True


# ---------------------------------------------------------------------------
# the standard intertwining operator


def tst_base(eps: int) -> GammaExpr:
    """Eigenvalue on the lowest K-type Phi_eps:
    Gamma((z+eps-1)/2) Gamma(1/2) / Gamma((z+eps)/2)."""
    eps %= 2
    return (
        GammaExpr.gamma(Fraction(eps - 1, 2))
        * GammaExpr.sqrt_pi()
        * GammaExpr.gamma(Fraction(eps, 2), exp=-1)
    ).canonical()


def T_st(chi: CharacterGL2, nu: int) -> GammaExpr:
    """Eigenvalue of the standard intertwiner on Phi_nu, as a GammaExpr in z.

    For nu = eps + 2k (k >= 0) the raising recursion gives the prefactor
    prod_j (2 - z + eps + 2j) / (z + eps + 2j), j < k; for nu < 0 the mirrored
    lowering recursion gives the same prefactor with an extra (-1)^eps.
    For an algebraic character the expression is shifted so z = 0 is the
    evaluation point.
    """
    eps = chi.eps
    if (nu - eps) % 2:
        raise ParityMismatch(f"K-type {nu} has the wrong parity for eps = {eps}")
    expr = tst_base(eps)
    k = (abs(nu) - eps) // 2
    for j in range(k):
        num = Polynomial.linear(Fraction(2 + eps + 2 * j), Fraction(-1))
        den = Polynomial.linear(Fraction(eps + 2 * j), Fraction(1))
        expr = expr * GammaExpr.of_prefactor(RationalFunction.make(num, den))
    if nu < 0 and eps == 1:
        expr = expr * GammaExpr.of_prefactor(Fraction(-1))
    if chi.z is not None:
        expr = expr.shift_z(chi.z)
    return expr.canonical()


def poles_of_tst(d, m: tuple[int, int], window: int, nus=None) -> list[int]:
    """Integer z0 in [-window, window] where some (equivalently, every) tested
    K-type eigenvalue has a pole.  Asserts all poles are simple and that the
    pole set does not depend on nu."""
    eps = (m[0] + m[1]) % 2
    if nus is None:
        nus = (eps, eps + 2, eps - 2, eps + 6, eps - 6)
    chi = CharacterGL2(None, Fraction(d), m)
    pole_sets = []
    for nu in nus:
        expr = T_st(chi, nu)
        poles = []
        for z0 in range(-window, window + 1):
            order = expr.order_at(z0)
            if order < 0:
                if order != -1:
                    raise AssertionError(f"pole of order {-order} at z = {z0}")
                poles.append(z0)
        pole_sets.append(sorted(poles, reverse=True))
    if any(s != pole_sets[0] for s in pole_sets):
        raise AssertionError("pole set depends on the K-type")
    return pole_sets[0]


def Lambda(chi: CharacterGL2) -> GammaExpr:
    """The scalar through which the two opposite standard intertwiners
    compose, as a Gamma-quotient:

        Gamma((z-1+eps)/2) Gamma((1-z+eps)/2)
        -------------------------------------
        Gamma((z+eps)/2)  Gamma((2-z+eps)/2)

    Note composite_check: the literal operator composite carries an extra
    Gamma(1/2)^2 = pi from the two integral normalizations.
    """
    eps = chi.eps
    e = (
        GammaExpr.gamma(Fraction(eps - 1, 2), sign=1)
        * GammaExpr.gamma(Fraction(eps + 1, 2), sign=-1)
        * GammaExpr.gamma(Fraction(eps, 2), sign=1, exp=-1)
        * GammaExpr.gamma(Fraction(eps + 2, 2), sign=-1, exp=-1)
    )
    return e.canonical()


def lambda_closed_form(eps: int, z: float) -> float:
    """Float check value: (-1)^eps * (2/(z-1)) * tan(pi z/2)^(+-1), with
    exponent +1 for eps = 0 and -1 for eps = 1 (reflection-formula
    computation; the sign makes the Gamma-quotient and the trig form agree
    for both parities)."""
    import math

    t = math.tan(math.pi * z / 2.0)
    a = 1 if eps % 2 == 0 else -1
    return ((-1) ** (eps % 2)) * (2.0 / (z - 1.0)) * (t if a == 1 else 1.0 / t)


def composite_check(chi: CharacterGL2, nu_window: int = 10) -> bool:
    """T_st(chi^dagger, nu) * T_st(chi, nu) equals pi * Lambda(chi) (the
    dagger side is the substitution z -> 2 - z), for every admissible
    |nu| <= nu_window.  The K-type dependence cancels completely."""
    eps = chi.eps
    target = Lambda(chi) * GammaExpr.sqrt_pi(2)
    sym = CharacterGL2(None, chi.d, chi.m)
    for nu in range(-nu_window, nu_window + 1):
        if (nu - eps) % 2:
            continue
        product = T_st(sym, nu).reflect() * T_st(sym, nu)
        if product.canonical() != target:
            return False
    return True


def T_norm(chi: CharacterGL2, nu: int) -> GammaExpr:
    """T_st divided by Gamma((z + eps - 1)/2): holomorphic at every z.

    (The divisor is the Gamma factor carrying all poles of T_st; dividing by
    it leaves rational-linear factors times Gamma(1/2)/Gamma((z+eps)/2 + k).)
    """
    eps = chi.eps
    divisor = GammaExpr.gamma(Fraction(eps - 1, 2))
    expr = T_st(CharacterGL2(None, chi.d, chi.m), nu) * divisor.inv()
    if chi.z is not None:
        expr = expr.shift_z(chi.z)
    return expr.canonical()


# ---------------------------------------------------------------------------
# algebraic intertwiners and the comparison constants


def t_alg_plus(l: int, nu: int) -> Fraction:
    """Eigenvalue of the algebraic operator I[l+2] -> I[-l] normalized to 1 on
    Phi_l; supported on |nu| <= l (it factors through the finite quotient)."""
    if abs(nu) > l or (nu - l) % 2:
        return Fraction(0)
    val = Fraction(1)
    k = l
    while k > nu:  # descend with P-
        val = val * Fraction(-l - k, l + 2 - k)
        k -= 2
    return val


def t_alg_minus(l: int, nu: int) -> Fraction:
    """Eigenvalue of the algebraic operator I[-l] -> I[l+2] normalized to 1 on
    Phi_{l+2}; supported on |nu| >= l+2 and zero on the finite block."""
    if abs(nu) < l + 2 or (nu - l) % 2:
        return Fraction(0)
    val = Fraction(1)
    if nu >= l + 2:
        k = l + 2
        while k < nu:  # ascend with P+
            val = val * Fraction(k + l + 2, k - l)
            k += 2
    else:
        val = t_alg_minus(l, -nu)  # lowering mirror
    return val


@dataclass(frozen=True)
class ComparisonConstants:
    """Ratios T_st/T_alg at the cohomological points, on the normalizing
    K-types, together with the classical displayed constants."""

    l: int
    eps: int
    plus_expr: GammaExpr  # T_st at z-parameter l+2, K-type l (shifted to 0)
    minus_expr: GammaExpr  # T_st at z-parameter -l, K-type l+2 (shifted to 0)
    computed_plus: tuple[int, Fraction]
    computed_minus: tuple[int, Fraction]
    displayed_plus: tuple[int, Fraction]
    displayed_minus: tuple[int, Fraction]


def compare_constants(l: int, d=None) -> ComparisonConstants:
    """Compare the standard and algebraic intertwiners on their normalizing
    K-types (Phi_l for the finite-quotient direction, Phi_{l+2} for the
    discrete-series direction).

    The classical displayed constants pi*2^((3l-eps)/2)*(-1)^((l-eps)/2) and
    pi*2^(-(l+2-eps)/2)*(-1)^((l-eps)/2) follow a different power-of-2
    normalization; both the direct evaluation and the displayed values are
    reported so the conventions can be inspected side by side.
    """
    if l < 0:
        raise ValueError("l >= 0 required")
    if d is None:
        d = Fraction(l, 2)
    chi = CharacterGL2.algebraic(l, d)
    eps = chi.eps
    sym = CharacterGL2(None, chi.d, chi.m)
    plus = T_st(sym, l).shift_z(l + 2)
    minus = T_st(sym, l + 2).shift_z(-l)
    exp2 = Fraction(3 * l - eps, 2)
    displayed_plus = (2, Fraction(2) ** exp2 * (-1) ** ((l - eps) // 2))
    displayed_minus = (2, Fraction(2) ** (-Fraction(l + 2 - eps, 2)) * (-1) ** ((l - eps) // 2))
    return ComparisonConstants(
        l,
        eps,
        plus,
        minus,
        plus.eval_at_zero(),
        minus.eval_at_zero(),
        displayed_plus,
        displayed_minus,
    )


def tst_talg_ratio_constant(l: int, direction: str = "plus") -> tuple[int, Fraction]:
    """Verify T_st is proportional to T_alg across K-types and return the
    constant.  direction 'plus': z-parameter l+2 on |nu| <= l; 'minus':
    z-parameter -l on |nu| >= l+2."""
    sym = CharacterGL2(None, Fraction(l, 2), CharacterGL2.algebraic(l, Fraction(l, 2)).m)
    if direction == "plus":
        nus = range(-l, l + 1, 2)
        shift, t_alg = l + 2, t_alg_plus
    else:
        nus = list(range(l + 2, l + 9, 2)) + list(range(-l - 8, -l - 1, 2))
        shift, t_alg = -l, t_alg_minus
    ratios = set()
    for nu in nus:
        if (nu - l) % 2:
            continue
        val = T_st(sym, nu).shift_z(shift).eval_at_zero()
        t = t_alg(l, nu)
        ratios.add((val[0], val[1] / t))
    if len(ratios) != 1:
        raise AssertionError(f"T_st/T_alg is not constant: {ratios}")
    return next(iter(ratios))


# ---------------------------------------------------------------------------
# H^1 cohomology with coefficients in the weight-l module


@dataclass(frozen=True)
class CohomClassGL2:
    """A 1-cochain P(+-)^vee (x) Phi_{d,nu} (x) e_mu (rank one here)."""

    label: str  # "Omega", "Omega-bar", "omega(1)", "omega(2)"
    components: tuple  # of (dual: '+'|'-', nu: int, mu: int, coeff: GaussianRational)

    def __str__(self) -> str:
        terms = " + ".join(
            f"({c})*P{dual}^v(x)Phi[{nu}](x)e[{mu}]" for dual, nu, mu, c in self.components
        )
        return f"{self.label} = {terms}"


@dataclass(frozen=True)
class H1Report:
    l: int
    d: Fraction
    dims: tuple[int, int, int]  # Hom dimensions in degrees 0, 1, 2
    classes: tuple[CohomClassGL2, CohomClassGL2]
    omega_classes: tuple[CohomClassGL2, CohomClassGL2]
    eta_signs: tuple[int, int]


def h1_cohomology(l: int, d) -> H1Report:
    """Weight-matching computation of the degree-1 Hom space for the discrete
    series tensored with the weight-l coefficient module.

    The compact torus acts with weight -+2 on P(+-)^vee, nu on Phi_nu and mu
    on e_mu; a cochain is invariant iff the total weight vanishes.  Degrees 0
    and 2 carry total weight nu + mu which never vanishes, so the complex
    equals its cohomology.  The eta-signs on omega(1) = Omega + Omega-bar and
    omega(2) = i(Omega - Omega-bar) are (-1)^((2d-l)/2) and its negative.
    """
    if l < 0:
        raise ValueError("l >= 0 required")
    d = Fraction(d)
    if (2 * d - l) % 2 != 0:
        raise ParityViolation(f"2d = {2 * d} and l = {l} must agree mod 2")
    window = l + 8
    dseries = [nu for nu in range(-window, window + 1) if abs(nu) >= l + 2 and (nu - l) % 2 == 0]
    weights_m = range(-l, l + 1, 2)
    deg1 = [
        (dual, nu, mu)
        for dual, wdual in (("+", -2), ("-", 2))
        for nu in dseries
        for mu in weights_m
        if wdual + nu + mu == 0
    ]
    deg02 = [(nu, mu) for nu in dseries for mu in weights_m if nu + mu == 0]
    if sorted(deg1) != sorted([("+", l + 2, -l), ("-", -l - 2, l)]):
        raise AssertionError(f"unexpected degree-1 matches: {deg1}")
    one = GR(Fraction(1))
    omega = CohomClassGL2("Omega", (("+", l + 2, -l, one),))
    omega_bar = CohomClassGL2("Omega-bar", (("-", -l - 2, l, one),))
    w1 = CohomClassGL2("omega(1)", (("+", l + 2, -l, one), ("-", -l - 2, l, one)))
    w2 = CohomClassGL2("omega(2)", (("+", l + 2, -l, _I), ("-", -l - 2, l, -_I)))
    sign = (-1) ** int((2 * d - l) / 2 % 2)
    return H1Report(
        l,
        d,
        (len(deg02), len(deg1), len(deg02)),
        (omega, omega_bar),
        (w1, w2),
        (sign, -sign),
    )


def eta_on_class(cls: CohomClassGL2, l: int, d) -> CohomClassGL2:
    """eta sends P(+-)^vee -> P(-+)^vee, Phi_nu -> Phi_{-nu} and
    e_mu -> (-1)^((2d-l)/2) e_{-mu}."""
    d = Fraction(d)
    sign = GR(Fraction((-1) ** int((2 * d - l) / 2 % 2)))
    flipped = tuple(
        ("-" if dual == "+" else "+", -nu, -mu, c * sign) for dual, nu, mu, c in cls.components
    )
    return CohomClassGL2(cls.label, tuple(sorted(flipped, key=lambda t: t[:3])))
