import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcz import gl2
from hcz.gamma_algebra import GammaExpr
from hcz.gaussian import GaussianRational
from hcz.numeric import ge_eval_numeric


class TestCharacter:
    def test_algebraic_parities(self):
        chi = gl2.CharacterGL2.algebraic(2, 1)
        assert chi.m == (0, 0) and chi.eps == 0 and chi.a == 1
        chi = gl2.CharacterGL2.algebraic(3, Fraction(1, 2))
        assert chi.eps == 1 and chi.a == -1

    def test_parity_error(self):
        with pytest.raises(gl2.ParityError):
            gl2.CharacterGL2.algebraic(3, 0)


class TestAction:
    def test_raising_lowering_at_l2(self):
        v = gl2.act("P+", gl2.KVector.basis(2, z=2))
        assert v.coeffs == ((4, GaussianRational(Fraction(4))),)
        assert not gl2.act("P-", gl2.KVector.basis(2, z=2))
        assert not gl2.act("Y", gl2.KVector.basis(0, z=2))

    def test_y_is_diagonal_multiplication_by_inu(self):
        v = gl2.act("Y", gl2.KVector.basis(4, z=0))
        assert v.coeffs == ((4, GaussianRational(Fraction(0), Fraction(4))),)

    @pytest.mark.parametrize("op1,op2", [("H", "E+"), ("P+", "P-"), ("Y", "Y"), ("V", "E-")])
    def test_named_brackets(self, op1, op2):
        assert gl2.bracket_check(op1, op2, gl2.KVector.basis(3))

    def test_bracket_window(self):
        for op1, op2 in itertools.product(gl2.LIE_OPS, repeat=2):
            for nu in range(-8, 9, 2):
                assert gl2.bracket_check(op1, op2, gl2.KVector.basis(nu))

    def test_algebraic_case_bracket(self):
        assert gl2.bracket_check("H", "E+", gl2.KVector.basis(2, z=4))


class TestExactSequences:
    @pytest.mark.parametrize("l,dim", [(0, 1), (-2, 3), (-4, 5), (-6, 7)])
    def test_invariant_submodule(self, l, dim):
        got_dim, ktypes = gl2.invariant_submodule(l)
        assert got_dim == dim
        assert ktypes == tuple(range(l, -l + 1, 2))

    def test_rejects_positive(self):
        with pytest.raises(gl2.NotNegative):
            gl2.invariant_submodule(2)

    @pytest.mark.parametrize("l", [0, 2, 4])
    def test_discrete_series_split(self, l):
        assert gl2.discrete_series_split(l)


class TestIntertwiner:
    def test_lowest_ktype_values(self):
        chi0 = gl2.CharacterGL2.symbolic(0)
        assert gl2.T_st(chi0, 0).eval_at(4) == (2, Fraction(1, 2))  # pi/2
        chi1 = gl2.CharacterGL2.symbolic(1)
        assert gl2.T_st(chi1, 1).eval_at(3) == (2, Fraction(1, 2))

    def test_recursion_prefactor(self):
        chi0 = gl2.CharacterGL2.symbolic(0)
        base, up = gl2.T_st(chi0, 0), gl2.T_st(chi0, 2)
        # ratio (2-z)/z: compare numerically at z = 5
        a, b = ge_eval_numeric(base, 5.0), ge_eval_numeric(up, 5.0)
        assert b == pytest.approx(a * (2 - 5.0) / 5.0, rel=1e-12)

    def test_mirror_sign(self):
        chi1 = gl2.CharacterGL2.symbolic(1)
        plus = ge_eval_numeric(gl2.T_st(chi1, 3), 4.2)
        minus = ge_eval_numeric(gl2.T_st(chi1, -3), 4.2)
        assert minus == pytest.approx(-plus, rel=1e-12)
        chi0 = gl2.CharacterGL2.symbolic(0)
        assert gl2.T_st(chi0, -4) == gl2.T_st(chi0, 4)

    def test_parity_mismatch(self):
        with pytest.raises(gl2.ParityMismatch):
            gl2.T_st(gl2.CharacterGL2.symbolic(0), 3)

    def test_never_zero(self):
        for eps in (0, 1):
            chi = gl2.CharacterGL2.symbolic(eps)
            for nu in range(eps - 10, 11, 2):
                assert gl2.T_st(chi, nu).prefactor

    @pytest.mark.parametrize(
        "eps,window,expected",
        [
            (0, 5, [1, -1, -3, -5]),
            (1, 5, [0, -2, -4]),
            (0, 7, [1, -1, -3, -5, -7]),
            (1, 7, [0, -2, -4, -6]),
        ],
    )
    def test_pole_sets(self, eps, window, expected):
        assert gl2.poles_of_tst(Fraction(0), (eps, 0), window) == expected

    def test_pole_set_independent_of_ktype(self):
        # poles_of_tst already asserts equality across its probe K-types
        gl2.poles_of_tst(Fraction(0), (0, 0), 7, nus=(0, 2, -2, 6, -6))
        gl2.poles_of_tst(Fraction(0), (1, 0), 7, nus=(1, 3, -1, 7, -5))


class TestLambdaAndComposite:
    def test_exact_value(self):
        lam = gl2.Lambda(gl2.CharacterGL2.symbolic(0))
        assert lam.eval_at(Fraction(1, 2)) == (0, Fraction(-4))

    def test_closed_form_both_parities(self):
        import random

        rng = random.Random(1)
        for eps in (0, 1):
            lam = gl2.Lambda(gl2.CharacterGL2.symbolic(eps))
            for _ in range(20):
                z = rng.uniform(0.1, 5.9)
                if min(abs(z - k) for k in range(7)) < 0.03:
                    continue
                assert ge_eval_numeric(lam, z) == pytest.approx(
                    gl2.lambda_closed_form(eps, z), rel=1e-8
                )

    def test_vanishes_at_cohomological_points(self):
        lam = gl2.Lambda(gl2.CharacterGL2.symbolic(0))
        for l in (0, 2, 4):
            assert lam.order_at(l + 2) > 0

    @pytest.mark.parametrize("eps,window", [(0, 10), (1, 9)])
    def test_composite(self, eps, window):
        assert gl2.composite_check(gl2.CharacterGL2.symbolic(eps), window)

    def test_composite_base_case_shape(self):
        chi = gl2.CharacterGL2.symbolic(0)
        product = gl2.T_st(chi, 0).reflect() * gl2.T_st(chi, 0)
        assert product.canonical() == (gl2.Lambda(chi) * GammaExpr.sqrt_pi(2)).canonical()


class TestNormalized:
    def test_value_at_3(self):
        assert gl2.T_norm(gl2.CharacterGL2.symbolic(0), 0).eval_at(3) == (0, Fraction(2))

    def test_pole_cancelled_at_1(self):
        tn = gl2.T_norm(gl2.CharacterGL2.symbolic(0), 0)
        assert tn.order_at(1) == 0

    @pytest.mark.parametrize("eps", [0, 1])
    def test_no_integer_poles(self, eps):
        chi = gl2.CharacterGL2.symbolic(eps)
        for nu in (eps, eps + 2, eps + 6, -eps - 2, -eps - 6):
            tn = gl2.T_norm(chi, nu)
            for z0 in range(-10, 11):
                assert tn.order_at(z0) >= 0

    def test_rational_at_noncohomological_points(self):
        # eps = 0, odd z-parameter >= 3: value is rational with no pi
        tn = gl2.T_norm(gl2.CharacterGL2.symbolic(0), 0)
        for l in (3, 5, 7):
            ph, val = tn.eval_at(l)
            assert ph == 0 and val != 0


class TestComparisonConstants:
    def test_l0(self):
        cc = gl2.compare_constants(0)
        assert cc.computed_plus == (2, Fraction(1))  # pi
        assert cc.displayed_plus == (2, Fraction(1))
        assert cc.computed_minus == (2, Fraction(-2))  # -2 pi
        assert cc.displayed_minus == (2, Fraction(1, 2))  # pi/2: conventions differ

    def test_proportionality_across_ktypes(self):
        assert gl2.tst_talg_ratio_constant(0, "plus") == (2, Fraction(1))
        assert gl2.tst_talg_ratio_constant(2, "plus") == (2, Fraction(-1, 4))
        assert gl2.tst_talg_ratio_constant(0, "minus") == (2, Fraction(-2))
        assert gl2.tst_talg_ratio_constant(2, "minus")[0] == 2

    def test_t_alg_support(self):
        assert gl2.t_alg_plus(2, 4) == 0
        assert gl2.t_alg_plus(2, 2) == 1
        assert gl2.t_alg_plus(2, 0) == -2
        assert gl2.t_alg_minus(2, 0) == 0
        assert gl2.t_alg_minus(2, 4) == 1
        assert gl2.t_alg_minus(2, -4) == 1


class TestCohomology:
    def test_weight_matching(self):
        rep = gl2.h1_cohomology(2, 1)
        assert rep.dims == (0, 2, 0)
        omega, omega_bar = rep.classes
        assert omega.components == (("+", 4, -2, GaussianRational(Fraction(1))),)
        assert omega_bar.components == (("-", -4, 2, GaussianRational(Fraction(1))),)

    def test_trivial_coefficients(self):
        rep = gl2.h1_cohomology(0, 0)
        assert rep.classes[0].components[0][1:3] == (2, 0)
        assert rep.classes[1].components[0][1:3] == (-2, 0)

    @pytest.mark.parametrize("l,d,signs", [(2, 1, (1, -1)), (2, 0, (-1, 1)), (2, 2, (-1, 1)), (0, 0, (1, -1)), (3, Fraction(1, 2), (-1, 1))])
    def test_eta_signs(self, l, d, signs):
        assert gl2.h1_cohomology(l, d).eta_signs == signs

    def test_sign_flip_under_d_shift(self):
        assert gl2.h1_cohomology(4, 1).eta_signs == tuple(-s for s in gl2.h1_cohomology(4, 2).eta_signs)

    def test_parity_violation(self):
        with pytest.raises(gl2.ParityViolation):
            gl2.h1_cohomology(3, 0)

    def test_eta_action_on_classes(self):
        rep = gl2.h1_cohomology(2, 1)
        omega, omega_bar = rep.classes
        image = gl2.eta_on_class(omega, 2, 1)
        assert image.components == omega_bar.components


@given(st.sampled_from(gl2.LIE_OPS), st.sampled_from(gl2.LIE_OPS), st.integers(-9, 9))
@settings(max_examples=60, deadline=None)
def test_bracket_property(op1, op2, nu):
    assert gl2.bracket_check(op1, op2, gl2.KVector.basis(nu))
