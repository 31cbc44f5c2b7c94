import math
import random
from fractions import Fraction

import pytest

from hcz import numeric
from hcz.gamma_algebra import GammaExpr
from hcz.gl2 import CharacterGL2, Lambda


class TestGammaNum:
    def test_half(self):
        assert numeric.gamma_num(0.5) == pytest.approx(1.772453850905516, rel=1e-14)

    def test_factorial(self):
        assert numeric.gamma_num(5.0) == pytest.approx(24.0, rel=1e-13)

    def test_reflection_point(self):
        # Gamma(-1/4) = -4 Gamma(3/4)
        assert numeric.gamma_num(-0.25) == pytest.approx(-4.0 * numeric.gamma_num(0.75), rel=1e-12)

    def test_pole(self):
        with pytest.raises(numeric.PoleArgument):
            numeric.gamma_num(-2.0)

    def test_against_math_gamma(self):
        rng = random.Random(0)
        for _ in range(200):
            x = rng.uniform(0.5, 30.0)
            assert numeric.gamma_num(x) == pytest.approx(math.gamma(x), rel=1e-12)

    def test_recurrence(self):
        rng = random.Random(1)
        for _ in range(100):
            x = rng.uniform(0.1, 20.0)
            assert numeric.gamma_num(x + 1.0) == pytest.approx(x * numeric.gamma_num(x), rel=1e-11)

    def test_reflection_formula(self):
        rng = random.Random(2)
        for _ in range(100):
            x = rng.uniform(-5.0, 5.0)
            if abs(x - round(x)) < 1e-3:
                continue
            lhs = numeric.gamma_num(x) * numeric.gamma_num(1.0 - x) * math.sin(math.pi * x) / math.pi
            assert lhs == pytest.approx(1.0, rel=1e-9)


class TestGEEval:
    def test_pi_over_two(self):
        e = GammaExpr.gamma(Fraction(3, 2)) * GammaExpr.sqrt_pi() * GammaExpr.gamma(2, exp=-1)
        assert numeric.ge_eval_numeric(e, 0.0) == pytest.approx(math.pi / 2, rel=1e-13)

    def test_identity(self):
        assert numeric.ge_eval_numeric(GammaExpr.one(), 2.7) == 1.0

    def test_lambda_value(self):
        lam = Lambda(CharacterGL2.symbolic(0))
        assert numeric.ge_eval_numeric(lam, 0.5) == pytest.approx(-4.0, rel=1e-12)


class TestQuadrature:
    def test_anchor_z4(self):
        v = numeric.intertwine_quadrature(4.0)
        assert v.real == pytest.approx(math.pi / 2, abs=1e-8)
        assert abs(v.imag) < 1e-10

    def test_anchor_z3(self):
        assert numeric.intertwine_quadrature(3.0).real == pytest.approx(2.0, abs=1e-8)

    def test_divergence_guard(self):
        with pytest.raises(numeric.ConvergenceFailure):
            numeric.intertwine_quadrature(0.5)

    @pytest.mark.parametrize("z", [2.5, 3.0, 4.0, 5.5])
    @pytest.mark.parametrize("nu", [0, 2, -2, 4, -4])
    def test_matches_symbolic_even(self, z, nu):
        q, s = numeric.quadrature_vs_symbolic(z, nu)
        assert q == pytest.approx(s, rel=1e-6, abs=1e-8)

    @pytest.mark.parametrize("z", [2.5, 4.0, 5.5])
    @pytest.mark.parametrize("nu", [1, -1, 3, -3])
    def test_matches_symbolic_odd(self, z, nu):
        q, s = numeric.quadrature_vs_symbolic(z, nu)
        assert q == pytest.approx(s, rel=1e-6, abs=1e-8)

    def test_truncated_fallback(self):
        v = numeric.intertwine_quadrature(4.0, tangent_substitution=False)
        assert v.real == pytest.approx(math.pi / 2, abs=1e-5)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            numeric.NumericConfig(quadrature_tol=-1.0)


class TestGL3Quadrature:
    """Two-dimensional integral over the full unipotent radical: the strongest
    independent check on measure and Iwasawa conventions at higher rank."""

    @pytest.mark.parametrize(
        "a,b,c",
        [(4.0, 2.0, -2.0), (5.0, 3.0, -2.0), (6.0, 2.5, -1.0), (4.5, 1.5, -3.0)],
    )
    def test_matches_closed_form(self, a, b, c):
        val = numeric.gl3_spherical_quadrature(a, b, c)
        expected = numeric.beta_integral(a - b) * numeric.beta_integral(a - c - 1.0)
        assert val == pytest.approx(expected, rel=1e-8)

    def test_first_case_is_four_pi_thirds(self):
        # B(2) * B(3) = pi * 4/3
        val = numeric.gl3_spherical_quadrature(4.0, 2.0, -2.0)
        assert val == pytest.approx(4.0 * math.pi / 3.0, rel=1e-10)

    def test_divergence_guard(self):
        with pytest.raises(numeric.ConvergenceFailure):
            numeric.gl3_spherical_quadrature(2.0, 2.0, 0.0)


class TestCanonicalizationOracle:
    def test_random_exprs(self):
        rng = random.Random(20)
        for _ in range(50):
            expr = GammaExpr.one()
            for _ in range(rng.randint(1, 4)):
                expr = expr * GammaExpr.gamma(
                    Fraction(rng.randint(-9, 9), 2),
                    sign=rng.choice((1, -1)),
                    exp=rng.choice((-2, -1, 1, 2)),
                )
            canon = expr.canonical()
            for _ in range(5):
                z = rng.randint(1, 5) + rng.randint(1, 9) / 10 + 0.011
                a = numeric.ge_eval_numeric(expr, z)
                b = numeric.ge_eval_numeric(canon, z)
                assert a == pytest.approx(b, rel=1e-9)
