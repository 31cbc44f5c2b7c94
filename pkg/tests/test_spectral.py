import math
import random
from fractions import Fraction

import pytest

from hcz import spectral
from hcz.weyl import RankTooLarge, Weight, dot_action


def random_self_dual(rng, n):
    half = [rng.randint(0, 4) for _ in range(n // 2)]
    if n % 2 == 1:
        a = half + half[::-1]
    else:
        a = half + half[-2::-1]
    assert len(a) == n - 1
    d = Fraction(sum(a) % 2, 2) + rng.randint(0, 2)
    return a, d


class TestWUn:
    def test_displayed_patterns(self):
        assert spectral.w_un(4).inverse().perm == (1, 4, 2, 3)
        assert spectral.w_un(5).inverse().perm == (1, 5, 2, 4, 3)
        assert spectral.w_un(2).perm == (1, 2)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_length_formula(self, n):
        expected = n * (n - 2) // 4 if n % 2 == 0 else (n - 1) ** 2 // 4
        assert spectral.w_un(n).length() == expected

    def test_kostant_for_even_odd_parabolic(self):
        from hcz.weyl import is_kostant

        for n in range(2, 9):
            assert is_kostant(spectral.w_un(n), spectral.even_odd_parabolic(n))


class TestLowestDegree:
    @pytest.mark.parametrize("n,expected", [(2, 1), (3, 2), (5, 6), (8, 16)])
    def test_values(self, n, expected):
        assert spectral.b_lowest(n) == expected

    @pytest.mark.parametrize("n", range(2, 13))
    def test_consistency_identity(self, n):
        assert spectral.b_lowest(n) == n // 2 + spectral.w_un(n).length()


class TestCuspidalParams:
    def test_n4_trivial(self):
        p = spectral.spectral_params([0, 0, 0], 0, 4)
        assert p.b == (2, 0)
        assert p.c == (Fraction(3, 2), Fraction(1, 2))
        assert not p.regular

    def test_n3_trivial(self):
        p = spectral.spectral_params([0, 0], 0, 3)
        assert p.b == (1,)
        assert p.c == (Fraction(1, 2),)

    def test_n6_displayed_formula(self):
        assert spectral.cuspidal_b([1, 2, 3, 2, 1], 6) == [13, 9, 3]

    def test_not_self_dual(self):
        with pytest.raises(spectral.NotSelfDual):
            spectral.spectral_params([1, 0, 0], 0, 4)

    def test_parity_error(self):
        with pytest.raises(spectral.ParityError):
            spectral.spectral_params([1, 1], Fraction(1, 2), 3)  # non-integral coordinates
        with pytest.raises(spectral.ParityError):
            spectral.spectral_params([0, 1, 0], 0, 4)  # a_{n/2} odd, d integral

    def test_closed_forms_match_dot_action_randomly(self):
        rng = random.Random(99)
        done = 0
        while done < 50:
            n = rng.randint(2, 8)
            a, d = random_self_dual(rng, n)
            lam = Weight.from_gamma_coefficients(n, a, d)
            if not lam.is_integral():
                continue
            params = spectral.spectral_params(a, d, n, strict=False)
            # b_i from the closed formulas against per-block dot-action data
            mu = dot_action(n, spectral.w_un(n), lam)
            pos = 0
            for size, b in zip(spectral.even_odd_parabolic(n).block_sizes, params.b):
                if size == 2:
                    assert mu.coords[pos] - mu.coords[pos + 1] == b
                pos += size
            done += 1

    def test_block_parity_matches_gl2_constraint(self):
        # each GL(2) block of w_un . lam satisfies l = 2d (mod 2)
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randint(2, 7)
            a, d = random_self_dual(rng, n)
            lam = Weight.from_gamma_coefficients(n, a, d)
            if not lam.is_integral():
                continue
            params = spectral.spectral_params(a, d, n, strict=False)
            for b, twist in zip(params.b, params.block_twists):
                assert (b - 2 * twist) % 2 == 0


class TestMinimalKType:
    def test_n4_trivial(self):
        p = spectral.spectral_params([0, 0, 0], 0, 4)
        assert spectral.minimal_k_type(p, 1) == [4, 2]
        assert spectral.minimal_k_type(p, -1) == [4, -2]

    def test_n3(self):
        p = spectral.spectral_params([0, 0], 0, 3)
        assert spectral.minimal_k_type(p) == [3]

    def test_n6(self):
        p = spectral.spectral_params([1, 2, 3, 2, 1], Fraction(1, 2), 6)
        assert spectral.minimal_k_type(p, 1) == [15, 11, 5]
        assert spectral.minimal_k_type(p, -1) == [15, 11, -5]

    def test_strict_decrease(self):
        p = spectral.spectral_params([1, 1, 1], Fraction(1, 2), 4)
        kt = spectral.minimal_k_type(p)
        assert all(x > y for x, y in zip(kt, kt[1:]))

    def test_dominance_failure_for_non_dominant_weight(self):
        # a = (-1, 0, -1) gives b = (0, 0): the chain is not strictly decreasing
        p = spectral.spectral_params([-1, 0, -1], 0, 4, strict=False)
        with pytest.raises(spectral.DominanceFailure):
            spectral.minimal_k_type(p)


class TestOrbits:
    def test_odd_rank_single_orbit(self):
        assert spectral.wc_orbit_class([1, -1], 5) == "single-orbit"

    def test_even_rank_product(self):
        assert spectral.wc_orbit_class([1, -1], 4) == -1
        assert spectral.wc_orbit_class([-1, -1], 4) == 1
        assert spectral.wc_orbit_class([1, 1], 4) == spectral.wc_orbit_class([-1, -1], 4)


class TestEtaSign:
    def test_examples(self):
        assert spectral.eta_sign(2, 1) == 1
        assert spectral.eta_sign(2, 0) == -1

    def test_d_shift_flips(self):
        for a_half, d in [(2, 0), (4, 1), (3, Fraction(1, 2))]:
            assert spectral.eta_sign(a_half, d) == -spectral.eta_sign(a_half, Fraction(d) + 1)

    def test_parity_error(self):
        with pytest.raises(spectral.ParityError):
            spectral.eta_sign(3, 0)


class TestUCohomology:
    @pytest.mark.parametrize("n,a", [(2, [0]), (3, [0, 0]), (4, [0, 0, 0]), (5, [0] * 4), (6, [0] * 5)])
    def test_concentration_at_trivial_weight(self, n, a):
        hist = spectral.u_cohomology_degrees(a, 0, n)
        assert set(hist) == {spectral.w_un(n).length()}
        assert sum(hist.values()) == math.factorial(n // 2)

    def test_singleton_for_small_rank(self):
        assert spectral.u_cohomology_degrees([0], 0, 2) == {0: 1}
        assert spectral.u_cohomology_degrees([0, 0], 0, 3) == {1: 1}

    def test_concentration_random_weights(self):
        rng = random.Random(12)
        done = 0
        while done < 10:
            n = rng.randint(2, 6)
            a, d = random_self_dual(rng, n)
            lam = Weight.from_gamma_coefficients(n, a, d)
            if not lam.is_integral():
                continue
            hist = spectral.u_cohomology_degrees(a, d, n)
            assert set(hist) == {spectral.w_un(n).length()}
            assert sum(hist.values()) == math.factorial(n // 2)
            done += 1

    def test_rank_guard(self):
        with pytest.raises(RankTooLarge):
            spectral.u_cohomology_degrees([0] * 7, 0, 8)


class TestTrivialWeightSpacing:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_b_decreases_by_two(self, n):
        b = spectral.cuspidal_b([0] * (n - 1), n)
        assert b == [n - 2 * j for j in range(1, n // 2 + 1)]


class TestSerialization:
    def test_record(self):
        p = spectral.spectral_params([0, 0, 0], 0, 4)
        rec = p.to_record()
        assert rec["n"] == 4
        assert rec["b"] == ["2", "0"]
        assert rec["c"] == ["3/2", "1/2"]
        assert rec["l_wun"] == 2
        assert rec["b_n"] == 4
        assert rec["minimal_k_type"] == {"+1": ["4", "2"], "-1": ["4", "-2"]}

    def test_record_rebuilds(self):
        import json

        p = spectral.spectral_params([1, 0, 0, 1], Fraction(1), 5)
        rec = json.loads(json.dumps(p.to_record()))
        rebuilt = spectral.spectral_params(
            [Fraction(x) for x in rec["a"]], Fraction(rec["d"]), rec["n"]
        )
        assert rebuilt.to_record() == rec
