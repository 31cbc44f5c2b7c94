import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcz.weyl import (
    NotKostant,
    OddDimension,
    ParabolicGLN,
    RankTooLarge,
    Weight,
    WeylElement,
    complement,
    dot_action,
    fundamental_weight,
    h_of_root,
    is_balanced,
    kostant_set,
    longest_kostant,
    pairing,
    perm_from_string,
    rho,
    weight_from_string,
    wp_factorization,
)


def gaussian_binomial(n, k):
    """[n choose k]_q as an integer coefficient list (independent oracle)."""
    num, den = [1], [1]

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def cyclotomic_like(m):
        return [1] * m  # (1-q^m)/(1-q)

    for i in range(1, k + 1):
        num = mul(num, cyclotomic_like(n - k + i))
        den = mul(den, cyclotomic_like(i))
    # divide num by den exactly
    quot = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for d in range(len(quot) - 1, -1, -1):
        c = rem[d + len(den) - 1] // den[-1]
        quot[d] = c
        for j, y in enumerate(den):
            rem[d + j] -= c * y
    assert not any(rem)
    return quot


class TestDotAction:
    def test_identity(self):
        lam = Weight.from_gamma_coefficients(4, [2, 0, 1], Fraction(1, 2))
        assert dot_action(4, WeylElement.identity(4), lam) == lam

    def test_gl2_reflection(self):
        for l in range(0, 6):
            lam = Weight.from_gamma_coefficients(2, [l], 0)
            image = dot_action(2, WeylElement.simple(2, 1), lam)
            a, d = image.gamma_coefficients()
            assert a == (-(l + 2),)
            assert d == 0

    def test_gl3_simple(self):
        image = dot_action(3, WeylElement.simple(3, 2), Weight.zero(3))
        assert image.coords == (Fraction(0), Fraction(-1), Fraction(1))


class TestKostant:
    def test_counts_small(self):
        assert len(kostant_set(ParabolicGLN.maximal(4, 2))) == 6
        assert len(kostant_set(ParabolicGLN.maximal(2, 1))) == 2

    @pytest.mark.parametrize("n", range(2, 9))
    def test_counts_and_length_generating_function(self, n):
        for k in range(1, n):
            p = ParabolicGLN.maximal(n, k)
            ks = kostant_set(p)
            assert len(ks) == math.comb(n, k)
            hist = {}
            for w in ks:
                hist[w.length()] = hist.get(w.length(), 0) + 1
            gb = gaussian_binomial(n, k)
            assert [hist.get(i, 0) for i in range(len(gb))] == gb

    def test_balanced_counts(self):
        p = ParabolicGLN.maximal(4, 2)
        assert sum(1 for w in kostant_set(p) if is_balanced(w, p)) == 2
        p31 = ParabolicGLN.maximal(3, 1)
        balanced = [w for w in kostant_set(p31) if is_balanced(w, p31)]
        assert [str(w) for w in balanced] == ["[2,1,3]"]

    def test_identity_never_balanced(self):
        p = ParabolicGLN.maximal(6, 2)
        assert not is_balanced(WeylElement.identity(6), p)

    def test_odd_dimension(self):
        with pytest.raises(OddDimension):
            is_balanced(WeylElement.identity(4), ParabolicGLN.maximal(4, 1))

    def test_rank_guard(self):
        with pytest.raises(RankTooLarge):
            kostant_set(ParabolicGLN.maximal(11, 2))

    def test_kostant_filtered_by_balanced_length(self):
        p = ParabolicGLN.maximal(3, 2)
        assert sum(1 for w in kostant_set(p) if w.length() == 1) == 1


class TestComplement:
    def test_identity_goes_to_longest(self):
        p = ParabolicGLN.maximal(5, 2)
        q = ParabolicGLN.maximal(5, 3)
        assert complement(WeylElement.identity(5), p) == longest_kostant(q)

    def test_longest_goes_to_identity(self):
        p = ParabolicGLN.maximal(5, 2)
        assert complement(longest_kostant(p), p) == WeylElement.identity(5)

    @pytest.mark.parametrize("n,k", [(N, n) for N in range(2, 7) for n in range(1, N)])
    def test_length_sum_and_involution(self, n, k):
        p = ParabolicGLN.maximal(n, k)
        q = ParabolicGLN.maximal(n, n - k)
        for w in kostant_set(p):
            wprime = complement(w, p)
            assert w.length() + wprime.length() == p.dim_u()
            assert complement(wprime, q) == w
            if p.dim_u() % 2 == 0 and is_balanced(w, p):
                assert is_balanced(wprime, q)

    def test_rejects_non_kostant(self):
        p = ParabolicGLN.maximal(3, 2)
        with pytest.raises(NotKostant):
            complement(WeylElement.simple(3, 1), p)


class TestWordFactorization:
    def test_gl3_examples(self):
        wf = wp_factorization(ParabolicGLN.maximal(3, 1))
        assert wf.word == (1, 2)
        assert wf.betas == ((1, 2), (1, 3))
        wf = wp_factorization(ParabolicGLN.maximal(3, 2))
        assert wf.word == (2, 1)
        assert wf.betas == ((2, 3), (1, 3))
        wf = wp_factorization(ParabolicGLN.maximal(2, 1))
        assert wf.word == (1,)

    @pytest.mark.parametrize("n,k", [(N, n) for N in range(2, 7) for n in range(1, N)])
    def test_invariants(self, n, k):
        p = ParabolicGLN.maximal(n, k)
        wf = wp_factorization(p)
        assert len(wf.word) == p.dim_u()
        assert sorted(wf.betas) == p.unipotent_roots()
        assert wf.word[0] == k and wf.word[-1] == n - k
        for i, (r, beta) in enumerate(zip(wf.word, wf.betas)):
            assert wf.prefixes[i].act_root((r, r + 1)) == beta
            assert wf.prefixes[i + 1].inversion_set() == set(wf.betas[: i + 1])
        assert wf.prefixes[-1] == longest_kostant(p)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_even_height_gap_count(self, n):
        for k in range(1, n):
            if (k * (n - k)) % 2:
                continue
            wf = wp_factorization(ParabolicGLN.maximal(n, k))
            evens = sum(1 for b in wf.betas if h_of_root(b) % 2 == 0)
            assert evens == k * (n - k) // 2


class TestRootsAndWeights:
    def test_h_of_root(self):
        assert h_of_root((3, 4)) == 0
        assert h_of_root((1, 3)) == 1
        assert h_of_root((1, 5)) == 3

    def test_pairings(self):
        for n in range(2, 7):
            r = rho(n)
            for i in range(1, n):
                assert pairing((i, i + 1), r) == 1
            det = Weight((Fraction(1),) * n)
            assert pairing((1, n), det) == 0

    @pytest.mark.parametrize("n", range(2, 9))
    def test_unipotent_pairing_with_fundamental_weight(self, n):
        for k in range(1, n):
            g = fundamental_weight(n, k)
            for beta in ParabolicGLN.maximal(n, k).unipotent_roots():
                assert pairing(beta, g) == 1

    def test_weight_string_roundtrip(self):
        w = weight_from_string(4, "2,0,1;1/2")
        a, d = w.gamma_coefficients()
        assert a == (2, 0, 1) and d == Fraction(1, 2)
        assert weight_from_string(4, str(w)) == w
        assert weight_from_string(4, w.coord_str()) == w

    def test_perm_string_roundtrip(self):
        w = perm_from_string("[3,1,2]")
        assert w.perm == (3, 1, 2)
        assert perm_from_string(str(w)) == w


@given(st.permutations(list(range(1, 7))))
@settings(max_examples=80, deadline=None)
def test_length_is_inversion_count_of_inverse(perm):
    w = WeylElement(tuple(perm))
    assert w.length() == w.inverse().length()
    assert len(w.inversion_set()) == w.length()


@given(st.permutations(list(range(1, 6))), st.permutations(list(range(1, 6))))
@settings(max_examples=60, deadline=None)
def test_action_is_homomorphism(p1, p2):
    w1, w2 = WeylElement(tuple(p1)), WeylElement(tuple(p2))
    coords = tuple(Fraction(i) for i in range(5))
    assert (w1 * w2).act_coords(coords) == w1.act_coords(w2.act_coords(coords))
