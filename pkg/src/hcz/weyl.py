"""Type-A root datum: weights in the coordinate basis, the Weyl group as
permutations, Kostant coset representatives for parabolic subgroups, and the
reduced-word/beta-sequence machinery for the longest representative.

Conventions (1-based throughout):

* a permutation ``w`` is the tuple ``(w(1), ..., w(N))``;
* ``w`` acts on a coordinate vector by ``(w c)_{w(i)} = c_i``;
* a positive root e_i - e_j (i < j) is the pair ``(i, j)``;
* ``w`` belongs to the Kostant set of a parabolic iff ``w^{-1}`` maps every
  positive Levi root to a positive root (equivalently, ``w^{-1}`` is
  increasing on each block of values).

>>> s2 = WeylElement.simple(3, 2)
>>> dot_action(3, s2, Weight.zero(3)).coords
(Fraction(0, 1), Fraction(-1, 1), Fraction(1, 1))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class RankTooLarge(ValueError):
    """Brute-force enumeration guard tripped."""


class OddDimension(ValueError):
    """dim U_P is odd, so no balanced element can exist."""


class NotKostant(ValueError):
    """Element is not a Kostant representative for the given parabolic."""


Root = tuple[int, int]  # (i, j) with i != j meaning e_i - e_j


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class Weight:
    """A rational vector in the coordinate basis e_1, ..., e_N, with optional
    sign-character parity data."""

    coords: tuple
    parity: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @staticmethod
    def zero(n: int) -> Weight:
        return Weight((Fraction(0),) * n)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def scale(self, c) -> Weight:
        return Weight(tuple(Fraction(c) * a for a in self.coords))

    def gamma_coefficients(self) -> tuple[tuple, Fraction]:
        """Expansion a_1, ..., a_{N-1}; d over fundamental weights and det."""
        a = tuple(self.coords[i] - self.coords[i + 1] for i in range(self.n - 1))
        d = sum(self.coords, Fraction(0)) / self.n
        return a, d

    @staticmethod
    def from_gamma_coefficients(n: int, a, d) -> Weight:
        coords = [Fraction(0)] * n
        for i, ai in enumerate(a, start=1):
            g = fundamental_weight(n, i)
            coords = [c + Fraction(ai) * gc for c, gc in zip(coords, g.coords)]
        return Weight(tuple(c + Fraction(d) for c in coords))

    def block_sums(self, blocks: tuple[int, ...]) -> tuple:
        out, pos = [], 0
        for size in blocks:
            out.append(sum(self.coords[pos : pos + size], Fraction(0)))
            pos += size
        return tuple(out)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __str__(self) -> str:
        a, d = self.gamma_coefficients()
        return ",".join(str(ai) for ai in a) + ";" + str(d)

    def coord_str(self) -> str:
        return "e:(" + ",".join(str(c) for c in self.coords) + ")"


def weight_from_string(n: int, s: str) -> Weight:
    """Parse 'a1,...,a_{N-1};d' (d optional, default 0) or 'e:(c1,...,cN)'."""
    s = s.strip()
    if s.startswith("e:"):
        body = s[2:].strip().lstrip("(").rstrip(")")
        coords = tuple(Fraction(t) for t in body.split(","))
        if len(coords) != n:
            raise ValueError(f"expected {n} coordinates, got {len(coords)}")
        return Weight(coords)
    d = Fraction(0)
    if ";" in s:
        s, ds = s.split(";", 1)
        d = Fraction(ds)
    a = [Fraction(t) for t in s.split(",")] if s else []
    if len(a) != n - 1:
        raise ValueError(f"expected {n - 1} gamma-coefficients, got {len(a)}")
    return Weight.from_gamma_coefficients(n, a, d)


# ---------------------------------------------------------------------------
# root datum


def rho(n: int) -> Weight:
    """Half sum of positive roots: ((N-1)/2, (N-3)/2, ..., -(N-1)/2)."""
    return Weight(tuple(Fraction(n + 1 - 2 * i, 2) for i in range(1, n + 1)))


def fundamental_weight(n: int, i: int) -> Weight:
    """gamma_i with abelian part zero: e_1+...+e_i - (i/N)*sum(e)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"fundamental weight index {i} out of range for GL({n})")
    return Weight(tuple(Fraction(1 if k <= i else 0) - Fraction(i, n) for k in range(1, n + 1)))


def determinant_weight(n: int) -> Weight:
    return Weight((Fraction(1),) * n)


def positive_roots(n: int) -> list[Root]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def h_of_root(beta: Root) -> int:
    """For beta = alpha_i + ... + alpha_{i+h} (= e_i - e_j), the gap h = j-i-1."""
    i, j = beta
    if not i < j:
        raise ValueError(f"{beta} is not a positive root")
    return j - i - 1


def pairing(beta: Root, chi: Weight) -> Fraction:
    """<beta^vee, chi> = chi_i - chi_j for beta = e_i - e_j."""
    i, j = beta
    return chi.coords[i - 1] - chi.coords[j - 1]


# ---------------------------------------------------------------------------
# Weyl elements


@dataclass(frozen=True)
class WeylElement:
    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.perm}")

    @staticmethod
    def identity(n: int) -> WeylElement:
        return WeylElement(tuple(range(1, n + 1)))

    @staticmethod
    def simple(n: int, i: int) -> WeylElement:
        """The simple reflection s_i swapping i and i+1."""
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        return WeylElement(tuple(p))

    @staticmethod
    def from_word(n: int, word) -> WeylElement:
        w = WeylElement.identity(n)
        for i in word:
            w = w * WeylElement.simple(n, i)
        return w

    @property
    def n(self) -> int:
        return len(self.perm)

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def inverse(self) -> WeylElement:
        inv = [0] * self.n
        for pos, val in enumerate(self.perm, start=1):
            inv[val - 1] = pos
        return WeylElement(tuple(inv))

    def __mul__(self, other: WeylElement) -> WeylElement:
        """(self*other)(i) = self(other(i))."""
        return WeylElement(tuple(self.perm[o - 1] for o in other.perm))

    def length(self) -> int:
        """Number of inversions = |{alpha > 0 : w(alpha) < 0}|."""
        return sum(
            1
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.perm[i] > self.perm[j]
        )

    def act_coords(self, coords: tuple) -> tuple:
        out = [None] * self.n
        for i, c in enumerate(coords, start=1):
            out[self.perm[i - 1] - 1] = c
        return tuple(out)

    def act_weight(self, w: Weight) -> Weight:
        return Weight(self.act_coords(w.coords))

    def act_root(self, beta: Root) -> Root:
        i, j = beta
        return (self.perm[i - 1], self.perm[j - 1])

    def inversion_set(self, n_unused: int | None = None) -> set[Root]:
        """{beta > 0 : w^{-1}(beta) < 0}."""
        inv = self.inverse()
        out = set()
        for i, j in positive_roots(self.n):
            if inv.perm[i - 1] > inv.perm[j - 1]:
                out.add((i, j))
        return out

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.perm) + "]"


def perm_from_string(s: str) -> WeylElement:
    body = s.strip().lstrip("[").rstrip("]")
    return WeylElement(tuple(int(t) for t in body.split(",")))


def dot_action(n: int, w: WeylElement, lam: Weight) -> Weight:
    """The rho-shifted action w . lam = w(lam + rho) - rho."""
    r = rho(n)
    return w.act_weight(lam + r) - r


# ---------------------------------------------------------------------------
# parabolic subgroups and Kostant representatives


@dataclass(frozen=True)
class ParabolicGLN:
    n: int
    block_sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "block_sizes", tuple(self.block_sizes))
        if sum(self.block_sizes) != self.n or any(b <= 0 for b in self.block_sizes):
            raise ValueError(f"blocks {self.block_sizes} do not partition {self.n}")

    @staticmethod
    def maximal(n: int, first_block: int) -> ParabolicGLN:
        if not 1 <= first_block < n:
            raise ValueError("maximal parabolic needs 1 <= n < N")
        return ParabolicGLN(n, (first_block, n - first_block))

    def blocks(self) -> list[range]:
        out, pos = [], 1
        for size in self.block_sizes:
            out.append(range(pos, pos + size))
            pos += size
        return out

    def is_maximal(self) -> bool:
        return len(self.block_sizes) == 2

    def levi_positive_roots(self) -> list[Root]:
        out = []
        for blk in self.blocks():
            out.extend((i, j) for i in blk for j in blk if i < j)
        return out

    def unipotent_roots(self) -> list[Root]:
        """Delta^+ of the unipotent radical, in lexicographic order."""
        blocks = self.blocks()
        out = []
        for bi in range(len(blocks)):
            for bj in range(bi + 1, len(blocks)):
                out.extend((i, j) for i in blocks[bi] for j in blocks[bj])
        return sorted(out)

    def dim_u(self) -> int:
        total = 0
        sizes = self.block_sizes
        for i in range(len(sizes)):
            for j in range(i + 1, len(sizes)):
                total += sizes[i] * sizes[j]
        return total


def _block_of(p: ParabolicGLN) -> tuple[int, ...]:
    owner = [0] * (p.n + 1)
    for b, blk in enumerate(p.blocks()):
        for v in blk:
            owner[v] = b
    return tuple(owner)


def is_kostant(w: WeylElement, p: ParabolicGLN) -> bool:
    """w^{-1} increasing on each block of values."""
    inv = w.inverse().perm
    for blk in p.blocks():
        for v in blk[:-1]:
            if inv[v - 1] > inv[v]:
                return False
    return True


@lru_cache(maxsize=8)
def _all_perms(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(1, n + 1)))


def kostant_set(p: ParabolicGLN, max_rank: int = 10) -> list[WeylElement]:
    """All Kostant representatives, brute-forced over S_N, sorted by
    (length, one-line notation)."""
    if p.n > max_rank:
        raise RankTooLarge(f"N = {p.n} exceeds the enumeration guard {max_rank}")
    owner = _block_of(p)
    found = []
    # cache the permutation list only while it is small
    perms = _all_perms(p.n) if p.n <= 8 else itertools.permutations(range(1, p.n + 1))
    for perm in perms:
        inv = [0] * p.n
        for pos, val in enumerate(perm):
            inv[val - 1] = pos
        ok = True
        for v in range(1, p.n):
            if owner[v] == owner[v + 1] and inv[v - 1] > inv[v]:
                ok = False
                break
        if ok:
            found.append(WeylElement(perm))
    return sorted(found, key=lambda w: (w.length(), w.perm))


def is_balanced(w: WeylElement, p: ParabolicGLN) -> bool:
    """length(w) == dim(U_P)/2."""
    d = p.dim_u()
    if d % 2:
        raise OddDimension(f"dim U_P = {d} is odd; no balanced element exists")
    return w.length() == d // 2


def longest_kostant(p: ParabolicGLN) -> WeylElement:
    """w_P, the unique Kostant representative of length dim U_P (maximal case:
    the block swap)."""
    if not p.is_maximal():
        raise ValueError("longest_kostant implemented for maximal parabolics only")
    n, nprime = p.block_sizes
    perm = tuple(k + n if k <= nprime else k - nprime for k in range(1, p.n + 1))
    return WeylElement(perm)


def complement(w: WeylElement, p: ParabolicGLN) -> WeylElement:
    """The mirror representative w' = w_P^{-1} w = w_Q w in the opposite-block
    Kostant set, with length(w) + length(w') = dim U_P."""
    if not is_kostant(w, p):
        raise NotKostant(f"{w} is not Kostant for blocks {p.block_sizes}")
    wp = longest_kostant(p)
    wprime = wp.inverse() * w
    q = ParabolicGLN(p.n, tuple(reversed(p.block_sizes)))
    if not is_kostant(wprime, q):
        raise AssertionError("complement left the opposite Kostant set")
    return wprime


# ---------------------------------------------------------------------------
# reduced word and beta-sequence of w_P


@dataclass(frozen=True)
class WordFactorization:
    word: tuple[int, ...]
    betas: tuple[Root, ...]
    prefixes: tuple[WeylElement, ...]  # x_0 = e, ..., x_{d_U} = w_P


def wp_factorization(p: ParabolicGLN) -> WordFactorization:
    """A deterministic reduced word for w_P together with its beta-sequence.

    Greedy sweep: at step k pick the smallest simple index r with
    x_{k-1}(alpha_r) a not-yet-used root of U_P; then beta_k = x_{k-1}(alpha_r)
    and x_k = x_{k-1} s_r.  The inversion set of x_k is {beta_1, ..., beta_k},
    so after dim U_P steps x_k = w_P.  The word starts with s_n and ends with
    s_{n'}.
    """
    if not p.is_maximal():
        raise ValueError("wp_factorization implemented for maximal parabolics only")
    remaining = set(p.unipotent_roots())
    x = WeylElement.identity(p.n)
    word: list[int] = []
    betas: list[Root] = []
    prefixes = [x]
    while remaining:
        for r in range(1, p.n):
            beta = x.act_root((r, r + 1))
            if beta in remaining:
                break
        else:
            raise AssertionError("greedy word construction got stuck")
        remaining.discard(beta)
        word.append(r)
        betas.append(beta)
        x = x * WeylElement.simple(p.n, r)
        prefixes.append(x)
    n, nprime = p.block_sizes
    if word[0] != n or word[-1] != nprime:
        raise AssertionError("word does not run from s_n to s_n'")
    if x != longest_kostant(p):
        raise AssertionError("word does not multiply to w_P")
    return WordFactorization(tuple(word), tuple(betas), tuple(prefixes))
