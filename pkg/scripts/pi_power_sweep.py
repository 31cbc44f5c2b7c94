#!/usr/bin/env python3
"""Sweep the factorized intertwiner prefactor over maximal parabolics.

For every maximal parabolic of GL(N) with even-dimensional unipotent radical
and every admissible balanced Kostant element, print the per-datum report:
the net order at z = 0, the extracted power of pi, and the rational leading
coefficient.  The pi-power always equals dim(U_P)/2 and the rational is
nonzero; the order is 0 exactly when the scalar chain needs no compensation
from the K-type matrices.

    python3 scripts/pi_power_sweep.py --max-N 7
    python3 scripts/pi_power_sweep.py --max-N 6 --random 5 --seed 11
"""

import argparse
import random
from fractions import Fraction

from hcz import factorize as fz
from hcz.weyl import ParabolicGLN, Weight, is_balanced, kostant_set


def random_self_dual(rng, n):
    half = [rng.randint(0, 3) for _ in range(n // 2)]
    a = half + half[::-1] if n % 2 == 1 else half + half[-2::-1]
    d = Fraction(sum(a) % 2, 2)
    lam = Weight.from_gamma_coefficients(n, a, d)
    return lam if lam.is_integral() else None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-N", type=int, default=7)
    ap.add_argument("--random", type=int, default=0, help="additional random self-dual weights per parabolic")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    header = f"{'N':>2} {'n':>2} {'lambda':<14} {'w':<18} {'d_U':>3} {'ord':>3} {'value':>18}"
    print(header)
    print("-" * len(header))
    for N in range(3, args.max_N + 1):
        for n in range(1, N):
            p = ParabolicGLN.maximal(N, n)
            if p.dim_u() % 2:
                continue
            lams = [Weight.zero(N)]
            while len(lams) < 1 + args.random:
                lam = random_self_dual(rng, N)
                if lam is not None:
                    lams.append(lam)
            for lam in lams:
                for w in kostant_set(p):
                    if not is_balanced(w, p):
                        continue
                    try:
                        datum = fz.balanced_datum(N, n, w, lam)
                    except (fz.NotSelfDual, fz.NotNegativeChamber):
                        continue
                    rep = fz.prefactor_product(p, fz.chi_from(datum), w=w)
                    value = f"{rep.rational_value} * pi^{rep.pi_half // 2}"
                    print(
                        f"{N:>2} {n:>2} {str(lam):<14} {str(w):<18} {rep.d_U:>3} "
                        f"{rep.order_at_zero:>3} {value:>18}"
                    )


if __name__ == "__main__":
    main()
