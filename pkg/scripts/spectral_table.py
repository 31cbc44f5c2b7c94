#!/usr/bin/env python3
"""Tabulate the spectral parameter layer for a range of ranks.

For each n, print the interleaving element, its length, the lowest
cohomology degree, the cuspidal parameters of the requested weight, and both
minimal K-types.

    python3 scripts/spectral_table.py --max-n 8
    python3 scripts/spectral_table.py --max-n 6 --lambda 1,1,2,1,1 --n 6
"""

import argparse
from fractions import Fraction

from hcz import spectral
from hcz.weyl import weight_from_string


def row(n: int, a, d) -> str:
    params = spectral.spectral_params(a, d, n, strict=False)
    plus = ",".join(str(x) for x in spectral.minimal_k_type(params, 1))
    minus = ",".join(str(x) for x in spectral.minimal_k_type(params, -1))
    return (
        f"{n:>2} {str(spectral.w_un(n)):<20} {params.w.length():>6} {params.b_n:>4} "
        f"{','.join(str(b) for b in params.b):<14} {plus:<14} {minus:<14}"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--lambda", dest="lam", default=None, help="weight for a single-row table (requires --n)")
    ap.add_argument("--n", type=int, default=None)
    args = ap.parse_args()

    header = f"{'n':>2} {'w_un':<20} {'l(wun)':>6} {'b_n':>4} {'b':<14} {'K-type(+)':<14} {'K-type(-)':<14}"
    print(header)
    print("-" * len(header))
    if args.lam is not None:
        if args.n is None:
            raise SystemExit("--lambda requires --n")
        lam = weight_from_string(args.n, args.lam)
        a, d = lam.gamma_coefficients()
        print(row(args.n, list(a), d))
        return
    for n in range(2, args.max_n + 1):
        print(row(n, [0] * (n - 1), Fraction(0)))


if __name__ == "__main__":
    main()
