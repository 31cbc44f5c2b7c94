"""Command-line front end.

Subcommands: kostant, betaseq, dot, gl2 {intertwine,cohomology,poles,lambda,
compare}, spectral {params,minktype,ucohom}, factorize, verify.  Output is a
plain table by default; --format json / csv give machine-readable forms.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 violated
hypothesis of the factorization setup (named a/b/c in the message).
The environment variable HCZ_MAX_N overrides the brute-force enumeration
guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import factorize as fz
from . import gl2, numeric, spectral, verify
from .gamma_algebra import IrrationalGamma
from .weyl import (
    ParabolicGLN,
    Weight,
    dot_action,
    is_balanced,
    kostant_set,
    perm_from_string,
    weight_from_string,
    wp_factorization,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3


def _max_rank(default: int = 10) -> int:
    raw = os.environ.get("HCZ_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(EXIT_USAGE)


def _emit(fmt: str, header: list[str], rows: list[list], json_obj) -> None:
    if fmt == "json":
        print(json.dumps(json_obj, indent=2, sort_keys=False))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        widths = [len(h) for h in header]
        str_rows = [[str(c) for c in row] for row in rows]
        for row in str_rows:
            widths = [max(w, len(c)) for w, c in zip(widths, row)]
        line = "  ".join(h.ljust(w) for h, w in zip(header, widths))
        print(line)
        print("-" * len(line))
        for row in str_rows:
            print("  ".join(c.ljust(w) for c, w in zip(row, widths)))


def cmd_kostant(args) -> int:
    p = ParabolicGLN.maximal(args.N, args.n)
    elements = kostant_set(p, max_rank=_max_rank())
    lam = weight_from_string(args.N, getattr(args, "lam")) if args.lam else None
    header = ["perm", "length", "balanced"] + (["dot"] if lam else [])
    rows, jrows = [], []
    for w in elements:
        bal = is_balanced(w, p) if p.dim_u() % 2 == 0 else False
        if args.balanced and not bal:
            continue
        row = [str(w), w.length(), "yes" if bal else "no"]
        jrow = {"perm": str(w), "length": w.length(), "balanced": bal}
        if lam is not None:
            image = dot_action(args.N, w, lam)
            row.append(str(image))
            jrow["dot"] = str(image)
        rows.append(row)
        jrows.append(jrow)
    _emit(args.format, header, rows, {"N": args.N, "n": args.n, "rows": jrows})
    return EXIT_OK


def cmd_betaseq(args) -> int:
    p = ParabolicGLN.maximal(args.N, args.n)
    wf = wp_factorization(p)
    header = ["k", "s", "beta", "h", "prefix"]
    rows = [
        [k, f"s{r}", f"e{b[0]}-e{b[1]}", b[1] - b[0] - 1, str(x)]
        for k, (r, b, x) in enumerate(zip(wf.word, wf.betas, wf.prefixes[1:]), start=1)
    ]
    json_obj = {
        "N": args.N,
        "n": args.n,
        "word": list(wf.word),
        "betas": [f"e{b[0]}-e{b[1]}" for b in wf.betas],
        "prefixes": [str(x) for x in wf.prefixes],
    }
    _emit(args.format, header, rows, json_obj)
    return EXIT_OK


def cmd_dot(args) -> int:
    w = perm_from_string(args.w)
    lam = weight_from_string(args.N, args.lam)
    image = dot_action(args.N, w, lam)
    json_obj = {
        "N": args.N,
        "w": str(w),
        "lambda": str(lam),
        "result": str(image),
        "coords": image.coord_str(),
    }
    _emit(args.format, ["w", "lambda", "result", "coords"], [[str(w), str(lam), str(image), image.coord_str()]], json_obj)
    return EXIT_OK


def _fmt_value(pi_half: int, value: Fraction) -> str:
    if pi_half == 0:
        return str(value)
    return f"{value} * pi^({pi_half}/2)"


def cmd_gl2(args) -> int:
    sub = args.gl2_cmd
    if sub == "intertwine":
        chi = gl2.CharacterGL2.symbolic(args.eps)
        expr = gl2.T_st(chi, args.nu)
        json_obj = {"eps": args.eps, "nu": args.nu, "gamma": expr.to_record()}
        rows = [[args.eps, args.nu, str(expr)]]
        if args.at is not None:
            z0 = Fraction(args.at)
            try:
                ph, val = expr.eval_at(z0)
                json_obj["value"] = _fmt_value(ph, val)
                rows[0].append(_fmt_value(ph, val))
            except IrrationalGamma:
                val = numeric.ge_eval_numeric(expr, float(z0))
                json_obj["value"] = val
                rows[0].append(repr(val))
            header = ["eps", "nu", "gamma", f"value at z={args.at}"]
        else:
            header = ["eps", "nu", "gamma"]
        _emit(args.format, header, rows, json_obj)
        return EXIT_OK
    if sub == "poles":
        poles = gl2.poles_of_tst(Fraction(0), (args.eps, 0), args.window)
        json_obj = {"eps": args.eps, "window": args.window, "poles": poles}
        if args.format == "table":
            print(", ".join(str(z) for z in poles))
            return EXIT_OK
        _emit(args.format, ["z0"], [[z] for z in poles], json_obj)
        return EXIT_OK
    if sub == "lambda":
        chi = gl2.CharacterGL2.symbolic(args.eps)
        expr = gl2.Lambda(chi)
        json_obj = {"eps": args.eps, "gamma": expr.to_record()}
        if args.at is not None:
            z0 = Fraction(args.at)
            try:
                ph, val = expr.eval_at(z0)
                out = _fmt_value(ph, val)
            except IrrationalGamma:
                out = repr(numeric.ge_eval_numeric(expr, float(z0)))
            json_obj["at"] = str(z0)
            json_obj["value"] = out
            if args.format == "table":
                print(out)
                return EXIT_OK
        _emit(args.format, ["eps", "gamma"], [[args.eps, str(expr)]], json_obj)
        return EXIT_OK
    if sub == "cohomology":
        rep = gl2.h1_cohomology(args.l, Fraction(args.d))
        signs = ",".join("+" if s > 0 else "-" for s in rep.eta_signs)
        header = ["class", "components", "eta"]
        rows = [
            [rep.omega_classes[0].label, str(rep.omega_classes[0]), "+" if rep.eta_signs[0] > 0 else "-"],
            [rep.omega_classes[1].label, str(rep.omega_classes[1]), "+" if rep.eta_signs[1] > 0 else "-"],
        ]
        json_obj = {
            "l": args.l,
            "d": str(rep.d),
            "dims": list(rep.dims),
            "classes": [str(c) for c in rep.classes],
            "eta_signs": list(rep.eta_signs),
        }
        if args.format == "table":
            for c in rep.classes:
                print(c)
            print(f"eta signs on omega(1), omega(2): {signs}")
            return EXIT_OK
        _emit(args.format, header, rows, json_obj)
        return EXIT_OK
    if sub == "compare":
        cc = gl2.compare_constants(args.l)
        header = ["ratio", "computed", "displayed"]
        rows = [
            ["T_st/T_alg (finite quotient)", _fmt_value(*cc.computed_plus), _fmt_value(*cc.displayed_plus)],
            ["T_st/T_alg (discrete series)", _fmt_value(*cc.computed_minus), _fmt_value(*cc.displayed_minus)],
        ]
        json_obj = {
            "l": cc.l,
            "eps": cc.eps,
            "computed": [_fmt_value(*cc.computed_plus), _fmt_value(*cc.computed_minus)],
            "displayed": [_fmt_value(*cc.displayed_plus), _fmt_value(*cc.displayed_minus)],
        }
        _emit(args.format, header, rows, json_obj)
        return EXIT_OK
    raise SystemExit(EXIT_USAGE)


def _parse_lam_flag(n: int, text: str) -> Weight:
    return weight_from_string(n, text)


def cmd_spectral(args) -> int:
    sub = args.spectral_cmd
    lam = _parse_lam_flag(args.n, args.lam)
    a, d = lam.gamma_coefficients()
    if sub == "params":
        params = spectral.spectral_params(a, d, args.n)
        rec = params.to_record()
        header = ["n", "a", "d", "b", "c", "l_wun", "b_n"]
        rows = [[
            args.n,
            ",".join(rec["a"]),
            rec["d"],
            ",".join(rec["b"]),
            ",".join(rec["c"]),
            rec["l_wun"],
            rec["b_n"],
        ]]
        _emit(args.format, header, rows, rec)
        return EXIT_OK
    if sub == "minktype":
        params = spectral.spectral_params(a, d, args.n)
        eps = args.eps
        kt = spectral.minimal_k_type(params, eps)
        json_obj = {"n": args.n, "eps": eps, "minimal_k_type": [str(x) for x in kt]}
        if args.format == "table":
            print(",".join(str(x) for x in kt))
            return EXIT_OK
        _emit(args.format, ["coefficients"], [[",".join(str(x) for x in kt)]], json_obj)
        return EXIT_OK
    if sub == "ucohom":
        hist = spectral.u_cohomology_degrees(a, d, args.n, max_rank=_max_rank(6))
        json_obj = {"n": args.n, "degrees": {str(k): v for k, v in sorted(hist.items())}}
        _emit(args.format, ["degree", "count"], [[k, v] for k, v in sorted(hist.items())], json_obj)
        return EXIT_OK
    raise SystemExit(EXIT_USAGE)


def cmd_factorize(args) -> int:
    lam = weight_from_string(args.N, args.lam)
    nprime = args.N - args.n
    warn = None
    if args.n % 2 == 0 and nprime % 2 == 0:
        warn = "warning: both blocks even; the rationality setting needs one even and one odd block"
    try:
        if args.w:
            datum, rep = fz.factorize(args.N, args.n, lam, w=perm_from_string(args.w))
        else:
            datum, rep = fz.factorize(args.N, args.n, lam)
    except fz.NotBalanced as exc:
        print(f"hypothesis (a) violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except fz.NotSelfDual as exc:
        print(f"hypothesis (b) violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except fz.NotNegativeChamber as exc:
        print(f"hypothesis (c) violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except fz.OddDU as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    rec = rep.to_record()
    if args.format == "json":
        print(json.dumps(rec, indent=2))
        return EXIT_OK
    header = ["k", "beta", "c", "h", "eps", "m"]
    rows = [[f.k, f"e{f.beta[0]}-e{f.beta[1]}", f.c, f.h, f.eps, f.m] for f in rep.factors]
    _emit(args.format, header, rows, rec)
    if args.format == "table":
        if warn:
            print(warn)
        print(f"w = {rep.w}, d_U = {rep.d_U}, even-h count = {rep.even_h_count}, sum m_k = {rep.total_mk}")
        print(f"order at z=0: {rep.order_at_zero}")
        print(f"leading value: {_fmt_value(rep.pi_half, rep.rational_value)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        rows = verify.run_suite(args.suite)
    except KeyError:
        print(f"unknown suite {args.suite!r}; choose from "
              f"{', '.join(sorted(verify.SUITES))}, all", file=sys.stderr)
        return EXIT_USAGE
    failures = [r for r in rows if not r[1]]
    width = max(len(name) for name, _, _ in rows)
    for name, ok, detail in rows:
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {name.ljust(width)}  {detail}")
    print(f"{len(rows) - len(failures)}/{len(rows)} checks passed")
    return EXIT_OK if not failures else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcz",
        description="Exact-arithmetic workbench for principal-series intertwining "
        "operators, Kostant combinatorics and Gamma-factor algebra on GL(N).",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("kostant", help="list Kostant representatives of a maximal parabolic")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--balanced", action="store_true", help="only length d_U/2 elements")
    p.add_argument("--lambda", dest="lam", default=None, help="weight 'a1,..,a_(N-1)[;d]' for the dot action column")
    add_format(p)
    p.set_defaults(func=cmd_kostant)

    p = sub.add_parser("betaseq", help="reduced word and beta-sequence of the longest representative")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_betaseq)

    p = sub.add_parser("dot", help="rho-shifted Weyl action on a weight")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--w", required=True, help="one-line permutation '[3,1,2]'")
    p.add_argument("--lambda", dest="lam", required=True)
    add_format(p)
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("gl2", help="rank-one module computations")
    gsub = p.add_subparsers(dest="gl2_cmd", required=True)
    g = gsub.add_parser("intertwine", help="K-type eigenvalue of the standard intertwiner")
    g.add_argument("--eps", type=int, choices=(0, 1), required=True)
    g.add_argument("--nu", type=int, required=True)
    g.add_argument("--at", default=None, help="evaluate at this rational z")
    add_format(g)
    g = gsub.add_parser("poles", help="pole set of the standard intertwiner")
    g.add_argument("--eps", type=int, choices=(0, 1), required=True)
    g.add_argument("--window", type=int, default=5)
    add_format(g)
    g = gsub.add_parser("lambda", help="composite scalar as a Gamma quotient")
    g.add_argument("--eps", type=int, choices=(0, 1), required=True)
    g.add_argument("--at", default=None)
    add_format(g)
    g = gsub.add_parser("cohomology", help="first relative Lie-algebra cohomology")
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--d", default="0")
    add_format(g)
    g = gsub.add_parser("compare", help="standard vs algebraic intertwiner constants")
    g.add_argument("--l", type=int, required=True)
    add_format(g)
    p.set_defaults(func=cmd_gl2)

    p = sub.add_parser("spectral", help="GL(n) spectral parameter layer")
    ssub = p.add_subparsers(dest="spectral_cmd", required=True)
    for name, hlp in (
        ("params", "cuspidal parameters, lowest degree, minimal K-types"),
        ("minktype", "minimal K-type highest weight"),
        ("ucohom", "u-cohomology degree histogram"),
    ):
        s = ssub.add_parser(name, help=hlp)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--lambda", dest="lam", required=True)
        if name == "minktype":
            s.add_argument("--eps", type=int, choices=(1, -1), default=1)
        add_format(s)
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("factorize", help="factorized intertwiner prefactor for a maximal parabolic")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--w", default=None, help="one-line permutation; default: first admissible balanced element")
    p.add_argument("--json", dest="as_json", action="store_true", help="shorthand for --format json")
    add_format(p)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "as_json", False):
        args.format = "json"
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
