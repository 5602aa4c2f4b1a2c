"""Command-line front end.

Every operation is exposed as a subcommand with machine-readable output:
JSON by default, CSV or plain text on request.  Numeric flags are parsed
as exact rationals (plain decimals allowed, scientific notation rejected).
Exit codes: 0 success, 2 usage error, 3 computation error (structured
error object on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

import mpmath as mp

from . import oracle, psi, s2, s3, weights
from .errors import ZetaRpaError
from .exact import bernoulli, format_rational, parse_rational
from .pade import pade

ENV_PRECISION = "ZETA_RPA_PRECISION"


def _rat(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(payload, args) -> None:
    fmt = args.format
    if fmt == "json":
        text = json.dumps(payload, indent=2)
    elif fmt == "csv":
        rows = payload if isinstance(payload, list) else [payload]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        text = buf.getvalue().rstrip("\n")
    elif fmt == "text":
        if isinstance(payload, list):
            text = "\n".join(str(r) for r in payload)
        elif isinstance(payload, dict) and "value" in payload:
            text = str(payload["value"])
        else:
            text = str(payload)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_common(p: argparse.ArgumentParser) -> None:
    default_prec = int(os.environ.get(ENV_PRECISION, "128"))
    p.add_argument("--precision", type=int, default=default_prec,
                   help="working precision in bits (default 128, env ZETA_RPA_PRECISION)")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--out", default=None, help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="zetarpa", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", help="Bernoulli number B_k")
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("pade", help="Pade approximant of an explicit series or of the kernel")
    p.add_argument("--series", help="comma-separated rational coefficients c0,c1,...")
    p.add_argument("--psi-s", type=_rat, help="use the kernel series at this rational s instead")
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("rpa-symbolic", help="remainder approximant with s kept symbolic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("rpa-eval", help="remainder approximant at rational s, a")
    p.add_argument("--s", type=_rat, required=True)
    p.add_argument("--a", type=_rat, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("rpa-table", help="convergence table of [m+p/m] approximants")
    p.add_argument("--s", type=_rat, required=True)
    p.add_argument("--a", type=_rat, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--mmax", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("s2-apery", help="exact v/u pair for zeta(2) with scalings and bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("s3-apery", help="exact f/g pair for zeta(3) with scalings and bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("s3-apery-crosscheck",
                       help="compare the [2m-1/2m] pipeline with the classical sequence")
    p.add_argument("--mmax", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("weights-verify", help="integral representation of zeta(s, a)")
    p.add_argument("--s", type=_rat, required=True)
    p.add_argument("--a", type=_rat, required=True)
    _add_common(p)

    p = sub.add_parser("weights-moments", help="weight moments against Bernoulli targets")
    p.add_argument("--s", type=_rat, required=True)
    p.add_argument("--kmax", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("rates-scan", help="admissibility window of the rate functions")
    p.add_argument("--case", choices=["s2", "s3"], required=True)
    p.add_argument("--lo", type=_rat, required=True)
    p.add_argument("--hi", type=_rat, required=True)
    p.add_argument("--step", type=_rat, default=Fraction(1, 100))
    _add_common(p)

    p = sub.add_parser("oracle-zeta", help="reference zeta(s, a)")
    p.add_argument("--s", type=_rat, required=True)
    p.add_argument("--a", type=_rat, required=True)
    _add_common(p)

    return top


def _cmd_bernoulli(args):
    return {"k": args.k, "value": format_rational(bernoulli(args.k))}


def _cmd_pade(args):
    if (args.series is None) == (args.psi_s is None):
        raise ZetaRpaError("give exactly one of --series or --psi-s")
    if args.series is not None:
        coeffs = [parse_rational(t) for t in args.series.split(",")]
    else:
        coeffs = psi.psi_series(args.m1 + args.m2 + 1, args.psi_s)
    return pade(coeffs, args.m1, args.m2).to_json()


def _cmd_rpa_symbolic(args):
    return psi.rpa_symbolic(args.n, args.a, args.m1, args.m2).to_json()


def _cmd_rpa_eval(args):
    r = psi.rpa_numeric(args.s, args.a, args.n, args.m1, args.m2, args.precision)
    return r.to_json()


def _cmd_rpa_table(args):
    rows = psi.convergence_table(args.s, args.a, args.n, args.p, args.mmax, args.precision)
    return [r.to_json() for r in rows]


def _pair_payload(pair, scaled, bound, error, prec):
    names = list(pair.to_json().items())
    out = dict(names)
    out["scaled_u" if "u" in out else "scaled_g"] = str(scaled[0])
    out["scaled_v" if "v" in out else "scaled_f"] = str(scaled[1])
    out["bound"] = mp.nstr(bound, 10)
    out["error"] = mp.nstr(error, 10)
    return out


def _cmd_s2_apery(args):
    pair = s2.zeta2_approx(args.n, args.m)
    scaled = s2.integrality_s2(args.n, args.m)
    bound = s2.error_bound_s2(args.n, args.m, args.precision)
    with mp.workprec(args.precision + 16):
        ref = oracle.constants("zeta2", args.precision + 16)
        err = abs(ref - mp.mpf(pair.value.numerator) / pair.value.denominator)
    return _pair_payload(pair, scaled, bound, err, args.precision)


def _cmd_s3_apery(args):
    pair = s3.zeta3_approx(args.n, args.m)
    scaled = s3.integrality_s3(args.n, args.m)
    bound = s3.error_bound_s3(args.n, args.m, args.precision)
    with mp.workprec(args.precision + 16):
        ref = oracle.constants("zeta3", args.precision + 16)
        err = abs(ref - mp.mpf(pair.value.numerator) / pair.value.denominator)
    return _pair_payload(pair, scaled, bound, err, args.precision)


def _cmd_s3_crosscheck(args):
    return s3.apery_crosscheck(args.mmax, args.precision)


def _cmd_weights_verify(args):
    cfg = weights.QuadratureConfig(precision_bits=args.precision)
    rhs, err = weights.theorem1_check(args.s, args.a, cfg)
    ref = oracle.zeta_ref(args.s, args.a,
                          oracle.OracleConfig(precision_bits=args.precision + 16))
    digits = max(8, int(args.precision / 3.5))
    return {"rhs": mp.nstr(rhs, digits), "oracle": mp.nstr(ref, digits),
            "abs_err": mp.nstr(err, 8)}


def _cmd_weights_moments(args):
    cfg = weights.QuadratureConfig(precision_bits=args.precision)
    rows = []
    for k in range(0, args.kmax + 1, 2):
        integral, target = weights.bernoulli_moment_check(args.s, k, cfg)
        with mp.workprec(args.precision + 16):
            tf = mp.mpf(target.numerator) / target.denominator
            rel = abs(integral - tf) / abs(tf)
        rows.append({"k": k, "integral": mp.nstr(integral, 15),
                     "target": format_rational(target), "rel_err": mp.nstr(rel, 6)})
    return rows


def _cmd_rates_scan(args):
    rate = s2.rate_s2 if args.case == "s2" else s3.rate_s3
    lo, hi, step = args.lo, args.hi, args.step
    samples = []
    r = lo
    admissible = []
    while r <= hi:
        rep = rate(r, args.precision)
        samples.append({"r": format_rational(r), "contraction": mp.nstr(rep.contraction, 8),
                        "admissible": rep.admissible})
        if rep.admissible:
            admissible.append(r)
        r += step
    if not admissible:
        return {"case": args.case, "admissible_lo": None, "admissible_hi": None,
                "samples": samples}

    def refine(a: Fraction, b: Fraction, want_inside_right: bool) -> Fraction:
        # bisect the admissibility boundary between a (outside) and b (inside)
        for _ in range(40):
            mid = (a + b) / 2
            if rate(mid, args.precision).admissible == want_inside_right:
                b = mid
            else:
                a = mid
            if b - a < Fraction(1, 10 ** 6):
                break
        return (a + b) / 2

    lo_edge = refine(max(lo, admissible[0] - step), admissible[0], True)
    hi_edge = refine(admissible[-1] + step if admissible[-1] + step <= hi else hi,
                     admissible[-1], True)
    return {
        "case": args.case,
        "admissible_lo": mp.nstr(mp.mpf(lo_edge.numerator) / lo_edge.denominator, 6),
        "admissible_hi": mp.nstr(mp.mpf(hi_edge.numerator) / hi_edge.denominator, 6),
        "samples": samples,
    }


def _cmd_oracle_zeta(args):
    cfg = oracle.OracleConfig(precision_bits=args.precision)
    val = oracle.zeta_ref(args.s, args.a, cfg)
    digits = max(1, int(args.precision * 0.30102))  # bits -> decimal digits
    return {"s": format_rational(args.s), "a": format_rational(args.a),
            "value": mp.nstr(val, digits), "digits": digits}


_HANDLERS = {
    "bernoulli": _cmd_bernoulli,
    "pade": _cmd_pade,
    "rpa-symbolic": _cmd_rpa_symbolic,
    "rpa-eval": _cmd_rpa_eval,
    "rpa-table": _cmd_rpa_table,
    "s2-apery": _cmd_s2_apery,
    "s3-apery": _cmd_s3_apery,
    "s3-apery-crosscheck": _cmd_s3_crosscheck,
    "weights-verify": _cmd_weights_verify,
    "weights-moments": _cmd_weights_moments,
    "rates-scan": _cmd_rates_scan,
    "oracle-zeta": _cmd_oracle_zeta,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = _HANDLERS[args.command](args)
    except ZetaRpaError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err), file=sys.stderr)
        return 3
    _emit(payload, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
