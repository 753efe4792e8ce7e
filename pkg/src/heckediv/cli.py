"""Command-line front-end with bit-exact JSON output.

Verbs: qexp, hecke-add, hecke-mult, algebra-mul, divisor, hecke-div, bko,
rohrlich, niebur, verify.  Exact verbs emit rationals as "num/den" strings
and never print floating point; numeric verbs embed their evaluation
parameters in the output so runs are reproducible.  Exit codes: 0 success
(all checks pass for `verify`), 1 computation error or failed check,
2 usage error.

The HECKEDIV_DIGITS environment variable sets the default working
precision (decimal digits) of the numeric verbs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import algebra, curve, forms, niebur, operators, pairing, verify
from .errors import HeckeDivError
from .niebur import EvalParams


def _default_digits() -> int:
    try:
        return int(os.environ.get("HECKEDIV_DIGITS", "30"))
    except ValueError:
        return 30


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
        return
    # table: flat key/value or one line per report
    if isinstance(payload, list):
        for row in payload:
            status = "PASS" if row.get("passed") else "FAIL"
            tol = f" (tol {row['tolerance']})" if row.get("tolerance") else ""
            print(f"{status}  {row['name']}{tol}")
            if not row.get("passed"):
                print(f"      lhs: {row['lhs']}")
                print(f"      rhs: {row['rhs']}")
    elif isinstance(payload, dict):
        for k, v in payload.items():
            print(f"{k}: {json.dumps(v) if not isinstance(v, str) else v}")
    else:
        print(payload)


def _parse_element(text: str, N: int) -> algebra.AlgebraElement:
    text = text.strip()
    if text.startswith("T(") and text.endswith(")"):
        inside = text[2:-1]
        if "," in inside:
            a, d = inside.split(",")
            return algebra.t_ad(int(a), int(d), N)
        return algebra.t_n(int(inside), N)
    if text.startswith("T"):
        return algebra.t_n(int(text[1:]), N)
    raise ValueError(f"cannot parse Hecke element {text!r}; use Tn or T(a,d)")


def _parse_tau(text: str) -> complex:
    re_s, im_s = text.split(",")
    return complex(float(re_s), float(im_s))


def _mpc_pair(value, digits: int) -> list[str]:
    import mpmath
    z = mpmath.mpc(value)
    return [mpmath.nstr(mpmath.re(z), digits), mpmath.nstr(mpmath.im(z), digits)]


def build_parser() -> argparse.ArgumentParser:
    # --format is accepted both before and after the verb; the subparser
    # copy must not clobber a value given up front, hence SUPPRESS
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"),
                        default=argparse.SUPPRESS)
    ap = argparse.ArgumentParser(
        prog="heckediv",
        description="Exact Hecke operators, divisors on X_0(N), and the "
                    "divisor-sum verification suites.")
    ap.add_argument("--format", choices=("json", "table"), default="json")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("qexp", help="q-expansion of a registered form")
    p.add_argument("--form", required=True)
    p.add_argument("--prec", type=int, default=20)

    p = add_parser("hecke-add", help="additive Hecke image f|_k T(n)")
    p.add_argument("--form", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--prec", type=int, default=20)
    p.add_argument("--normalization", choices=("normalized", "classical"),
                   default="normalized")

    p = add_parser("hecke-mult", help="multiplicative Hecke image f|_* T(n)")
    p.add_argument("--form", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--prec", type=int, default=20)

    p = add_parser("algebra-mul", help="product in the Hecke algebra R_0(N)")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)

    p = add_parser("divisor", help="divisor of a form on X_0(level)")
    p.add_argument("--form", required=True)
    p.add_argument("--level", type=int, default=1)

    p = add_parser("hecke-div", help="T(n) applied to div(form)")
    p.add_argument("--form", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, default=1)

    p = add_parser("bko", help="(j_n, f)_BKO pairing, level 1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--digits", type=int, default=None)

    p = add_parser("rohrlich", help="R_{N,m}(s; f): exact at s=1, numeric for s>1")
    p.add_argument("--N", type=int, default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--form", required=True)
    p.add_argument("--C", type=int, default=300)
    p.add_argument("--digits", type=int, default=None)

    p = add_parser("niebur", help="Niebur-Poincare series value F_{N,-m}(tau, s)")
    p.add_argument("--N", type=int, default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tau", required=True, help="complex point 're,im'")
    p.add_argument("--C", type=int, default=300)
    p.add_argument("--digits", type=int, default=None)

    p = add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=verify.SUITES + ("all",))
    return ap


def _run(args) -> tuple[object, int]:
    digits = getattr(args, "digits", None) or _default_digits()
    if args.verb == "qexp":
        return forms.form_by_name(args.form, args.prec).to_json(), 0

    if args.verb == "hecke-add":
        expr = forms.expression_by_name(args.form)
        k = expr.weight
        series = expr.qexp(max(args.prec * args.n + 8, 16))
        if args.level == 1:
            img = operators.hecke_additive_formula(series, k, args.n,
                                                   normalization=args.normalization)
        else:
            img = operators.hecke_additive_cosets(series, k, args.n, args.level)
            if args.normalization == "classical":
                img = img * Fraction(args.n) ** (k // 2 - 1)
        if img.precision > args.prec:
            img = img.truncate(Fraction(img.order + args.prec, img.D))
        return img.to_json(), 0

    if args.verb == "hecke-mult":
        expr = forms.expression_by_name(args.form)
        img = operators.hecke_multiplicative(expr, args.n, args.level,
                                             prec=args.prec)
        atom = img.atoms[0][0]
        payload = atom.series.to_json()
        payload["weight"] = img.weight
        payload["level"] = args.level
        return payload, 0

    if args.verb == "algebra-mul":
        u = _parse_element(args.u, args.N)
        v = _parse_element(args.v, args.N)
        return algebra.algebra_multiply(u, v).to_json(), 0

    if args.verb == "divisor":
        expr = forms.expression_by_name(args.form)
        return curve.divisor_of_form(expr, args.level).to_json(), 0

    if args.verb == "hecke-div":
        expr = forms.expression_by_name(args.form)
        D = curve.divisor_of_form(expr, args.level)
        return curve.hecke_divisor(args.n, D, args.level).to_json(), 0

    if args.verb == "bko":
        expr = forms.expression_by_name(args.form)
        res = pairing.bko_pairing(args.n, expr, digits=digits)
        exact = pairing.r_at_s1(1, args.n, expr)
        return {"n": args.n, "form": args.form,
                "value": _mpc_pair(res.value, digits),
                "exact_s1": str(exact), "digits": digits}, 0

    if args.verb == "rohrlich":
        expr = forms.expression_by_name(args.form)
        if args.s == 1.0:
            val = pairing.r_at_s1(args.N, args.m, expr)
            return {"N": args.N, "m": args.m, "s": "1", "exact": True,
                    "value": str(val)}, 0
        params = EvalParams(truncation=args.C, digits=min(digits, 15), s=args.s)
        res = pairing.r_numeric(args.N, args.m, args.s, expr, params)
        return {"N": args.N, "m": args.m, "s": args.s, "exact": False,
                "value": _mpc_pair(res.value, digits),
                "C": args.C}, 0

    if args.verb == "niebur":
        tau = _parse_tau(args.tau)
        params = EvalParams(truncation=args.C, digits=min(digits, 15), s=args.s)
        pv = niebur.niebur_value(args.N, args.m, tau, params)
        return {"value": _mpc_pair(pv.value, 17),
                "error": f"{pv.error_estimate:.6g}", "C": args.C}, 0

    if args.verb == "verify":
        names = verify.SUITES if args.suite == "all" else (args.suite,)
        reports = []
        for name in names:
            reports.extend(r.to_json() for r in verify.run_suite(name))
        code = 0 if all(r["passed"] for r in reports) else 1
        return reports, code

    raise ValueError(f"unhandled verb {args.verb}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, code = _run(args)
    except HeckeDivError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, args.format)
        return 1
    _emit(payload, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
