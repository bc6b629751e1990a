"""Command-line front end.

Subcommands: closed-form, numeric, ls, binom-deriv, bell, constant,
verify-paper.  Global flags: --json, --tol, --max-terms, --digits.
Exit codes: 0 success, 1 computation failed to meet tolerance, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import binomderiv, integrals, verify
from .bell import complete_bell
from .numerics import (
    AccelerationError,
    NumericConfig,
    QuadratureError,
    zeta_numeric,
)
from .specialfn import zeta_bar1_numeric
from .symbolic import eval_numeric


def _common_flags(sub: argparse.ArgumentParser):
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument("--tol", type=float, default=1e-10, help="target absolute tolerance")
    sub.add_argument("--max-terms", type=int, default=10**6, help="series term budget")
    sub.add_argument(
        "--digits", type=int, default=15, help="significant digits printed (max 15)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logsine",
        description="Exact and numeric evaluation of generalized log-sine integrals.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser(
        "closed-form", help="integral of x^n log^p(sin x) over (0, z), z in {pi/2, pi}"
    )
    p.add_argument("--z", required=True, choices=["pi/2", "pi"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    _common_flags(p)

    p = subs.add_parser("numeric", help="quadrature of the defining integral at any z")
    p.add_argument("--z", required=True, help="angle: pi/2, pi, 2pi, or radians")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--form", choices=["logsin", "ls"], default="logsin")
    _common_flags(p)

    p = subs.add_parser("ls", help="log-sine integral at theta in {pi, 2pi}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", required=True, choices=["pi", "2pi"])
    _common_flags(p)

    p = subs.add_parser(
        "binom-deriv", help="d^p/dm^p of binom(2m, m+k) (optionally 4^-m scaled) at m=0"
    )
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--scaled", action="store_true")
    _common_flags(p)

    p = subs.add_parser("bell", help="complete Bell polynomial of a rational sequence")
    p.add_argument("--seq", required=True, help="comma-separated rationals, e.g. 1,1/2,3")
    _common_flags(p)

    p = subs.add_parser("constant", help="numeric value of a basis constant")
    p.add_argument("--name", required=True, help="pi, log2, zeta<n>, or zb1_<n>")
    _common_flags(p)

    p = subs.add_parser(
        "verify-paper", help="run the built-in reference identity suite"
    )
    p.add_argument("--filter", default=None, help="restrict to a group or id substring")
    _common_flags(p)

    return parser


def _config(args) -> NumericConfig:
    return NumericConfig(target_abs_tol=args.tol, max_series_terms=args.max_terms)


def _fmt(value: float, digits: int) -> str:
    return f"{value:.{min(max(digits, 1), 15)}g}"


def _parse_angle(text: str) -> str | float:
    if text in integrals.ANGLE_TOKENS:
        return text
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"cannot parse angle {text!r}") from None


def _emit_closed_form(ident: str, res: integrals.ClosedFormResult, args) -> None:
    if args.json:
        obj: dict = {"id": ident, "numeric": res.numeric, "status": "ok"}
        if res.exact:
            obj["exact"] = res.value.text()
        else:
            obj["abs_err"] = res.error
            obj["reason"] = res.reason
        print(json.dumps(obj, sort_keys=True))
        return
    if res.exact:
        print(f"exact:   {res.value.text()}")
        print(f"numeric: {_fmt(res.numeric, args.digits)}")
    else:
        print(f"numeric: {_fmt(res.numeric, args.digits)}  (error estimate {res.error:.1e})")
        print(f"note:    no exact form: {res.reason}")


def _cmd_closed_form(args) -> int:
    spec = integrals.IntegralSpec(args.n, args.p, args.z)
    res = integrals.log_sin_power_integral(spec, _config(args))
    _emit_closed_form(f"closed-form:z={args.z}:n={args.n}:p={args.p}", res, args)
    return 0


def _cmd_numeric(args) -> int:
    z = _parse_angle(args.z)
    spec = integrals.IntegralSpec(args.n, args.p, z, form=args.form)
    value = integrals.quadrature_value(spec, _config(args))
    ident = f"numeric:{args.form}:z={args.z}:n={args.n}:p={args.p}"
    if args.json:
        print(json.dumps({"id": ident, "numeric": value, "status": "ok"}, sort_keys=True))
    else:
        print(_fmt(value, args.digits))
    return 0


def _cmd_ls(args) -> int:
    res = integrals.log_sine_integral(args.p, args.n, args.theta, _config(args))
    _emit_closed_form(f"ls:theta={args.theta}:p={args.p}:n={args.n}", res, args)
    return 0


def _cmd_binom_deriv(args) -> int:
    spec = binomderiv.DerivSpec(args.p, args.k, args.scaled)
    sym = binomderiv.binom_deriv(spec)
    numeric = eval_numeric(sym, _config(args))
    ident = f"binom-deriv:p={args.p}:k={args.k}:scaled={args.scaled}"
    if args.json:
        print(
            json.dumps(
                {"id": ident, "exact": sym.text(), "numeric": numeric, "status": "ok"},
                sort_keys=True,
            )
        )
    else:
        print(f"exact:   {sym.text()}")
        print(f"numeric: {_fmt(numeric, args.digits)}")
    return 0


def _cmd_bell(args) -> int:
    seq = [Fraction(part) for part in args.seq.split(",") if part.strip()]
    value = complete_bell(seq, one=Fraction(1))
    if args.json:
        print(
            json.dumps(
                {"id": f"bell:n={len(seq)}", "exact": str(value), "status": "ok"},
                sort_keys=True,
            )
        )
    else:
        print(value)
    return 0


def _cmd_constant(args) -> int:
    name = args.name
    cfg = _config(args)
    if name == "pi":
        value = math.pi
    elif name == "log2":
        value = math.log(2.0)
    elif name.startswith("zeta"):
        value = zeta_numeric(int(name[4:]), cfg)
    elif name.startswith("zb1_"):
        value = zeta_bar1_numeric(int(name[4:]), cfg)
    else:
        raise ValueError(f"unknown constant {name!r}")
    if args.json:
        print(json.dumps({"id": f"constant:{name}", "numeric": value, "status": "ok"},
                         sort_keys=True))
    else:
        print(_fmt(value, args.digits))
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_verification(args.filter, _config(args))
    if args.json:
        print(json.dumps([r.to_json_obj() for r in results], sort_keys=True))
    else:
        for r in results:
            mark = "PASS" if r.status == "pass" else "FAIL"
            exact = f"  exact={r.exact}" if r.exact else ""
            print(
                f"[{mark}] {r.id}  value={_fmt(r.numeric, args.digits)} "
                f"|delta|={r.abs_err:.2e} tol={r.tol:.1e}{exact}"
            )
        passed = sum(1 for r in results if r.status == "pass")
        print(f"{passed}/{len(results)} identities passed")
    return 0 if verify.all_passed(results) else 1


_COMMANDS = {
    "closed-form": _cmd_closed_form,
    "numeric": _cmd_numeric,
    "ls": _cmd_ls,
    "binom-deriv": _cmd_binom_deriv,
    "bell": _cmd_bell,
    "constant": _cmd_constant,
    "verify-paper": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (AccelerationError, QuadratureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
