"""Command-line interface: evaluate, verify, run suites, expand.

    qpsi eval mu --u 0.3+0.1i --v 0.2 --alpha 1 --q 0.25
    qpsi verify THM11_1 --draws 50
    qpsi suite --seed 42 --q 0.2
    qpsi expand order3.f --order 10 --format csv

Exit codes: 0 success, 1 identity failure, 2 usage/parse error,
3 domain error (pole, divergence, non-convergence).  Identical command
plus seed produces byte-identical output.
"""

from __future__ import annotations

import argparse
import cmath
import json
import os
import re
import sys
from fractions import Fraction

from . import catalog, identities
from .errors import QpsiError, UnknownEntry, UnknownIdentity
from .mu import MuPoint, cont_q_hermite, mu, w_func
from .qcore import INF, QContext, pochhammer, theta_div, vartheta11
from .series import convergence_check, eval_series, phi, psi

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

_COMPLEX_RE = re.compile(
    r"""^\s*
    (?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?
    (?P<im>[+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)?
    (?P<i>i)?\s*$""",
    re.VERBOSE,
)


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' literals (either part optional, exponents allowed)."""
    s = text.strip()
    if not s:
        raise ValueError("empty complex literal")
    m = _COMPLEX_RE.match(s)
    if not m or (m.group("re") is None and m.group("i") is None):
        raise ValueError(f"cannot parse complex literal {text!r}")
    if m.group("i"):
        if m.group("im") is not None:
            real = float(m.group("re")) if m.group("re") else 0.0
            imtxt = m.group("im")
            imag = float(imtxt) if imtxt not in ("+", "-") \
                else float(imtxt + "1")
            return complex(real, imag)
        # pure imaginary: the "real" group holds the coefficient
        retxt = m.group("re")
        return complex(0.0, float(retxt) if retxt else 1.0)
    if m.group("im") is not None:
        raise ValueError(f"cannot parse complex literal {text!r}")
    return complex(float(m.group("re")), 0.0)


def _build_context(args) -> QContext:
    if getattr(args, "q", None) is not None and \
            getattr(args, "tau", None) is not None:
        raise ValueError("give exactly one of --q / --tau")
    max_terms = int(os.environ.get("QPSI_MAX_TERMS", 5000))
    kw = {"tol": args.tol, "max_terms": max_terms}
    if getattr(args, "tau", None) is not None:
        tau = parse_complex(args.tau)
        if not tau.imag > 0:
            raise ValueError("tau needs positive imaginary part")
        return QContext(tau=tau, **kw)
    if getattr(args, "q", None) is not None:
        q = parse_complex(args.q)
        if not 0 < abs(q) < 1:
            raise ValueError("need 0 < |q| < 1")
        return QContext.from_q(q, **kw)
    raise ValueError("this command needs --q or --tau")


def _optional_context(args):
    if getattr(args, "q", None) is None and \
            getattr(args, "tau", None) is None:
        return None
    return _build_context(args)


def _collect_params(extras):
    """Turn leftover '--key value' tokens into {key: [values...]}."""
    params = {}
    i = 0
    while i < len(extras):
        tok = extras[i]
        if not tok.startswith("--") or len(tok) == 2:
            raise ValueError(f"unexpected argument {tok!r}")
        key = tok[2:].replace("-", "_")
        if "=" in key:
            key, val = key.split("=", 1)
        else:
            i += 1
            if i >= len(extras):
                raise ValueError(f"flag --{key} needs a value")
            val = extras[i]
        params.setdefault(key, []).append(val)
        i += 1
    return params


def _one(params, key, default=None):
    vals = params.get(key)
    if not vals:
        if default is not None:
            return default
        raise ValueError(f"missing required parameter --{key}")
    if len(vals) > 1:
        raise ValueError(f"parameter --{key} given more than once")
    return vals[0]


def _emit(args, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")


def _cx_str(z: complex) -> str:
    return f"{z.real:.15g}{z.imag:+.15g}i"


def cmd_eval(args, extras) -> int:
    params = _collect_params(extras)
    ctx = _build_context(args)
    name = args.name
    payload = {"name": name}

    if name == "pochhammer":
        a = parse_complex(_one(params, "a"))
        ntxt = _one(params, "n", "inf")
        n = INF if ntxt == "inf" else int(ntxt)
        val = pochhammer(ctx, a, n)
        payload.update(value=_cx_str(val.value),
                       truncation_terms=val.truncation_terms,
                       tail_bound=val.tail_bound)
    elif name == "theta":
        y = parse_complex(_one(params, "y"))
        payload.update(value=_cx_str(theta_div(ctx, y)))
    elif name == "vartheta11":
        u = parse_complex(_one(params, "u"))
        payload.update(value=_cx_str(vartheta11(ctx, u)))
    elif name in ("phi", "psi"):
        upper = [parse_complex(t) for t in params.get("upper", [])]
        lower = [parse_complex(t) for t in params.get("lower", [])]
        x = parse_complex(_one(params, "x"))
        spec = (phi if name == "phi" else psi)(upper, lower, x)
        status = convergence_check(ctx, spec)
        if status == "DIVERGENT":
            raise QpsiError(
                "divergent: the argument lies outside the convergence "
                "annulus (|x| >= 1 or beyond the parameter bound)")
        report = eval_series(ctx, spec)
        payload.update(value=_cx_str(report.value),
                       window=[report.n_min, report.n_max],
                       tail_estimate=report.tail_estimate,
                       convergence=status)
    elif name == "mu":
        u = parse_complex(_one(params, "u"))
        v = parse_complex(_one(params, "v"))
        alpha = parse_complex(_one(params, "alpha", "1"))
        value = mu(MuPoint(u, v, alpha, ctx))
        rep = value.report
        payload.update(value=_cx_str(value.value),
                       representation=value.representation.name,
                       window=[rep.n_min, rep.n_max],
                       tail_estimate=rep.tail_estimate)
    elif name == "w":
        a = parse_complex(_one(params, "a"))
        b = parse_complex(_one(params, "b"))
        c = parse_complex(_one(params, "c"))
        payload.update(value=_cx_str(w_func(ctx, a, b, c)))
    elif name == "hermite":
        k = int(_one(params, "k"))
        w = parse_complex(_one(params, "w"))
        payload.update(value=_cx_str(cont_q_hermite(ctx, k, w)))
    elif name == "wp_diff":
        from .elliptic import (EllipticContext, wp_diff_bailey,
                               wp_diff_bilateral, wp_diff_oracle,
                               wp_diff_psi26, wp_diff_split)
        ec = EllipticContext(ctx)
        u = parse_complex(_one(params, "u"))
        v = parse_complex(_one(params, "v"))
        form = _one(params, "form", "oracle")
        fns = {"oracle": wp_diff_oracle, "psi26": wp_diff_psi26,
               "bilateral": wp_diff_bilateral, "split": wp_diff_split,
               "bailey": wp_diff_bailey}
        if form not in fns:
            raise ValueError(f"unknown wp_diff form {form!r}")
        payload.update(value=_cx_str(fns[form](ec, u, v)), form=form)
    elif name == "jacobi_combo":
        from .elliptic import EllipticContext, jacobi_combo_forms
        ec = EllipticContext(ctx)
        u = parse_complex(_one(params, "u"))
        f1, f2, f3 = jacobi_combo_forms(ec, u)
        payload.update(psi48=_cx_str(f1), bilateral=_cx_str(f2),
                       split=_cx_str(f3))
    else:
        raise ValueError(f"unknown eval target {name!r}")

    _emit(args, payload)
    return EXIT_OK


def _suite_payload(reports, catalog_reports=None):
    payload = {"identities": [r.to_dict() for r in reports]}
    ok = all(r.status == "pass" for r in reports)
    if catalog_reports is not None:
        payload["catalog"] = [r.to_dict() for r in catalog_reports]
        ok = ok and all(r.status in ("pass", "pass_with_findings")
                        for r in catalog_reports)
    payload["all_pass"] = ok
    return payload, ok


def _write_report(args, payload):
    text = json.dumps(payload, sort_keys=True, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    if args.format == "json" or not args.output:
        print(text)
    else:
        print(f"report written to {args.output}")


def cmd_verify(args, extras) -> int:
    if extras:
        raise ValueError(f"unexpected arguments {extras!r}")
    ctx = _optional_context(args)
    id_reports, cat_reports = [], []
    for ident in args.ids:
        if "." in ident:
            cat_reports.append(catalog.verify_entry(ident, args.order))
        else:
            id_reports.append(identities.verify(
                ctx, ident, seed=args.seed, draws=args.draws))
    payload, ok = _suite_payload(id_reports, cat_reports or None)
    _write_report(args, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_suite(args, extras) -> int:
    if extras:
        raise ValueError(f"unexpected arguments {extras!r}")
    ctx = _optional_context(args)
    ids = args.ids if args.ids else None
    reports = identities.run_suite(ctx, ids=ids, seed=args.seed,
                                   draws=args.draws)
    cat_reports = None
    if not args.skip_catalog:
        cat_reports = catalog.verify_all(
            args.order, half_power_order=Fraction(args.order, 2))
    payload, ok = _suite_payload(reports, cat_reports)
    _write_report(args, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_expand(args, extras) -> int:
    if extras:
        raise ValueError(f"unexpected arguments {extras!r}")
    series = catalog.expand(args.name, args.order)
    if args.format == "csv":
        sys.stdout.write(series.to_csv())
    elif args.format == "json":
        pairs = [[str(k), str(c)] for k, c in series.terms()]
        print(json.dumps(pairs))
    else:
        print(str(series))
    return EXIT_OK


def _add_common(p, with_order=True):
    p.add_argument("--q", help="nome as a complex literal 'a+bi'")
    p.add_argument("--tau", help="upper-half-plane tau as 'a+bi'")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--draws", type=int, default=20)
    if with_order:
        p.add_argument("--order", type=int, default=40)
    p.add_argument("--format", choices=("json", "csv", "text"),
                   default="text")
    p.add_argument("--output", help="write the JSON report to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpsi",
        description="q-series toolkit: evaluate, verify, expand")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a named function")
    p_eval.add_argument("name")
    _add_common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify",
                              help="verify named identities or entries")
    p_verify.add_argument("ids", nargs="+")
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_suite = sub.add_parser("suite", help="run the full verification suite")
    p_suite.add_argument("--ids", nargs="*", default=None)
    p_suite.add_argument("--skip-catalog", action="store_true")
    _add_common(p_suite)
    p_suite.set_defaults(func=cmd_suite)

    p_expand = sub.add_parser("expand", help="expand a catalog entry")
    p_expand.add_argument("name")
    _add_common(p_expand)
    p_expand.set_defaults(func=cmd_expand)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args, extras = parser.parse_known_args(argv)
    try:
        return args.func(args, extras)
    except (UnknownIdentity, UnknownEntry, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QpsiError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
