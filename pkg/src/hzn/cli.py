"""Command-line front end: point evaluation, identity verification, the
special-value table, and method benchmarking with machine-readable output.

Exit codes: 0 success / all checks passed, 1 a backend reported a
mathematical or precondition failure, 2 usage or parse error.

JSON output is canonical: keys in fixed order, numbers with 17
significant digits, no volatile fields (timings only with --timing or in
bench output), so identical inputs produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from typing import Optional

import numpy as np

from . import closedform as cf
from . import series as sr
from .errors import HznError
from .identity import (
    TABLE1_ROWS,
    IdentityReport,
    UnknownIdentityError,
    get_identity,
    list_identities,
    run_identity,
    table1_oracle,
    _draw_point,
    _sample_until,
)
from .quadrature import QuadConfig, ValueWithError, integrate_f, integrate_f3, integrate_fk, integrate_j

log = logging.getLogger("hzn")

SCHEMA_VERSION = 1

_LOG_LEVELS = {"error": logging.ERROR, "warn": logging.WARNING,
               "info": logging.INFO, "debug": logging.DEBUG}


def _setup_logging() -> None:
    level = os.environ.get("HZN_LOG_LEVEL", "warn").strip().lower()
    logging.basicConfig(stream=sys.stderr, level=_LOG_LEVELS.get(level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


# ----- canonical serialization -----

def _json_scalar(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    return json.dumps(x, ensure_ascii=False)


def dumps_canonical(obj) -> str:
    """Deterministic JSON with 17-significant-digit numbers."""
    if isinstance(obj, dict):
        parts = (f"{json.dumps(str(k))}: {dumps_canonical(v)}" for k, v in obj.items())
        return "{" + ", ".join(parts) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps_canonical(v) for v in obj) + "]"
    return _json_scalar(obj)


def _cval(z: Optional[complex]):
    if z is None:
        return None
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' / 'a-bi' / 'a' / 'bi' complex literals."""
    s = text.strip().replace(" ", "")
    if not s:
        raise argparse.ArgumentTypeError("empty complex literal")
    try:
        if s.endswith(("i", "I", "j", "J")):
            body = s[:-1]
            split = -1
            for pos in range(len(body) - 1, 0, -1):
                if body[pos] in "+-" and body[pos - 1] not in "eE":
                    split = pos
                    break
            if split > 0:
                re_part, im_part = body[:split], body[split:]
            else:
                re_part, im_part = "0", body
            if im_part in ("", "+"):
                im = 1.0
            elif im_part == "-":
                im = -1.0
            else:
                im = float(im_part)
            return complex(float(re_part) if re_part else 0.0, im)
        return complex(float(s), 0.0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse complex literal {text!r}") from None


def format_complex(z: complex) -> str:
    re = format(z.real, ".17g")
    im = format(abs(z.imag), ".17g")
    sign = "+" if z.imag >= 0 else "-"
    return f"{re}{sign}{im}i"


# ----- eval -----

_CLOSED_ERR_COEFF = 2e-13  # coarse bound for accumulated polylog rounding


def _closed_record(value: complex, evaluations: int = 1) -> ValueWithError:
    return ValueWithError(
        value=value,
        abs_err=_CLOSED_ERR_COEFF * (1.0 + abs(value)),
        method="closed_form",
        evaluations=evaluations,
    )


def _eval_one(function: str, method: str, z, u, v, w, k: int, p: int, q: int,
              cfg: QuadConfig, scfg: sr.SeriesConfig) -> ValueWithError:
    if function == "J":
        if method != "quad":
            raise HznError("J(z) supports only the quadrature method")
        return integrate_j(z, cfg)
    if function == "F":
        if method == "quad":
            return integrate_f(z, u, v, cfg)
        if method == "series":
            return sr.series_fk(z, u, v, 1, scfg)
        if u == 1:
            if p != 1:
                raise HznError("closed form with u = 1 needs p = 1 (argument 1/q)")
            return _closed_record(cf.fk_u1_at_1_over_n(v, 1, q), q)
        return _closed_record(cf.f_at_m_over_n(u, v, p, q), p * q)
    if function == "Fk":
        if method == "quad":
            return integrate_fk(z, u, v, k, cfg)
        if method == "series":
            return sr.series_fk(z, u, v, k, scfg)
        if p != 1:
            raise HznError("closed forms for F_k exist at arguments 1/q only (need p = 1)")
        if u == 1:
            return _closed_record(cf.fk_u1_at_1_over_n(v, k, q), q)
        if q == 1:
            return _closed_record(cf.fk_at_1(u, v, k) if u != v else cf.fk_at_1_uu(u, k))
        return _closed_record(cf.fk_at_1_over_n(u, v, k, q), q)
    if function == "F3":
        if w is None:
            raise HznError("F3 requires --w")
        if method == "quad":
            return integrate_f3(z, u, v, w, cfg)
        if method == "series":
            return sr.series_f3(z, u, v, w, scfg)
        if u == 1 and w == 1:
            if p != 1:
                raise HznError("closed form with u = w = 1 needs p = 1")
            root = cf.principal_root(v, q)
            return _closed_record(cf.f3_u1_at_1_over_n(root, q), q)
        if u == w:
            if p != 1:
                raise HznError("closed form with u = w needs p = 1")
            if q == 1:
                val = cf.f_at_1_uuu(u) if u == v else cf.f3_at_1_uvu(u, v)
                return _closed_record(val)
            root = cf.principal_root(v, q)
            return _closed_record(cf.f3_at_1_over_n_uvu(u, root, q), q)
        return _closed_record(cf.f3_at_p_over_q(u, v, w, p, q), q * p * p)
    raise HznError(f"unknown function {function!r}")


def _record_dict(function, method, z, u, v, w, k, p, q, res: ValueWithError,
                 wall_ns: Optional[int], timing: bool) -> dict:
    rec = {
        "schema_version": SCHEMA_VERSION,
        "function": function,
        "method": res.method,
        "params": {
            "z": _cval(z), "u": _cval(u), "v": _cval(v), "w": _cval(w),
            "k": k, "p": p, "q": q,
        },
        "value": _cval(res.value),
        "abs_err": res.abs_err,
        "evaluations": res.evaluations,
        "accuracy_warning": res.accuracy_warning,
    }
    if timing and wall_ns is not None:
        rec["wall_time_ns"] = wall_ns
    return rec


def cmd_eval(args) -> int:
    if (args.p is not None) != (args.q is not None):
        _usage_error("--p and --q must be given together")
    if args.p is not None:
        if args.z is not None and complex(args.z) != complex(args.p / args.q):
            _usage_error("--z conflicts with --p/--q")
        z = args.p / args.q
        p, q = args.p, args.q
    else:
        z = args.z if args.z is not None else 1.0
        p, q = (1, 1) if complex(z) == 1 else (None, None)
    u, v, w, k = args.u, args.v, args.w, args.k
    cfg = QuadConfig(target_abs_err=args.tol) if args.tol else QuadConfig()
    scfg = sr.SeriesConfig(tol=args.tol) if args.tol else sr.SeriesConfig()

    methods = [args.method]
    if args.method == "all":
        methods = ["quad"]
        if args.function in ("F", "Fk", "F3"):
            if all(abs(complex(x)) < 1 for x in (u, v) if x is not None) and (
                args.function != "F3" or (w is not None and abs(complex(w)) < 1)
            ):
                methods.append("series")
            if p is not None:
                methods.append("closed")
    records = []
    values = {}
    for method in methods:
        if method == "closed" and p is None:
            raise HznError("closed form needs a rational argument: pass --p and --q")
        t0 = time.perf_counter_ns()
        res = _eval_one(args.function, method, z, u, v, w, k, p or 1, q or 1, cfg, scfg)
        wall = time.perf_counter_ns() - t0
        values[method] = res
        records.append(_record_dict(args.function, method, z, u, v, w, k, p, q,
                                    res, wall, args.timing))
    names = list(values)
    disagreements = []
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            delta = abs(values[a].value - values[b].value)
            budget = values[a].abs_err + values[b].abs_err
            disagreements.append({
                "type": "disagreement",
                "methods": [values[a].method, values[b].method],
                "abs_difference": delta,
                "error_budget": budget,
                "consistent": bool(delta <= max(budget, 1e-11)),
            })

    out = _open_out(args.out)
    try:
        if args.format == "json":
            payload = records if len(records) > 1 or disagreements else records[0]
            if disagreements:
                payload = records + disagreements
            out.write(dumps_canonical(payload) + "\n")
        elif args.format == "csv":
            _write_eval_csv(out, records)
        else:
            for rec in records:
                val = complex(rec["value"]["re"], rec["value"]["im"])
                line = (f"{rec['function']} [{rec['method']}] = {format_complex(val)}"
                        f"  (abs_err <= {rec['abs_err']:.3e}, {rec['evaluations']} evaluations)")
                if rec.get("accuracy_warning"):
                    line += "  [accuracy warning]"
                out.write(line + "\n")
            for d in disagreements:
                out.write(
                    f"|{d['methods'][0]} - {d['methods'][1]}| = {d['abs_difference']:.3e}"
                    f"  (combined error budget {d['error_budget']:.3e};"
                    f" {'consistent' if d['consistent'] else 'INCONSISTENT'})\n"
                )
    finally:
        _close_out(out)
    if any(not d["consistent"] for d in disagreements):
        return 1
    return 0


def _write_eval_csv(out, records) -> None:
    cols = ("schema_version,function,method,z_re,z_im,u_re,u_im,v_re,v_im,w_re,w_im,"
            "k,p,q,value_re,value_im,abs_err,evaluations,accuracy_warning")
    out.write(cols + "\n")
    for rec in records:
        ps = rec["params"]

        def pair(name):
            c = ps[name]
            return ("", "") if c is None else (format(c["re"], ".17g"), format(c["im"], ".17g"))

        vals = [str(rec["schema_version"]), rec["function"], rec["method"],
                *pair("z"), *pair("u"), *pair("v"), *pair("w"),
                str(ps["k"] if ps["k"] is not None else ""),
                str(ps["p"] if ps["p"] is not None else ""),
                str(ps["q"] if ps["q"] is not None else ""),
                format(rec["value"]["re"], ".17g"), format(rec["value"]["im"], ".17g"),
                format(rec["abs_err"], ".17g"), str(rec["evaluations"]),
                str(rec["accuracy_warning"]).lower()]
        out.write(",".join(vals) + "\n")


# ----- verify -----

def cmd_verify(args) -> int:
    if args.identity == "all":
        names = list_identities()
    else:
        try:
            get_identity(args.identity)
        except UnknownIdentityError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        names = [args.identity]
    reports: list[IdentityReport] = []
    for name in names:
        reports.append(run_identity(name, n_samples=args.samples, seed=args.seed,
                                    tol=args.tol))
    out = _open_out(args.out)
    try:
        if args.format == "json":
            out.write(dumps_canonical([r.to_record(include_timing=args.timing)
                                       for r in reports]) + "\n")
        elif args.format == "csv":
            out.write("schema_version,name,samples,seed,tol,status,max_residual,"
                      "mean_residual,failure_count\n")
            for r in reports:
                out.write(",".join([
                    str(SCHEMA_VERSION), r.name, str(r.samples), str(r.seed),
                    format(r.tol, ".17g"), r.status, format(r.max_residual, ".17g"),
                    format(r.mean_residual, ".17g"), str(len(r.failures)),
                ]) + "\n")
        else:
            for r in reports:
                mark = {"pass": "PASS", "fail": "FAIL", "informational": "INFO"}[r.status]
                out.write(f"{mark} {r.name}: samples={r.samples} seed={r.seed} "
                          f"tol={r.tol:g} max_residual={r.max_residual:.3e} "
                          f"mean_residual={r.mean_residual:.3e} failures={len(r.failures)}\n")
                for params, res in r.failures[:5]:
                    out.write(f"    residual {res:.3e} at {params}\n")
    finally:
        _close_out(out)
    return 0 if all(r.status in ("pass", "informational") for r in reports) else 1


# ----- table -----

def cmd_table(args) -> int:
    cfg = QuadConfig(target_abs_err=args.tol) if args.tol else QuadConfig()
    rows = []
    for row in TABLE1_ROWS:
        closed = complex(row["closed"]())
        oracle = complex(table1_oracle(row, cfg))
        rows.append({
            "schema_version": SCHEMA_VERSION,
            "label": row["label"],
            "k": row["k"], "n": row["n"],
            "u": _cval(row["u"]), "v": _cval(row["v"]),
            "formula": row["formula"],
            "closed": _cval(closed),
            "oracle": _cval(oracle),
            "residual": abs(closed - oracle),
            "tol": row["tol"],
        })
    out = _open_out(args.out)
    try:
        if args.format == "json":
            out.write(dumps_canonical(rows) + "\n")
        elif args.format == "csv":
            out.write("schema_version,label,k,n,u_re,u_im,v_re,v_im,formula,"
                      "closed_re,closed_im,oracle_re,oracle_im,residual,tol\n")
            for r in rows:
                out.write(",".join([
                    str(r["schema_version"]), f'"{r["label"]}"', str(r["k"]), str(r["n"]),
                    format(r["u"]["re"], ".17g"), format(r["u"]["im"], ".17g"),
                    format(r["v"]["re"], ".17g"), format(r["v"]["im"], ".17g"),
                    f'"{r["formula"]}"',
                    format(r["closed"]["re"], ".17g"), format(r["closed"]["im"], ".17g"),
                    format(r["oracle"]["re"], ".17g"), format(r["oracle"]["im"], ".17g"),
                    format(r["residual"], ".17g"), format(r["tol"], ".17g"),
                ]) + "\n")
        else:
            for r in rows:
                closed = complex(r["closed"]["re"], r["closed"]["im"])
                ok = "ok" if r["residual"] <= r["tol"] else "RESIDUAL TOO LARGE"
                out.write(f"{r['label']:22s} = {r['formula']}\n")
                out.write(f"{'':22s}   closed {format_complex(closed)}  "
                          f"residual {r['residual']:.3e}  [{ok}]\n")
    finally:
        _close_out(out)
    return 0 if all(r["residual"] <= r["tol"] for r in rows) else 1


# ----- bench -----

def _bench_draws(function: str, rng, n: int):
    draws = []
    for i in range(n):
        if function == "J":
            draws.append({"z": complex(rng.uniform(0.3, 3.0), 0.0)})
        elif function == "F3":
            def make():
                u = _draw_point(rng, rmax=0.65)
                v = _draw_point(rng, rmax=0.65, avoid=(u,))
                w = _draw_point(rng, rmax=0.65, avoid=(u, v))
                return {"u": u, "v": v, "w": w}

            draws.append(_sample_until(rng, make, lambda p: cf.f3_formula_domain_ok(
                p["u"], p["v"], p["w"])))
        else:
            def make():
                u = _draw_point(rng, rmax=0.65)
                v = _draw_point(rng, rmax=0.65, avoid=(u,))
                return {"u": u, "v": v}

            draws.append(_sample_until(rng, make, lambda p: cf.fk_formula_domain_ok(
                p["u"], p["v"])))
    return draws


def cmd_bench(args) -> int:
    if args.samples < 1:
        _usage_error("--samples must be >= 1")
    function = args.function
    k = args.k
    rng = np.random.default_rng(args.seed)
    draws = _bench_draws(function, rng, args.samples)
    cfg = QuadConfig(target_abs_err=args.tol) if args.tol else QuadConfig()
    scfg = sr.SeriesConfig(tol=args.tol) if args.tol else sr.SeriesConfig()

    def run_quad(p):
        if function == "J":
            return integrate_j(p["z"], cfg)
        if function == "F":
            return integrate_f(1.0, p["u"], p["v"], cfg)
        if function == "Fk":
            return integrate_fk(1.0, p["u"], p["v"], k, cfg)
        return integrate_f3(1.0, p["u"], p["v"], p["w"], cfg)

    def run_series(p):
        if function == "F":
            return sr.series_fk(1.0, p["u"], p["v"], 1, scfg)
        if function == "Fk":
            return sr.series_fk(1.0, p["u"], p["v"], k, scfg)
        return sr.series_f3(1.0, p["u"], p["v"], p["w"], scfg)

    def run_closed(p):
        if function == "F":
            return _closed_record(cf.fk_at_1(p["u"], p["v"], 1))
        if function == "Fk":
            return _closed_record(cf.fk_at_1(p["u"], p["v"], k))
        return _closed_record(cf.f3_at_1(p["u"], p["v"], p["w"]))

    runners = {"quad": run_quad}
    if function != "J":
        runners["series"] = run_series
        runners["closed"] = run_closed

    results = []
    for method, runner in runners.items():
        t0 = time.perf_counter_ns()
        evals = 0
        for p in draws:
            evals += runner(p).evaluations
        wall = time.perf_counter_ns() - t0
        results.append({
            "schema_version": SCHEMA_VERSION,
            "function": function,
            "method": method,
            "samples": args.samples,
            "seed": args.seed,
            "tol": args.tol if args.tol else (cfg.target_abs_err if method == "quad" else scfg.tol),
            "evaluations_total": evals,
            "wall_time_ns_total": wall,
            "wall_time_ns_per_sample": wall // args.samples,
        })

    out = _open_out(args.out)
    try:
        if args.format == "json":
            out.write(dumps_canonical(results) + "\n")
        elif args.format == "csv":
            out.write("schema_version,function,method,samples,seed,tol,"
                      "evaluations_total,wall_time_ns_total,wall_time_ns_per_sample\n")
            for r in results:
                out.write(",".join([
                    str(r["schema_version"]), r["function"], r["method"],
                    str(r["samples"]), str(r["seed"]), format(r["tol"], ".17g"),
                    str(r["evaluations_total"]), str(r["wall_time_ns_total"]),
                    str(r["wall_time_ns_per_sample"]),
                ]) + "\n")
        else:
            for r in results:
                out.write(f"{r['function']:3s} {r['method']:7s} samples={r['samples']} "
                          f"evaluations={r['evaluations_total']:>9d} "
                          f"wall={r['wall_time_ns_total'] / 1e6:10.2f} ms "
                          f"({r['wall_time_ns_per_sample'] / 1e3:9.1f} us/sample)\n")
    finally:
        _close_out(out)
    return 0


def cmd_list(args) -> int:
    out = _open_out(args.out)
    try:
        if args.format == "json":
            payload = [{"name": n, "description": get_identity(n).description,
                        "informational": get_identity(n).informational}
                       for n in list_identities()]
            out.write(dumps_canonical(payload) + "\n")
        else:
            for n in list_identities():
                spec = get_identity(n)
                tag = " [informational]" if spec.informational else ""
                out.write(f"{n:30s} {spec.description}{tag}\n")
    finally:
        _close_out(out)
    return 0


# ----- wiring -----

def _open_out(path: Optional[str]):
    if path in (None, "-"):
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def _close_out(out) -> None:
    if out is not sys.stdout:
        out.close()


class _UsageError(Exception):
    pass


def _usage_error(msg: str):
    raise _UsageError(msg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hzn",
        description="Evaluate the log-kernel integral family and verify its identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", metavar="FILE", default=None,
                       help="write output to FILE instead of stdout")
        p.add_argument("--timing", action="store_true",
                       help="include wall-clock fields in JSON output (non-reproducible)")

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("--function", required=True, choices=("F", "Fk", "F3", "J"))
    p_eval.add_argument("--method", default="all",
                        choices=("quad", "series", "closed", "all"))
    p_eval.add_argument("--z", type=parse_complex, default=None, metavar="a+bi")
    p_eval.add_argument("--u", type=parse_complex, default=1.0, metavar="a+bi")
    p_eval.add_argument("--v", type=parse_complex, default=-1.0, metavar="a+bi")
    p_eval.add_argument("--w", type=parse_complex, default=None, metavar="a+bi")
    p_eval.add_argument("--k", type=int, default=1)
    p_eval.add_argument("--p", type=int, default=None)
    p_eval.add_argument("--q", type=int, default=None)
    p_eval.add_argument("--tol", type=float, default=None)
    add_common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="fuzz one identity or all of them")
    p_verify.add_argument("--identity", required=True,
                          help="registered identity name, or 'all'")
    p_verify.add_argument("--samples", type=int, default=50)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=None)
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="reproduce the special-value table")
    p_table.add_argument("--tol", type=float, default=None)
    add_common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_bench = sub.add_parser("bench", help="compare evaluation strategies")
    p_bench.add_argument("--function", required=True, choices=("F", "Fk", "F3", "J"))
    p_bench.add_argument("--samples", type=int, default=20)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--k", type=int, default=2)
    p_bench.add_argument("--tol", type=float, default=None)
    add_common(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    p_list = sub.add_parser("list", help="print the identity registry")
    add_common(p_list)
    p_list.set_defaults(func=cmd_list)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except UnknownIdentityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HznError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
