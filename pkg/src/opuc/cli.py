"""Batch command line front end.

Every subcommand reads a sequence description from JSON and writes JSON
(sorted keys, fixed node counts) or CSV.  Exit status: 0 on success, 1 when
``verify`` finds a failing criterion, 2 on bad input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

import numpy as np

from . import acceptance
from .asymptotics import default_grid, g_limit, mate_nevai, omega_nm, probe
from .core import GeometricTail, _parse_complex, make_sequence
from .errors import ModulusError, OpucError, SchemaError
from .fourier import d_m, lambda_combinatorial_table, wm_bernstein, wm_truncated
from .quadrature import Grid, fourier_log_w, zq_quadrature
from .recursion import lambda_table
from .sumrules import (l4_equivalence_report, make_qweight, step_residual, zq_bernstein,
                       zq_partials)


def _c(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _load_seq(path: str):
    try:
        spec = json.loads(Path(path).read_text())
    except OSError as e:
        raise SchemaError(f"cannot read sequence file: {e.strerror}", "$") from None
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON at line {e.lineno}", "$") from None
    return make_sequence(spec)


def _parse_q(text: str | None):
    if text is None:
        return make_qweight([1.0])
    try:
        raw = json.loads(text)
    except json.JSONDecodeError:
        raise SchemaError("Q must be a JSON list", "$.q") from None
    if not isinstance(raw, list):
        raise SchemaError("Q must be a JSON list", "$.q")
    return make_qweight([_parse_complex(x, f"$.q[{i}]") for i, x in enumerate(raw)])


def cmd_coeffs(args) -> dict:
    seq = _load_seq(args.seq)
    n = args.n
    rec = lambda_table(seq, n)
    comb = lambda_combinatorial_table(seq, n, n)
    rows = []
    worst = 0.0
    for k in range(1, n + 1):
        for m in range(1, k + 1):
            d = abs(rec[k, m] - comb[k, m])
            worst = max(worst, d)
            rows.append({"n": k, "m": m, "lambdaRec": _c(rec[k, m]), "lambdaComb": _c(comb[k, m]),
                         "absDiff": d})
    return {"n": n, "rows": rows, "maxAbsDiff": worst}


def cmd_wm(args) -> dict:
    seq = _load_seq(args.seq)
    grid = Grid(args.grid)
    tv = wm_truncated(seq, args.m, args.K)
    bern = wm_bernstein(seq, args.K, args.m)
    quad = fourier_log_w(seq, args.K, args.m, grid)
    vals = (tv.value, bern, quad)
    spread = max(abs(x - y) for x, y in itertools.combinations(vals, 2))
    return {
        "m": args.m,
        "K": args.K,
        "nodes": grid.nodes,
        "value": _c(tv.value),
        "tailBound": tv.tail_bound,
        "bernstein": _c(bern),
        "quadrature": _c(quad),
        "spread": spread,
    }


def cmd_dm(args) -> dict:
    seq = _load_seq(args.seq)
    rows = []
    for m in range(1, args.m + 1):
        tv = d_m(seq, m, args.K)
        rows.append({"m": m, "K": args.K, "value": _c(tv.value), "tailBound": tv.tail_bound})
    return {"K": args.K, "rows": rows}


def cmd_zq(args) -> dict:
    seq = _load_seq(args.seq)
    Q = _parse_q(args.q)
    series = zq_partials(seq, Q, args.n_max)
    return {
        "nMax": args.n_max,
        "nodes": args.grid,
        "q": [_c(x) for x in Q.q],
        "partials": series.to_json(),
        "bernstein": zq_bernstein(seq, Q, args.n_max),
        "quadrature": zq_quadrature(seq, args.n_max, Q, Grid(args.grid)),
    }


def cmd_step(args) -> dict:
    seq = _load_seq(args.seq)
    Q = _parse_q(args.q)
    return {"n": args.n, "q": [_c(x) for x in Q.q], "residual": step_residual(seq, Q, args.n)}


def cmd_l4(args) -> dict:
    seq = _load_seq(args.seq)
    Q = _parse_q(args.q)
    out = l4_equivalence_report(seq, Q, args.n_max).to_json()
    out.update({"nMax": args.n_max, "q": [_c(x) for x in Q.q]})
    return out


def cmd_ratio(args):
    seq = _load_seq(args.seq)
    p = probe(seq, args.n, default_grid())
    if args.format == "csv":
        return p.to_csv()
    out = {"nValues": list(p.n_values), "zGrid": [_c(z) for z in p.z_grid],
           "values": [[_c(v) for v in row] for row in p.values]}
    if isinstance(seq.tail, GeometricTail):
        t = seq.tail
        G = np.array([g_limit(t.a, t.lam / abs(t.lam), z) for z in p.z_grid])
        out["limitGap"] = [float(np.max(np.abs(row - G))) for row in p.values]
        out["omega"] = [{"n": n, "m": m, "value": _c(omega_nm(seq, n, m))}
                        for n in p.n_values for m in range(1, 5)]
    return out


def cmd_mn(args) -> dict:
    seq = _load_seq(args.seq)
    out = mate_nevai(seq, args.ell, args.n_max).to_json()
    out.update({"ell": args.ell, "nMax": args.n_max})
    return out


def cmd_verify(args):
    if args.suite == "all":
        numbers = sorted(acceptance.CHECKS)
    else:
        try:
            numbers = [int(x) for x in args.suite.split(",")]
        except ValueError:
            raise SchemaError("suite must be 'all' or a comma separated list", "$.suite") from None
        for x in numbers:
            if x not in acceptance.CHECKS:
                raise SchemaError(f"unknown criterion {x}", "$.suite")
    results = [acceptance.CHECKS[i]() for i in numbers]
    for r in results:
        print(r.line(), file=sys.stderr)
    report = {"results": [r.to_json() for r in results],
              "passed": all(r.passed for r in results)}
    return report


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="opuc", description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="write the result here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("coeffs", cmd_coeffs, "reversed polynomial coefficients, recursion vs partitions")
    p.add_argument("--seq", required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("wm", cmd_wm, "Fourier coefficient of log w, three ways")
    p.add_argument("--seq", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--grid", type=int, default=4096)

    p = add("dm", cmd_dm, "Taylor coefficients of 1/D, m = 1..M")
    p.add_argument("--seq", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--K", type=int, required=True)

    for name, fn, help_ in (("zq", cmd_zq, "partial sums of the higher-order sum rule"),
                            ("l4", cmd_l4, "fourth-power equivalence report")):
        p = add(name, fn, help_)
        p.add_argument("--seq", required=True)
        p.add_argument("--q", help='Q coefficients as JSON, e.g. "[1, [0, 1]]"')
        p.add_argument("--n-max", type=int, required=True)
        if name == "zq":
            p.add_argument("--grid", type=int, default=4096)

    p = add("step", cmd_step, "one-step sum rule residual")
    p.add_argument("--seq", required=True)
    p.add_argument("--q")
    p.add_argument("--n", type=int, required=True)

    p = add("ratio", cmd_ratio, "ratio of consecutive reversed polynomials on a disk grid")
    p.add_argument("--seq", required=True)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = add("mn", cmd_mn, "lagged products of Verblunsky coefficients")
    p.add_argument("--seq", required=True)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)

    p = add("verify", cmd_verify, "run the acceptance suite")
    p.add_argument("--suite", default="all")
    return ap


def _error(message: str, path: str = "$") -> int:
    print(json.dumps({"error": message, "path": path}, sort_keys=True), file=sys.stderr)
    return 2


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.fn(args)
    except (SchemaError, ModulusError) as e:
        return _error(str(e), e.path)
    except (OpucError, ValueError, IndexError) as e:
        return _error(f"{type(e).__name__}: {e}")
    text = result if isinstance(result, str) else json.dumps(result, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
