"""Command-line front end.

Every subcommand is a thin wrapper over a single library call and emits a
deterministic report: JSON by default, CSV with ``--format csv``; floats are
printed with 10 significant digits.  Exit codes: 0 success, 2 usage or
invalid argument, 3 singular configuration, 4 diverging iteration.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import tables
from .analysis import bounds_report, exact_infinity_norm, rowsum, rowsum_report, sign_pattern, trace_inverse
from .bvp import BvpProblem, solve_fixed_point
from .config import MatrixConfig, singularity_report
from .core import assemble_inverse, near_toeplitz_inverse_entry, toeplitz_inverse_entry
from .errors import DivergenceError, SingularMatrixError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SINGULAR = 3
EXIT_DIVERGED = 4


def _round10(obj):
    """Recursively round floats to 10 significant digits for stable output."""
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj):.10g}")
    if isinstance(obj, (int, np.integer, bool, str)) or obj is None:
        return obj if not isinstance(obj, np.integer) else int(obj)
    if isinstance(obj, np.ndarray):
        return _round10(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return [_round10(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _round10(v) for k, v in obj.items()}
    return obj


def _fmt(value) -> str:
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.10g}"
    return str(value)


def _record(command: str, inputs: dict, outputs: dict, branch: str | None = None) -> dict:
    rec = {"command": command, "inputs": inputs, "outputs": outputs}
    if branch is not None:
        rec["branch"] = branch
    return rec


def _render_csv(rec: dict) -> str:
    lines = ["field,value", f"command,{rec['command']}"]
    for section in ("inputs", "outputs"):
        for key, value in rec[section].items():
            if isinstance(value, (list, np.ndarray)):
                flat = np.asarray(value)
                if flat.ndim == 2:
                    for row in flat:
                        lines.append(f"{section}.{key}," + ",".join(_fmt(v) for v in row))
                else:
                    lines.append(f"{section}.{key}," + ",".join(_fmt(v) for v in flat))
            else:
                lines.append(f"{section}.{key},{_fmt(value)}")
    if "branch" in rec:
        lines.append(f"branch,{rec['branch']}")
    return "\n".join(lines) + "\n"


def _emit(rec: dict, args) -> None:
    if args.format == "csv":
        text = _render_csv(rec)
    else:
        text = json.dumps(_round10(rec), indent=2) + "\n"
    _write(text, args)


def _write(text: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _cfg(args) -> MatrixConfig:
    return MatrixConfig(n=args.n, b=args.b, b_tilde=args.btilde, c_hat=args.chat)


def _cfg_inputs(args) -> dict:
    return {"n": args.n, "b": args.b, "btilde": args.btilde, "chat": args.chat}


def cmd_entry(args) -> dict:
    inputs = _cfg_inputs(args) | {"i": args.i, "j": args.j}
    if args.toeplitz:
        value = toeplitz_inverse_entry(args.n, args.b, args.i, args.j)
    else:
        value = near_toeplitz_inverse_entry(_cfg(args), args.i, args.j, scaled=args.scaled)
        inputs["scaled"] = args.scaled
    return _record("entry", inputs, {"value": value})


def cmd_invert(args) -> dict:
    inv = assemble_inverse(_cfg(args), scaled=args.scaled)
    inputs = _cfg_inputs(args) | {"scaled": args.scaled}
    return _record("invert", inputs, {"n": inv.n, "source": inv.source, "entries": inv.entries})


def cmd_trace(args) -> dict:
    return _record("trace", _cfg_inputs(args), {"trace": trace_inverse(_cfg(args))})


def cmd_rowsum(args) -> dict:
    cfg = _cfg(args)
    if args.i is not None:
        outputs = {"i": args.i, "rowsum": rowsum(cfg, args.i)}
    else:
        rep = rowsum_report(cfg)
        outputs = {"values": rep.values, "lower": rep.lower, "upper": rep.upper}
    return _record("rowsum", _cfg_inputs(args) | {"i": args.i}, outputs)


def cmd_norm(args) -> dict:
    return _record("norm", _cfg_inputs(args), {"norm": exact_infinity_norm(_cfg(args))})


def cmd_bounds(args) -> dict:
    rep = bounds_report(_cfg(args))
    outputs = {
        "lower": rep.lower,
        "upper": rep.upper,
        "exact_norm": rep.exact_norm,
        "terms": rep.terms,
    }
    return _record("bounds", _cfg_inputs(args), outputs, branch=rep.branch)


def cmd_signs(args) -> dict:
    pat = sign_pattern(_cfg(args))
    return _record("signs", _cfg_inputs(args), {"n": pat.n, "pattern": pat.pattern})


def cmd_singular(args) -> dict:
    rep = singularity_report(_cfg(args), tol=args.tol)
    return _record("singular", _cfg_inputs(args) | {"tol": args.tol}, rep)


def cmd_solve_bvp(args) -> dict:
    cfg = _cfg(args)
    prob = BvpProblem(
        n=args.n, length=args.length, k_coef=args.k, nonlinearity=args.nonlinearity,
        cfg=cfg, bc_left=args.bc_left, bc_right=args.bc_right,
    )
    res = solve_fixed_point(prob, tol=args.tol, max_iter=args.max_iter)
    inputs = _cfg_inputs(args) | {
        "length": args.length, "k": args.k, "nonlinearity": args.nonlinearity,
        "tol": args.tol, "max_iter": args.max_iter,
        "bc_left": args.bc_left, "bc_right": args.bc_right,
    }
    outputs = {
        "iterations": res.iterations,
        "observed_rate": res.observed_rate,
        "expected_rate": res.expected_rate,
        "converged": res.converged,
        "solution": res.solution,
    }
    return _record("solve-bvp", inputs, outputs)


def cmd_reproduce(args) -> str:
    """Emit the requested published table as CSV with a per-row pass flag."""
    rows = tables.reproduce(args.table_id)
    header = list(rows[0].keys())
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(row[key]) for key in header))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neartoeplitz",
        description="Closed-form inverses, norm bounds, and fixed-point BVP runs "
        "for symmetric tridiagonal near-Toeplitz matrices with |b| = 2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--format", choices=("json", "csv"), default="json")
    io.add_argument("--out", help="also write the report to this path")

    mat = argparse.ArgumentParser(add_help=False)
    mat.add_argument("--n", type=int, required=True, help="matrix order (>= 4)")
    mat.add_argument("--b", type=int, choices=(2, -2), required=True)
    mat.add_argument("--btilde", type=float, required=True, help="corner diagonal value")
    mat.add_argument("--chat", type=float, default=-1.0, help="scaling c_hat (default -1)")

    p = sub.add_parser("entry", parents=[mat, io], help="one inverse entry (1-based indices)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--toeplitz", action="store_true", help="entry of the pure Toeplitz inverse")
    p.add_argument("--scaled", action="store_true", help="entry of the scaled-system inverse")
    p.set_defaults(func=cmd_entry)

    p = sub.add_parser("invert", parents=[mat, io], help="assemble the full inverse")
    p.add_argument("--scaled", action="store_true")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("trace", parents=[mat, io], help="exact trace of the inverse")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("rowsum", parents=[mat, io], help="row sum(s) of the inverse")
    p.add_argument("--i", type=int, help="1-based row; omit for all rows plus bounds")
    p.set_defaults(func=cmd_rowsum)

    p = sub.add_parser("norm", parents=[mat, io], help="exact infinity norm of the inverse")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("bounds", parents=[mat, io], help="lower/upper norm bounds and branch")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("signs", parents=[mat, io], help="predicted sign pattern (b=2, btilde<=0)")
    p.set_defaults(func=cmd_signs)

    p = sub.add_parser("singular", parents=[mat, io], help="singularity test")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("solve-bvp", parents=[mat, io], help="fixed-point run for u'' = f(u)")
    p.add_argument("--length", type=float, required=True, help="domain length")
    p.add_argument("--k", type=float, required=True, help="nonlinearity strength")
    p.add_argument("--nonlinearity", choices=("fisher", "bratu"), required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=10_000)
    p.add_argument("--bc-left", type=float, default=0.0)
    p.add_argument("--bc-right", type=float, default=0.0)
    p.set_defaults(func=cmd_solve_bvp)

    p = sub.add_parser("reproduce", parents=[io], help="recompute a published table (CSV)")
    p.add_argument("table_id", choices=tables.TABLE_IDS)
    p.set_defaults(func=cmd_reproduce)

    return parser


def _error_object(command: str, exc: Exception) -> str:
    payload = {"command": command, "error": {"type": type(exc).__name__, "message": str(exc)}}
    return json.dumps(payload) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except SingularMatrixError as exc:
        sys.stderr.write(_error_object(args.command, exc))
        return EXIT_SINGULAR
    except DivergenceError as exc:
        payload = {"command": args.command, "error": {"type": "DivergenceError", "message": str(exc)}}
        if exc.partial is not None:
            payload["partial"] = _round10(
                {
                    "iterations": exc.partial.iterations,
                    "observed_rate": exc.partial.observed_rate,
                    "expected_rate": exc.partial.expected_rate,
                }
            )
        sys.stderr.write(json.dumps(payload) + "\n")
        return EXIT_DIVERGED
    except (ValueError, IndexError) as exc:
        sys.stderr.write(_error_object(args.command, exc))
        return EXIT_USAGE
    if isinstance(result, str):
        _write(result, args)
    else:
        _emit(result, args)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
