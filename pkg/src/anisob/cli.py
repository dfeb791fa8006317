"""Command-line interface.

Every library operation is exposed as a subcommand with machine-readable
output (CSV by default, JSON on request).  Floats are printed with 17
significant digits so downstream tools can round-trip them losslessly, and
output is byte-identical across runs and worker counts.  Table-producing
subcommands can additionally render a figure file next to the delimited
output via ``--plot``.

Exit codes: 0 success, 1 input error, 2 capacity cap exceeded, 3 a checked
identity or bound was violated (bridge mismatch, sandwich violation).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from . import lattice, spectra, tractability
from .ellipsoid import ellipsoid_log_volume, ellipsoid_volume
from .sequences import FamilyError, SequencePair, family_from_json, pair_from_json

_ENV_THREADS = "ANISOB_THREADS"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    if value is None:
        return ""
    return str(value)


def _emit(args, header, rows, payload) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_floats(text: str):
    try:
        return [float(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise FamilyError(f"expected comma-separated numbers, got {text!r}") from None


def _csv_ints(text: str):
    vals = []
    for v in text.split(","):
        if v == "":
            continue
        try:
            vals.append(int(v))
        except ValueError:
            raise FamilyError(f"expected comma-separated integers, got {text!r}") from None
    return vals


def _seq_json(args) -> dict:
    if getattr(args, "seq", None):
        obj = json.loads(args.seq)
        if not isinstance(obj, dict):
            raise FamilyError("--seq must be a JSON object")
        return obj
    if getattr(args, "a", None) and getattr(args, "b", None):
        obj = {"a": _csv_floats(args.a), "b": _csv_floats(args.b)}
        if getattr(args, "d", None):
            obj["d"] = args.d
        return obj
    raise FamilyError("give --seq JSON or both --a and --b")


def _parse_pair(args) -> SequencePair:
    return pair_from_json(_seq_json(args))


def _parse_families(args):
    obj = _seq_json(args)
    b = family_from_json(obj["b"])
    a = family_from_json(obj["a"], base=b)
    return a, b


def _workers(args) -> int:
    if getattr(args, "threads", None) is not None:
        return max(1, args.threads)
    env = os.environ.get(_ENV_THREADS)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise FamilyError(f"{_ENV_THREADS} must be an integer, got {env!r}") from None
    return 1


def _count_kwargs(args) -> dict:
    kw = {"workers": _workers(args)}
    if getattr(args, "max_coord_range", None):
        kw["max_coord_range"] = args.max_coord_range
    return kw


def _order_kwargs(args) -> dict:
    kw = _count_kwargs(args)
    if getattr(args, "mode", None):
        kw["mode"] = args.mode
    if getattr(args, "heap_cap", None):
        kw["heap_cap"] = args.heap_cap
    return kw


def _maybe_plot(args, saver, rows) -> None:
    if getattr(args, "plot", None):
        from . import plots

        getattr(plots, saver)(rows, args.plot)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_volume(args) -> int:
    if args.seq:
        pair = _parse_pair(args)
        scales, exponents = pair.a_values, pair.b_values
    else:
        scales = _csv_floats(args.a or "")
        exponents = _csv_floats(args.b or "")
    vol = ellipsoid_volume(scales, exponents, args.t)
    logv = ellipsoid_log_volume(scales, exponents, args.t)
    _emit(args, ["volume", "log_volume"], [(vol, logv)], {"volume": vol, "log_volume": logv})
    return 0


def _cmd_count(args) -> int:
    seq = _parse_pair(args)
    n = lattice.count(
        seq,
        args.threshold,
        strict=args.strict,
        mode=args.mode,
        tol=args.tol,
        **_count_kwargs(args),
    )
    comparison = "strict" if args.strict else "nonstrict"
    _emit(
        args,
        ["threshold", "comparison", "count"],
        [(args.threshold, comparison, n)],
        {"threshold": args.threshold, "comparison": comparison, "count": n},
    )
    return 0


def _cmd_widths(args) -> int:
    seq = _parse_pair(args)
    kw = _order_kwargs(args)
    rows = [(n, spectra.approximation_number(seq, n, **kw)) for n in _csv_ints(args.n)]
    _emit(args, ["n", "a_n"], rows, {"widths": [{"n": n, "a_n": a} for n, a in rows]})
    _maybe_plot(args, "save_widths_plot", rows)
    return 0


def _cmd_eigs(args) -> int:
    seq = _parse_pair(args)
    kw = _order_kwargs(args)
    rows = [(n, spectra.korobov_eigenvalue(seq, args.omega, n, **kw)) for n in _csv_ints(args.n)]
    _emit(
        args,
        ["n", "lambda_n"],
        rows,
        {"omega": args.omega, "eigenvalues": [{"n": n, "lambda_n": v} for n, v in rows]},
    )
    _maybe_plot(args, "save_eigs_plot", rows)
    return 0


def _cmd_equiv(args) -> int:
    seq = _parse_pair(args)
    grid = _csv_ints(args.n) if args.n else spectra.geometric_grid(args.n_max)
    rows = spectra.equivalence_ratios(seq, grid, **_order_kwargs(args))
    _emit(
        args,
        ["n", "a_n", "ratio", "log_constant"],
        [(r.n, r.a_n, r.ratio, r.log_constant) for r in rows],
        {
            "rows": [
                {"n": r.n, "a_n": r.a_n, "ratio": r.ratio, "log_constant": r.log_constant}
                for r in rows
            ]
        },
    )
    _maybe_plot(args, "save_equiv_plot", rows)
    return 0


def _cmd_sandwich(args) -> int:
    seq = _parse_pair(args)
    ms = _csv_ints(args.m) if args.m else list(range(1, args.m_max + 1))
    rows = spectra.sandwich_report(seq, ms, mode=args.mode, **_count_kwargs(args))
    _emit(
        args,
        ["m", "lower", "count", "upper", "ok"],
        [(r.m, r.lower, r.count, r.upper, r.ok) for r in rows],
        {
            "rows": [
                {"m": r.m, "lower": r.lower, "count": r.count, "upper": r.upper, "ok": r.ok}
                for r in rows
            ]
        },
    )
    _maybe_plot(args, "save_sandwich_plot", rows)
    return 0 if all(r.ok for r in rows) else 3


def _cmd_complexity(args) -> int:
    seq = _parse_pair(args)
    kw = _count_kwargs(args)
    if args.problem == "korobov":
        if args.omega is None:
            raise FamilyError("korobov complexity needs --omega")
        n = tractability.complexity_korobov(seq, args.omega, args.eps, **kw)
    else:
        n = tractability.complexity_sobolev(seq, args.eps, **kw)
    _emit(
        args,
        ["problem", "eps", "n"],
        [(args.problem, args.eps, n)],
        {"problem": args.problem, "eps": args.eps, "n": n},
    )
    return 0


def _cmd_bridge(args) -> int:
    seq = _parse_pair(args)
    kw = _count_kwargs(args)
    results = []
    if args.direction in ("both", "k2s"):
        results.append(tractability.bridge_korobov_to_sobolev(seq, args.omega, args.eps, **kw))
    if args.direction in ("both", "s2k"):
        results.append(tractability.bridge_sobolev_to_korobov(seq, args.omega, args.eps, **kw))
    rows = [
        (r.direction, r.eps, r.eps_mapped, r.log_eps_mapped, r.n_source, r.n_mapped, r.equal)
        for r in results
    ]
    _emit(
        args,
        ["direction", "eps", "eps_mapped", "log_eps_mapped", "n_source", "n_mapped", "equal"],
        rows,
        {
            "omega": args.omega,
            "results": [
                {
                    "direction": r.direction,
                    "eps": r.eps,
                    "eps_mapped": r.eps_mapped,
                    "log_eps_mapped": r.log_eps_mapped,
                    "n_source": r.n_source,
                    "n_mapped": r.n_mapped,
                    "equal": r.equal,
                }
                for r in results
            ],
        },
    )
    return 0 if all(r.equal for r in results) else 3


def _parse_st(values):
    pairs = []
    for text in values or ():
        parts = text.split(",")
        if len(parts) != 2:
            raise FamilyError(f"--st expects 's,t', got {text!r}")
        pairs.append((float(parts[0]), float(parts[1])))
    return pairs


def _cmd_classify(args) -> int:
    st = _parse_st(args.st)
    if args.standard:
        if args.seq:
            obj = json.loads(args.seq)
            bspec = obj.get("b", obj) if isinstance(obj, dict) else obj
        elif args.b:
            bspec = _csv_floats(args.b)
        else:
            raise FamilyError("--standard classification needs a smoothness family")
        result = tractability.classify_standard(family_from_json(bspec), st)
    else:
        a, b = _parse_families(args)
        result = tractability.classify(a, b, st)
    rows = []
    for group in ("notions", "ec_notions"):
        for v in result[group]:
            rows.append(
                (
                    group,
                    v["notion"],
                    v.get("s"),
                    v.get("t"),
                    v["holds"],
                    v["condition"],
                    json.dumps(v["evidence"]),
                )
            )
    _emit(args, ["group", "notion", "s", "t", "holds", "condition", "evidence"], rows, result)
    return 0


def _cmd_probe(args) -> int:
    a, b = _parse_families(args)
    cells = tractability.tractability_probe(
        a, b, args.s, args.t, _csv_floats(args.eps), _csv_ints(args.dims), **_count_kwargs(args)
    )
    _emit(
        args,
        ["d", "eps", "n", "ratio", "status"],
        [(c.d, c.eps, c.n, c.ratio, c.status) for c in cells],
        {
            "s": args.s,
            "t": args.t,
            "cells": [
                {"d": c.d, "eps": c.eps, "n": c.n, "ratio": c.ratio, "status": c.status}
                for c in cells
            ],
        },
    )
    _maybe_plot(args, "save_probe_plot", cells)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anisob",
        description="spectra and tractability of weighted anisotropic embeddings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", help="write output to this path instead of stdout")
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker count (default: ${_ENV_THREADS} or 1)")

    seqargs = argparse.ArgumentParser(add_help=False)
    seqargs.add_argument("--seq", help='sequence spec JSON, e.g. \'{"a":[1],"b":[1]}\'')
    seqargs.add_argument("--a", help="comma-separated explicit scaling values")
    seqargs.add_argument("--b", help="comma-separated explicit smoothness values")
    seqargs.add_argument("--d", type=int, help="active dimension (default: list length)")

    countargs = argparse.ArgumentParser(add_help=False)
    countargs.add_argument("--max-coord-range", type=int, default=None,
                           help="per-coordinate range cap before a capacity error")

    orderargs = argparse.ArgumentParser(add_help=False)
    orderargs.add_argument("--mode", choices=("float", "exact"), default="float")
    orderargs.add_argument("--heap-cap", type=int, default=None,
                           help="frontier size cap for ordered enumeration")

    p = sub.add_parser("volume", parents=[common, seqargs],
                       help="generalized ellipsoid volume")
    p.add_argument("--t", type=float, default=1.0, help="radius parameter")
    p.set_defaults(func=_cmd_volume)

    p = sub.add_parser("count", parents=[common, seqargs, countargs, orderargs],
                       help="lattice count at a weight threshold")
    p.add_argument("--threshold", type=float, required=True)
    p.add_argument("--strict", action="store_true", help="count w < threshold instead of <=")
    p.add_argument("--tol", type=float, default=0.0, help="comparison boundary shift")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("widths", parents=[common, seqargs, countargs, orderargs],
                       help="approximation numbers over an n grid")
    p.add_argument("--n", required=True, help="comma-separated n values")
    p.add_argument("--plot", help="also render a figure to this path")
    p.set_defaults(func=_cmd_widths)

    p = sub.add_parser("eigs", parents=[common, seqargs, countargs, orderargs],
                       help="Korobov eigenvalues over an n grid")
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--n", required=True, help="comma-separated n values")
    p.add_argument("--plot", help="also render a figure to this path")
    p.set_defaults(func=_cmd_eigs)

    p = sub.add_parser("equiv", parents=[common, seqargs, countargs, orderargs],
                       help="decay-rate ratio table n**g * a_n / constant")
    p.add_argument("--n", help="comma-separated n grid (default: powers of two)")
    p.add_argument("--n-max", type=int, default=4096)
    p.add_argument("--plot", help="also render a figure to this path")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("sandwich", parents=[common, seqargs, countargs],
                       help="volume bounds around level counts")
    p.add_argument("--m", help="comma-separated levels")
    p.add_argument("--m-max", type=int, default=20)
    p.add_argument("--mode", choices=("float", "exact"), default="float")
    p.add_argument("--plot", help="also render a figure to this path")
    p.set_defaults(func=_cmd_sandwich)

    p = sub.add_parser("complexity", parents=[common, seqargs, countargs],
                       help="information complexity n(eps)")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--problem", choices=("sobolev", "korobov"), default="sobolev")
    p.add_argument("--omega", type=float)
    p.set_defaults(func=_cmd_complexity)

    p = sub.add_parser("bridge", parents=[common, seqargs, countargs],
                       help="check the complexity identity in both directions")
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--direction", choices=("both", "k2s", "s2k"), default="both")
    p.set_defaults(func=_cmd_bridge)

    p = sub.add_parser("classify", parents=[common, seqargs],
                       help="tractability verdict matrix")
    p.add_argument("--st", action="append", help="an 's,t' pair; repeatable")
    p.add_argument("--standard", action="store_true",
                   help="classify the plain anisotropic norm from the smoothness family")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("probe", parents=[common, seqargs, countargs],
                       help="numeric weak-tractability ratio table (heuristic)")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--eps", required=True, help="comma-separated eps values")
    p.add_argument("--dims", required=True, help="comma-separated dimensions")
    p.add_argument("--plot", help="also render a figure to this path")
    p.set_defaults(func=_cmd_probe)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except lattice.CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 2
    except (FamilyError, ValueError, OverflowError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
