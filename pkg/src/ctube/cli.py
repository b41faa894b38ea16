"""Command-line interface.

Exit codes: 0 on success or an all-pass suite, 1 on a failed check or broken
internal invariant, 2 on bad usage or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import export
from .cluster import enumerate_pattern
from .errors import CTubeError, InternalInvariantBroken
from .rigid import (
    MaximalRigid,
    b_matrix,
    enum_maximal_rigids,
    enum_rigid_indecs,
    mutate_rigid,
    parse_indec,
    standard_maximal_rigid,
)
from .suites import SUITES, run_suite
from .tau_tilt import index, positive_c_vectors, rank_vector


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _t(args) -> MaximalRigid:
    if args.t is None:
        return standard_maximal_rigid(args.n)
    return MaximalRigid.parse(args.n, args.t)


def _cmd_enum_rigids(args) -> int:
    objs = enum_rigid_indecs(args.n)
    if args.json:
        _emit(export.dumps({"n": args.n, "objects": [x.to_json() for x in objs]}), args.out)
    else:
        _emit("".join(f"{x}\n" for x in objs), args.out)
    return 0


def _cmd_enum_maximal(args) -> int:
    ts = enum_maximal_rigids(args.n)
    if args.json:
        _emit(export.dumps({"n": args.n, "count": len(ts), "objects": [t.to_json() for t in ts]}), args.out)
    else:
        _emit("".join(f"{t}\n" for t in ts), args.out)
    return 0


def _cmd_mutate(args) -> int:
    t = _t(args)
    t2, ex = mutate_rigid(t, args.k)
    if args.json:
        _emit(export.dumps({"n": args.n, "result": t2.to_json(), "exchange": ex.to_json()}), args.out)
    else:
        _emit(
            f"{t2}\nremoved {ex.removed}, added {ex.replacement}\n"
            f"U  = {' + '.join(map(str, ex.U)) or '0'}\n"
            f"U' = {' + '.join(map(str, ex.U_prime)) or '0'}\n",
            args.out,
        )
    return 0


def _cmd_b_matrix(args) -> int:
    b = b_matrix(_t(args))
    if args.json:
        _emit(export.dumps(b.tolist()), args.out)
    else:
        _emit("".join(" ".join(f"{v:3d}" for v in row) + "\n" for row in b.rows), args.out)
    return 0


def _cmd_cluster_pattern(args) -> int:
    t = _t(args)
    pat = enumerate_pattern(t, max_seeds=args.max_seeds)
    coeffs = not args.no_coefficients
    _emit(export.dumps(export.pattern_to_json(pat, coeffs)), args.out)
    if args.csv:
        Path(args.csv).write_text(export.records_to_csv(pat), encoding="utf-8", newline="\n")
    if args.dot:
        Path(args.dot).write_text(export.export_exchange_graph(t, "dot"), encoding="utf-8", newline="\n")
    return 0


def _cmd_exchange_graph(args) -> int:
    fmt = "dot" if args.dot_format else "json"
    _emit(export.export_exchange_graph(_t(args), fmt), args.out)
    return 0


def _cmd_rank_vector(args) -> int:
    t = _t(args)
    m = parse_indec(args.n, args.m)
    v = rank_vector(t, m)
    _emit(export.dumps(list(v)) if args.json else " ".join(map(str, v)) + "\n", args.out)
    return 0


def _cmd_index(args) -> int:
    t = _t(args)
    x = parse_indec(args.n, args.x)
    v = index(t, x)
    _emit(export.dumps(list(v)) if args.json else " ".join(map(str, v)) + "\n", args.out)
    return 0


def _cmd_c_vectors(args) -> int:
    t = _t(args)
    pos = sorted(positive_c_vectors(t))
    if args.csv:
        rows = [(str(i), v) for i, v in enumerate(pos, 1)]
        _emit(export.vectors_to_csv(rows, "c", label="index"), args.out)
    elif args.json:
        _emit(export.dumps({"n": args.n, "positive": [list(v) for v in pos]}), args.out)
    else:
        _emit("".join(" ".join(map(str, v)) + "\n" for v in pos), args.out)
    return 0


def _cmd_suite(args) -> int:
    report = run_suite(args.name, args.n)
    if args.json:
        _emit(export.dumps(report.to_json()), args.out)
    else:
        _emit(report.to_text() + "\n", args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ctube", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_t=False):
        p.add_argument("--n", type=int, required=True, help="rank parameter (tube rank is n+1)")
        if needs_t:
            p.add_argument("--t", help='maximal rigid object, e.g. "(1,2);(1,1)"; default (1,1)+...+(1,n)')
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--out", help="write output to FILE")
        return p

    common(sub.add_parser("enum-rigids", help="list rigid indecomposables")).set_defaults(func=_cmd_enum_rigids)
    common(sub.add_parser("enum-maximal-rigids", help="list basic maximal rigid objects")).set_defaults(
        func=_cmd_enum_maximal
    )
    p = common(sub.add_parser("mutate", help="mutate a maximal rigid object"), True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_mutate)
    common(sub.add_parser("b-matrix", help="exchange matrix B_T"), True).set_defaults(func=_cmd_b_matrix)

    p = common(sub.add_parser("cluster-pattern", help="all cluster variables with den and g vectors"), True)
    p.add_argument("--no-coefficients", action="store_true", help="specialize coefficients to 1")
    p.add_argument("--csv", help="also write an (object, den, g) table to this file")
    p.add_argument("--dot", help="also write the exchange graph in DOT to this file")
    p.add_argument("--max-seeds", type=int, help="abort if more seeds are found")
    p.set_defaults(func=_cmd_cluster_pattern)

    p = common(sub.add_parser("exchange-graph", help="exchange graph of maximal rigid objects"), True)
    p.add_argument("--dot", dest="dot_format", action="store_true", help="DOT instead of JSON")
    p.set_defaults(func=_cmd_exchange_graph)

    p = common(sub.add_parser("rank-vector", help="rank vector of Hom(T, M)"), True)
    p.add_argument("--m", required=True)
    p.set_defaults(func=_cmd_rank_vector)
    p = common(sub.add_parser("index", help="index of X with respect to T"), True)
    p.add_argument("--x", required=True)
    p.set_defaults(func=_cmd_index)
    p = common(sub.add_parser("c-vectors", help="positive c-vectors as rank vectors"), True)
    p.add_argument("--csv", action="store_true", help="CSV output")
    p.set_defaults(func=_cmd_c_vectors)

    p = common(sub.add_parser("suite", help="run a verification suite"))
    p.add_argument("name", choices=SUITES)
    p.set_defaults(func=_cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InternalInvariantBroken as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CTubeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
