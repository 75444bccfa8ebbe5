"""Command-line surface: validate, graph, add, classify, verify, fuzz, render, serve."""
from __future__ import annotations

import argparse
import json
import sys

from . import fuzz as fuzzmod
from . import moves, render, sweep
from .arrangement import (
    Arrangement,
    arrangement_from_dict,
    arrangement_to_dict,
    load_arrangement,
    validate,
)
from .errors import CircleSweepError
from .geom import Axis
from .jsonio import canonical_json


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _parse_error(message: str) -> SystemExit:
    sys.stderr.write(f"error: {message}\n")
    return SystemExit(2)


def _load(path: str) -> Arrangement:
    try:
        return load_arrangement(path)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise _parse_error(f"cannot read arrangement {path!r}: {exc}") from exc


def _axis(name: str) -> Axis:
    return Axis.X if name == "x" else Axis.Y


def cmd_validate(args) -> int:
    arr = _load(args.file)
    report = validate(arr, lenient=args.lenient)
    _write(canonical_json(report.to_dict()), None)
    return 0 if report.valid else 1


def cmd_graph(args) -> int:
    arr = _load(args.file)
    report = validate(arr)
    if not report.valid:
        _write(canonical_json(report.to_dict()), None)
        return 1
    if args.format == "svg":
        _write(render.render_svg(arr), args.output)
        return 0
    g = sweep.build_graph(arr, _axis(args.axis), declare_regular_poles=args.declare_regular_poles)
    if args.format == "dot":
        _write(g.to_dot(), args.output)
    else:
        _write(canonical_json(g.to_dict()), args.output)
    return 0


def cmd_classify(args) -> int:
    arr = _load(args.file)
    if not validate(arr).valid:
        _write(canonical_json(validate(arr).to_dict()), None)
        return 1
    mp = moves.resolve_move_point(arr, args.circle, args.angle)
    axes = [Axis.X, Axis.Y] if args.axis == "both" else [_axis(args.axis)]
    out = [moves.classify(arr, axis, mp).to_dict() for axis in axes]
    _write(canonical_json(out if len(out) > 1 else out[0]), None)
    return 0


def cmd_add(args) -> int:
    arr = _load(args.file)
    if not validate(arr).valid:
        _write(canonical_json(validate(arr).to_dict()), None)
        return 1
    mp = moves.resolve_move_point(arr, args.circle, args.angle)
    report = moves.verify(arr, mp, args.radius)
    _write(canonical_json(arrangement_to_dict(report.result)), args.output)
    if args.report:
        _write(canonical_json(report.to_dict()), args.report)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    arr = _load(args.file)
    if not validate(arr).valid:
        _write(canonical_json(validate(arr).to_dict()), None)
        return 1
    try:
        with open(args.moves, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        move_list = doc["moves"]
    except (OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise _parse_error(f"cannot read moves file {args.moves!r}: {exc}") from exc
    reports = []
    ok = True
    for mv in move_list:
        mp = moves.resolve_move_point(arr, mv["circle"], float(mv["angle"]))
        radius = mv.get("radius")
        report = moves.verify(arr, mp, None if radius is None else float(radius))
        reports.append(report.to_dict())
        ok = ok and report.ok
        arr = report.result
    _write(canonical_json(reports), args.output)
    return 0 if ok else 1


def cmd_fuzz(args) -> int:
    config = fuzzmod.FuzzConfig(
        seeds=args.seeds,
        moves_per_seed=args.moves,
        rng_seed=args.rng,
        oracle_samples=args.oracle_samples,
    )
    report = fuzzmod.fuzz_run(config)
    _write(canonical_json(report.to_dict()), args.output)
    return 0 if report.ok else 1


def cmd_render(args) -> int:
    arr = _load(args.file)
    if not validate(arr).valid:
        _write(canonical_json(validate(arr).to_dict()), None)
        return 1
    _write(render.render_svg(arr), args.output)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlesweep",
        description="Circle arrangements, their level graphs, and small-circle move verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the arrangement clauses")
    p.add_argument("file")
    p.add_argument("--lenient", action="store_true", help="restrict checks to the region closure")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("graph", help="emit the level graph")
    p.add_argument("file")
    p.add_argument("--axis", choices=("x", "y"), default="x")
    p.add_argument("--format", choices=("json", "dot", "svg"), default="json")
    p.add_argument(
        "--declare-regular-poles",
        action="store_true",
        help="also emit degree-2 vertices at transverse-tangent poles",
    )
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("classify", help="classify a move without applying it")
    p.add_argument("file")
    p.add_argument("--circle", required=True)
    p.add_argument("--angle", type=float, required=True)
    p.add_argument("--axis", choices=("x", "y", "both"), default="both")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("add", help="apply one move; writes the new arrangement")
    p.add_argument("file")
    p.add_argument("--circle", required=True)
    p.add_argument("--angle", type=float, required=True)
    p.add_argument("--radius", type=float, default=None)
    p.add_argument("-o", "--output")
    p.add_argument("--report")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("verify", help="replay a move file and verify every rewrite")
    p.add_argument("file")
    p.add_argument("--moves", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="randomized move sequences with per-move checks")
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--moves", type=int, default=3)
    p.add_argument("--rng", type=int, default=0)
    p.add_argument("--oracle-samples", type=int, default=20)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("render", help="emit an SVG of the arrangement and both graphs")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("serve", help="start the local JSON service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except CircleSweepError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
