"""Command-line front end.

Exit codes: 0 success, 1 negative answer (no useful catalyst, empty region,
useless catalyst), 2 input error, 3 internal inconsistency between a theorem
prediction and the brute-force oracle.

Examples:
  catalysis prob "0.6,0.2,0.2" "0.5,0.3,0.2"
  catalysis region2 "0.6,0.2,0.2" "0.5,0.4,0.1" --json
  catalysis construct "0.6,0.2,0.2" "0.5,0.3,0.2" --alpha 0.801
  catalysis sweep random --pairs 200 --seed 1 --csv out.csv
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import catalyst2d, catalystnd, oracle, sweep
from .probvec import ProbVec, ProbVecError, make_probvec, parse_vector, to_rat
from .vidal import TransformPair, catalysis_admissible, critical_set, make_pair

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2, 3


@dataclass
class RunConfig:
    arithmetic: str = "exact"
    output: str = "human"
    seed: int = 0
    theta: Fraction = Fraction(1, 1000)
    resolution: int = 50
    dmax: int = 4
    strict: bool = False


def dec(q) -> str:
    return f"{float(q):.6g}"


def _vector(text: str, name: str, cfg: RunConfig) -> ProbVec:
    vals = parse_vector(text)
    total = sum(vals)
    if total != 1:
        if cfg.strict:
            raise ProbVecError(f"{name} sums to {total}, not 1 (strict mode)")
        if total > 0:
            print(f"warning: normalizing {name} (sum was {total})", file=sys.stderr)
    return make_probvec(vals, normalize=True)


def _pair(args, cfg: RunConfig) -> TransformPair:
    return make_pair(_vector(args.x, "x", cfg), _vector(args.y, "y", cfg))


def _emit(cfg: RunConfig, payload: dict, lines: list[str]) -> None:
    if cfg.output == "structured":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _fmt_set(L) -> str:
    return "{" + ", ".join(map(str, L)) + "}"


def _pair_payload(command: str, pair: TransformPair) -> dict:
    return {
        "command": command,
        "n": pair.n,
        "x": pair.x.to_strings(),
        "y": pair.y.to_strings(),
        "p": str(pair.p),
        "p_decimal": dec(pair.p),
        "critical_set": list(critical_set(pair)),
        "admissible": catalysis_admissible(pair),
    }


def _pair_lines(pair: TransformPair) -> list[str]:
    return [
        f"n = {pair.n}",
        f"x = {pair.x}",
        f"y = {pair.y}",
        f"P(x -> y) = {pair.p} ({dec(pair.p)})",
        f"L = {_fmt_set(critical_set(pair))}",
        "admissible: " + ("yes" if catalysis_admissible(pair) else "no (no catalyst can raise P)"),
    ]


def cmd_prob(args, cfg: RunConfig) -> int:
    pair = _pair(args, cfg)
    _emit(cfg, _pair_payload("prob", pair), _pair_lines(pair))
    return EXIT_OK


def _region_payload(region: catalyst2d.RatioRegion) -> dict:
    return {
        "region": region.to_json(),
        "c1_region": [[str(a), str(b)] for a, b in region.c1_intervals()],
        "empty": region.is_empty,
    }


def cmd_region2(args, cfg: RunConfig) -> int:
    pair = _pair(args, cfg)
    region = catalyst2d.region2(pair)
    bounds = catalyst2d.pair_bounds(pair) if catalysis_admissible(pair) else []
    payload = _pair_payload("region2", pair)
    payload["bounds"] = [
        {"r1": b.r1, "r2": b.r2, "m": None if b.m is None else str(b.m), "M": str(b.M)} for b in bounds
    ]
    payload.update(_region_payload(region))
    lines = _pair_lines(pair)
    for b in bounds:
        m = "inf" if b.m is None else str(b.m)
        lines.append(f"  (r1, r2) = ({b.r1}, {b.r2}): useless band [{b.M}, {m}]")
    if region:
        lines.append(f"S = {region}")
        c1 = " ∪ ".join(f"({a}, {b})" for a, b in region.c1_intervals())
        lines.append(f"c1 in {c1}")
    else:
        lines.append("S = empty (no 2-dimensional catalyst is useful)")
    _emit(cfg, payload, lines)
    return EXIT_OK if region else EXIT_NEGATIVE


def cmd_exists(args, cfg: RunConfig) -> int:
    pair = _pair(args, cfg)
    any_dim = catalystnd.exists_catalyst(pair)
    region = catalyst2d.region2(pair)
    payload = _pair_payload("exists", pair)
    payload["exists_catalyst"] = any_dim
    payload["exists_2d"] = bool(region)
    payload.update(_region_payload(region))
    lines = _pair_lines(pair) + [
        f"useful catalyst exists: {'yes' if any_dim else 'no'}",
        f"useful 2-dimensional catalyst exists: {'yes' if region else 'no'}",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK if any_dim else EXIT_NEGATIVE


def cmd_construct(args, cfg: RunConfig) -> int:
    pair = _pair(args, cfg)
    if not catalystnd.exists_catalyst(pair):
        xn, yn = pair.x.at(pair.n), pair.y.at(pair.n)
        msg = (f"no useful catalyst: need P < min(x_n/y_n, 1), "
               f"but P = {pair.p}, x_n = {xn}, y_n = {yn}")
        if cfg.output == "structured":
            payload = _pair_payload("construct", pair)
            payload["error"] = msg
            print(json.dumps(payload, indent=2))
        else:
            print(msg, file=sys.stderr)
        return EXIT_NEGATIVE
    alpha = to_rat(args.alpha) if args.alpha is not None else None
    trace = catalystnd.construct_catalyst(pair, theta=cfg.theta, alpha=alpha)
    check = oracle.verify_useful(pair.x, pair.y, trace.catalyst)
    if not check.useful:
        print("internal error: constructed catalyst not useful per oracle", file=sys.stderr)
        return EXIT_INCONSISTENT
    payload = _pair_payload("construct", pair)
    payload.update(trace.to_json())
    lines = _pair_lines(pair) + [
        f"h = {trace.h}",
        f"alpha lower bounds: P*y_n/x_n = {trace.tail_bound}, {trace.h_branch} bound = {trace.h_bound}",
        f"alpha_min = {trace.alpha_min} ({dec(trace.alpha_min)})",
        f"alpha = {trace.alpha} ({dec(trace.alpha)})",
        f"k = {trace.k}",
        "catalyst = (" + ", ".join(dec(c) for c in trace.catalyst) + ")",
        f"P before = {trace.p_before} ({dec(trace.p_before)})",
        f"P after  = {trace.p_after} ({dec(trace.p_after)})",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    pair = _pair(args, cfg)
    c = _vector(args.c, "c", cfg)
    if not c.is_positive:
        raise ProbVecError("catalyst components must be strictly positive")
    if cfg.arithmetic == "float":
        before, after, useful = oracle.useful_float(
            [float(a) for a in pair.x], [float(a) for a in pair.y], [float(a) for a in c]
        )
        payload = {"command": "verify", "catalyst": c.to_strings(), "p_before": repr(before),
                   "p_after": repr(after), "useful": useful, "arithmetic": "float"}
        lines = [f"P before = {before!r}", f"P after  = {after!r}", f"useful: {useful}"]
    else:
        rep = oracle.verify_useful(pair.x, pair.y, c)
        useful = rep.useful
        payload = {"command": "verify", **rep.to_json(), "arithmetic": "exact"}
        lines = [
            f"catalyst = {c}",
            f"P before = {rep.p_before} ({dec(rep.p_before)})",
            f"P after  = {rep.p_after} ({dec(rep.p_after)})",
            f"useful: {'yes' if useful else 'no'}",
        ]
        if rep.witness_index is not None:
            lines.append(f"minimum still attained at tail index l = {rep.witness_index}")
        if c.n == 2 and catalysis_admissible(pair):
            predicted = catalyst2d.is_useful_2d(pair, c)
            payload["useful_theorem"] = predicted
            lines.append(f"2D criterion predicts: {'useful' if predicted else 'useless'}")
            if predicted != useful:
                _emit(cfg, payload, lines)
                return EXIT_INCONSISTENT
    _emit(cfg, payload, lines)
    return EXIT_OK if useful else EXIT_NEGATIVE


def cmd_sweep(args, cfg: RunConfig) -> int:
    if args.source == "grid":
        if len(args.vectors) != 2:
            raise ProbVecError("sweep grid needs X and Y")
        pair = make_pair(_vector(args.vectors[0], "x", cfg), _vector(args.vectors[1], "y", cfg))
        rows = sweep.sweep_grid(pair, cfg.resolution, cfg.arithmetic)
    else:
        if args.vectors:
            raise ProbVecError("sweep random draws its own pairs; drop X and Y")
        rows = sweep.sweep_random(
            cfg.seed, args.pairs, cfg.resolution, cfg.dmax, args.search_resolution,
            cfg.arithmetic, admissible=None if args.any_pairs else True, workers=args.workers,
        )
    bad = sum(not r.agree for r in rows)
    if args.csv:
        text = sweep.rows_to_csv(rows)
        if args.csv == "-":
            sys.stdout.write(text)
        else:
            Path(args.csv).write_text(text)
    if cfg.output == "structured":
        print(json.dumps({"command": "sweep", "source": args.source, "arithmetic": cfg.arithmetic,
                          "rows": len(rows), "disagreements": bad,
                          "useful_oracle": sum(r.useful_oracle for r in rows)}, indent=2))
    elif args.csv != "-":
        print(f"{len(rows)} rows, {sum(r.useful_oracle for r in rows)} useful by oracle, "
              f"{bad} disagreements")
    return EXIT_INCONSISTENT if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured JSON output")
    common.add_argument("--strict", action="store_true", help="reject vectors not summing to 1")
    common.add_argument("--arithmetic", choices=("exact", "float"), default="exact",
                        help="float mode (rtol 1e-12) is for large sweeps only")

    ap = argparse.ArgumentParser(prog="catalysis", description="Entanglement catalysis calculator.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn in (("prob", cmd_prob), ("region2", cmd_region2), ("exists", cmd_exists)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("x")
        p.add_argument("y")
        p.set_defaults(func=fn)

    p = sub.add_parser("construct", parents=[common])
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--theta", default="1/1000", help="alpha = alpha_min + theta*(1-alpha_min)")
    p.add_argument("--alpha", default=None, help="pin the geometric ratio directly")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("c")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common])
    p.add_argument("source", choices=("grid", "random"))
    p.add_argument("vectors", nargs="*", metavar="X Y")
    p.add_argument("--resolution", type=int, default=50)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--search-resolution", type=int, default=20)
    p.add_argument("--seed", type=int, default=0, help="64-bit seed; same seed, same samples")
    p.add_argument("--pairs", type=int, default=200)
    p.add_argument("--any-pairs", action="store_true", help="do not filter on admissibility")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", default=None, help="write rows to PATH ('-' for stdout)")
    p.set_defaults(func=cmd_sweep)
    return ap


def config_from_args(args) -> RunConfig:
    cfg = RunConfig(
        arithmetic=args.arithmetic,
        output="structured" if args.json else "human",
        strict=args.strict,
    )
    if hasattr(args, "theta"):
        cfg.theta = to_rat(args.theta)
    if hasattr(args, "resolution"):
        cfg.resolution, cfg.dmax, cfg.seed = args.resolution, args.dmax, args.seed
        if cfg.resolution < 2 or cfg.dmax < 2:
            raise ProbVecError("resolution and dmax must be at least 2")
        if not 0 <= cfg.seed < 2**64:
            raise ProbVecError("seed must be a 64-bit unsigned integer")
    return cfg


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = config_from_args(args)
        return args.func(args, cfg)
    except catalystnd.ConstructionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ProbVecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
