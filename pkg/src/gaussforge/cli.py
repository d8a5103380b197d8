"""Command-line interface: ``gaussforge <info|project|moves|fuzz|render>``.

Exit status: 0 success, 1 property violation, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fuzz
from .codec import parse, report, serialize
from .errors import CodecError
from .moves import SearchBudget, enumerate_moves, equivalence_search
from .projection import METHODS, project

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _codes(args) -> list[str]:
    if args.file:
        try:
            with open(args.file) as fh:
                lines = [ln.strip() for ln in fh]
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc}") from exc
        return [ln for ln in lines if ln and not ln.startswith("#")]
    return [args.code or ""]


def _parse(code: str):
    try:
        return parse(code)
    except CodecError as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from exc


def cmd_info(args, out):
    for code in _codes(args):
        D = _parse(code)
        rep = report(D)
        if args.json:
            print(json.dumps(rep, sort_keys=False), file=out)
        else:
            for key, value in rep.items():
                if isinstance(value, dict):
                    value = ",".join(f"{k}:{v}" for k, v in value.items())
                elif isinstance(value, bool):
                    value = str(value).lower()
                print(f"{key}\t{value}", file=out)
        if args.out:
            from .render import render_svg
            render_svg(D, args.out, title=rep["code"] or "empty")
    return EXIT_OK


def cmd_project(args, out):
    for code in _codes(args):
        trace = project(_parse(code), args.method)
        if args.trace:
            for k, stage in enumerate(trace.stages):
                dead = ",".join(map(str, stage.deleted)) or "-"
                print(f"{k}\t{stage.diagram.code()}\t{dead}", file=out)
        print(serialize(trace.final), file=out)
    return EXIT_OK


def cmd_moves(args, out):
    for code in _codes(args):
        D = _parse(code)
        if args.target is None:
            for m in enumerate_moves(D, include_increasing=args.increasing):
                print(str(m), file=out)
            continue
        target = _parse(args.target)
        budget = SearchBudget(args.max_chords, args.depth, args.max_nodes)
        res = equivalence_search(D, target, budget)
        print(f"{res.status}\texplored={res.explored}", file=out)
        for step in res.path or []:
            print(f"{step.before.code()}\t{step.move}\t{step.after.code()}", file=out)
    return EXIT_OK


def cmd_fuzz(args, out):
    checks = tuple(c for c in args.checks.split(",") if c) if args.checks else tuple(fuzz.CHECKS)
    try:
        config = fuzz.FuzzConfig(args.seeds, args.max_chords, args.depth, checks, args.seed_base)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    rep = fuzz.run(config)
    for f in rep.failures:
        print(f"FAIL {f}", file=out)
    verdict = "pass" if rep.ok else "fail"
    print(f"{verdict}\tcases={rep.cases}\tmoves={rep.applications}\tfailures={len(rep.failures)}", file=out)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_render(args, out):
    from .render import render_svg

    codes = _codes(args)
    if len(codes) != 1:
        raise InputError("render takes exactly one code")
    D = _parse(codes[0])
    try:
        render_svg(D, args.out, title=serialize(D) or "empty")
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc}") from exc
    print(args.out, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gaussforge", description="Gauss-diagram projections of virtual knots.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_code(sp):
        sp.add_argument("code", nargs="?", default="", help="Gauss code, e.g. O1+U2+O3+U1+O2+U3+")
        sp.add_argument("--file", help="read codes from a file, one per line")
        return sp

    sp = with_code(sub.add_parser("info", help="report invariants of a diagram"))
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out", help="also write an SVG picture here")
    sp.set_defaults(func=cmd_info)

    sp = with_code(sub.add_parser("project", help="project to a smaller diagram"))
    sp.add_argument("--method", choices=sorted(METHODS), default="classical")
    sp.add_argument("--trace", action="store_true", help="print every stage: index, code, deleted labels")
    sp.set_defaults(func=cmd_project)

    sp = with_code(sub.add_parser("moves", help="list moves, or search for a move path to --target"))
    sp.add_argument("--increasing", action="store_true")
    sp.add_argument("--target")
    sp.add_argument("--depth", type=int, default=4)
    sp.add_argument("--max-chords", type=int, default=6)
    sp.add_argument("--max-nodes", type=int, default=5000)
    sp.set_defaults(func=cmd_moves)

    sp = sub.add_parser("fuzz", help="run the property suites on random diagrams")
    sp.add_argument("--seeds", type=int, default=100)
    sp.add_argument("--max-chords", type=int, default=8)
    sp.add_argument("--depth", type=int, default=1, help="moves applied per case")
    sp.add_argument("--checks", help=f"comma-separated subset of: {','.join(fuzz.CHECKS)}")
    sp.add_argument("--seed-base", type=int, default=0)
    sp.set_defaults(func=cmd_fuzz)

    sp = with_code(sub.add_parser("render", help="draw the chord diagram as SVG"))
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
