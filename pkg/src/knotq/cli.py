"""Command line entry point ``knotq``.

Exit codes: 0 success, 1 a counterexample or a positive Q(-1) test (worth a
closer look), 2 bad input, 3 skein node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .curves import (
    DEFAULT_CAP,
    CurveError,
    distance,
    parse_open_gauss,
    realize,
    verify_lemma_bounds,
)
from .diagrams.pd import PDError, bridge_length, parse_pd_file
from .diagrams.skein import DEFAULT_BUDGET, BudgetExceeded, SkeinEngine, q_at_minus_one
from .maximality import scan
from .tables import TableError, load_table, render_report, render_report_jsonl

EXIT_OK, EXIT_FOUND, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _diagrams(path: str):
    try:
        return parse_pd_file(_read(path))
    except PDError as exc:
        raise InputError(str(exc)) from exc


def _prefix(d) -> str:
    return f"{d.name} " if d.name else ""


def cmd_q(args) -> int:
    engine = SkeinEngine(budget=args.budget)
    lines = []
    status = EXIT_OK
    for d in _diagrams(args.pd_file):
        q = engine.evaluate(d).poly
        value, m = q_at_minus_one(q)
        if m is None:
            status = EXIT_FOUND
        lines.append(f"{_prefix(d)}Q={q} maxdeg={q.max_degree()} m={'none' if m is None else m}")
    _emit("".join(line + "\n" for line in lines), args.out)
    return status


def cmd_bridge(args) -> int:
    lines = []
    for d in _diagrams(args.pd_file):
        c, b = d.crossing_number, bridge_length(d)
        lines.append(f"{_prefix(d)}c={c} d={b} c-d={c - b}")
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


def cmd_curves(args) -> int:
    try:
        report = verify_lemma_bounds(args.n, cap=args.cap, jobs=args.jobs)
    except CurveError as exc:
        raise InputError(str(exc)) from exc
    text = report.render_jsonl() if args.format == "jsonl" else report.render_text()
    _emit(text, args.out)
    if not report.ok:
        print(f"COUNTEREXAMPLE: {len(report.violations)} bound violation(s)", file=sys.stderr)
        return EXIT_FOUND
    return EXIT_OK


def cmd_distance(args) -> int:
    try:
        m = realize(parse_open_gauss(" ".join(args.word)))
    except CurveError as exc:
        raise InputError(str(exc)) from exc
    _emit(f"{distance(m)}\n", args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    try:
        table = load_table(args.table)
    except OSError as exc:
        raise InputError(f"cannot read {args.table}: {exc.strerror}") from exc
    except TableError as exc:
        raise InputError(str(exc)) from exc
    verdicts = scan(table, budget=args.budget, jobs=args.jobs)
    _emit(render_report(verdicts), args.out)
    if args.jsonl:
        Path(args.jsonl).write_text(render_report_jsonl(verdicts), encoding="utf-8")
    positives = [v for v in verdicts if v.q_self_positive]
    if positives:
        if args.candidates:
            with open(args.candidates, "a", encoding="utf-8") as fh:
                for v in positives:
                    fh.write(json.dumps(v.as_dict(), sort_keys=True) + "\n")
        for v in positives:
            print(f"Q(-1) TEST FIRED for {v.knot}", file=sys.stderr)
        return EXIT_FOUND
    errors = [v for v in verdicts if v.error]
    for v in errors:
        print(f"error in {v.knot}: {v.error}", file=sys.stderr)
    if any(v.error_kind == "input" for v in errors):
        return EXIT_INPUT
    if errors:
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="knotq", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, budget=False, jobs=False):
        sp.add_argument("--out", help="write the result here instead of stdout")
        if budget:
            sp.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                            help="skein node budget (default from KNOTQ_BUDGET or 10^7)")
        if jobs:
            sp.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    sp = sub.add_parser("q", help="Q polynomial, its top degree and Q(-1) exponent")
    sp.add_argument("pd_file", help="PD file, one diagram per line ('-' for stdin)")
    common(sp, budget=True)
    sp.set_defaults(func=cmd_q)

    sp = sub.add_parser("bridge", help="crossing number and maximal bridge length")
    sp.add_argument("pd_file")
    common(sp)
    sp.set_defaults(func=cmd_bridge)

    sp = sub.add_parser("curves", help="enumerate open curves and check the distance bounds")
    sp.add_argument("n", type=int, help="largest crossing number to enumerate")
    sp.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="refuse n above this")
    sp.add_argument("--format", choices=("text", "jsonl"), default="text")
    common(sp, jobs=True)
    sp.set_defaults(func=cmd_curves)

    sp = sub.add_parser("distance", help="distance between the endpoints of an open curve")
    sp.add_argument("word", nargs="*", help="the curve's crossing labels in order")
    common(sp)
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("scan", help="run the maximality obstructions over a knot table")
    sp.add_argument("table", help="JSON-lines knot table")
    sp.add_argument("--jsonl", help="also write the verdicts as JSON lines here")
    sp.add_argument("--candidates", help="append knots firing the Q(-1) test here")
    common(sp, budget=True, jobs=True)
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
