"""Command-line driver.

Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage error,
3 internal error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import traceback
from pathlib import Path

from .errors import IcoqError, UnknownSuite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL, EXIT_IO = 0, 1, 2, 3, 4

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    from .suites import suite_names
    p = _Parser(prog="icoq", description="Exact verification of icosahedral invariant data.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="one of: " + ", ".join(suite_names()))
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--out", type=Path, help="write the report here instead of stdout")
    v.add_argument("--parallel", action="store_true", help="run the suites of 'all' in worker processes")
    v.add_argument("--no-timing", action="store_true", help="zero every elapsed-time field")
    v.add_argument("--emit", choices=("poly",), help="attach derived polynomials to the report")
    c = sub.add_parser("classify", help="classify a plane curve singularity")
    c.add_argument("--curve", type=Path, required=True, help="file holding one polynomial in two variables")
    c.add_argument("--point", required=True, help='coordinates as "a,b"')
    c.add_argument("--field", help='minimal polynomial of the coordinate field, e.g. "c^3 - 5"')
    c.add_argument("--vars", help="comma-separated variable order (default: order of appearance)")
    c.add_argument("--format", choices=("json", "text"), default="text")
    return p


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        out.write_text(text, encoding="utf-8")


def _verify(args) -> int:
    from .report import render_json, render_text
    from .suites import run_suite
    report = run_suite(args.suite, emit=args.emit == "poly", parallel=args.parallel)
    timing = not args.no_timing
    text = render_json(report, timing) if args.format == "json" else render_text(report, timing)
    _write(text, args.out)
    return EXIT_FAIL if report.status == "fail" else EXIT_OK


def _curve_vars(text: str, given: str | None) -> list[str]:
    if given:
        names = [n.strip() for n in given.split(",") if n.strip()]
    else:
        names = list(dict.fromkeys(_NAME.findall(text)))
    if len(names) != 2:
        raise ValueError(f"a plane curve needs exactly two variables, found {names}")
    return names


def _classify(args) -> int:
    from .multipoly import PolyRing
    from .singclass import classify, field_from_text, germ_localize, parse_point
    text = args.curve.read_text(encoding="utf-8").strip()
    ring = PolyRing(_curve_vars(text, args.vars))
    curve = ring.parse(text)
    field = field_from_text(args.field)
    point = parse_point(args.point, field)
    rep = classify(germ_localize(curve, point))
    if args.format == "json":
        out = {"curve": str(curve), "point": [str(c) for c in point],
               "field": args.field or "Q", **rep.as_dict()}
        _write(json.dumps(out, indent=2) + "\n", None)
    else:
        extra = "" if rep.milnor is None else f"  (multiplicity {rep.multiplicity}, " \
                                               f"Milnor {rep.milnor}, delta {rep.delta})"
        _write(f"{rep.type}{extra}\n", None)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _verify(args) if args.command == "verify" else _classify(args)
    except UnknownSuite as exc:
        print(f"icoq: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"icoq: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (IcoqError, ValueError) as exc:
        if isinstance(exc, ValueError):
            print(f"icoq: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"icoq: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception:
        print("icoq: internal error", file=sys.stderr)
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
