"""Command-line entry point.

Exit status: 0 on success, 1 on invalid input, 2 when an orbit enumeration
exceeds its cap.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .classify import classify, sl2_admissible
from .errors import OrbitCapExceeded, SpecError, WeightFamError
from .problem import load_problem, parse_rational
from .report import describe_level, render_text, report_to_json
from .rootsys import AlgebraType, Weight, build_root_system, dot_orbit, level_diagnostic

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2

_VALUE_FLAGS = ("--level", "--weight")
_NEGATIVE = re.compile(r"^-\d")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _add_outputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--text", metavar="PATH", help="write the text report here ('-' for stdout)")


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="weightfam", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify families from a problem-spec JSON file")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--cap", type=_positive_int, help="orbit cap (overrides orbit_cap in the problem file)")
    _add_outputs(p)

    p = sub.add_parser("sl2-admissible", help="sl2 at admissible level k = u/v - 2")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--cap", type=_positive_int)
    _add_outputs(p)

    p = sub.add_parser("level-check", help="critical / non-simple vacuum diagnostic")
    p.add_argument("--algebra", required=True, help="e.g. A2, C2, D4, G2")
    p.add_argument("--level", required=True, help="rational level, e.g. -3/2")

    p = sub.add_parser("orbit", help="shifted Weyl orbit of a weight")
    p.add_argument("--algebra", required=True)
    p.add_argument("--weight", required=True, help="comma-separated Dynkin labels, e.g. -3/2,0")
    p.add_argument("--cap", type=_positive_int)
    return ap


def _emit(report, args) -> None:
    wrote = False
    for target, render in ((args.json, report_to_json), (args.text, render_text)):
        if target is None:
            continue
        wrote = True
        content = render(report)
        if target == "-":
            sys.stdout.write(content)
        else:
            Path(target).write_text(content, encoding="utf-8")
    if not wrote:
        sys.stdout.write(render_text(report))


def _run(args) -> int:
    if args.command == "classify":
        spec = load_problem(args.input)
        cap = args.cap if args.cap is not None else spec.orbit_cap
        report = classify(build_root_system(spec.algebra), spec.level, spec.highest_weights, cap)
        _emit(report, args)
    elif args.command == "sl2-admissible":
        _emit(sl2_admissible(args.u, args.v, args.cap), args)
    elif args.command == "level-check":
        rs = build_root_system(AlgebraType.parse(args.algebra))
        print(describe_level(level_diagnostic(rs, parse_rational(args.level, "--level"))))
    elif args.command == "orbit":
        rs = build_root_system(AlgebraType.parse(args.algebra))
        parts = [x for x in args.weight.split(",") if x.strip()]
        if len(parts) != rs.rank:
            raise SpecError(f"--weight: {rs.algebra_type} needs {rs.rank} labels, got {len(parts)}")
        lam = Weight(tuple(parse_rational(x.strip(), f"--weight[{j}]") for j, x in enumerate(parts)))
        orbit = sorted(dot_orbit(rs, lam, args.cap))
        print(f"orbit size: {len(orbit)}")
        for w in orbit:
            print(w)
    return EXIT_OK


def _attach_negative_values(argv: list[str]) -> list[str]:
    # argparse would read "-3/2" as an option; bind it to its flag instead
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and _NEGATIVE.match(nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_negative_values(argv))
    try:
        return _run(args)
    except OrbitCapExceeded as exc:
        print(f"weightfam: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (WeightFamError, ValueError, OSError) as exc:
        print(f"weightfam: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
