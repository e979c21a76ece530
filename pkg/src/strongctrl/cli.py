"""Command-line front end.

Exit status of ``analyze``: 0 guaranteed, 2 not guaranteed, 3 undecided,
1 usage or input error.  ``selftest`` exits 0 iff every criterion passes.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import Query, analyze
from .pattern import PatternParseError, PatternShapeError, load_pattern, transpose
from .sgraph import graph_of

VARIATIONS = {"lti": "time-invariant", "tv": "time-varying"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="strongctrl", description="Strong structural controllability from nonzero patterns.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    an = sub.add_parser("analyze", help="analyze a pattern pair")
    an.add_argument("--a", required=True, metavar="PATH", help="state pattern file (n x n)")
    io = an.add_mutually_exclusive_group(required=True)
    io.add_argument("--b", metavar="PATH", help="input pattern file (n x r)")
    io.add_argument("--c", metavar="PATH", help="output pattern file (m x n)")
    an.add_argument("--domain", choices=["discrete", "continuous"], required=True)
    an.add_argument("--variation", choices=sorted(VARIATIONS), required=True)
    an.add_argument("--horizon", type=int, help="window length t1 - t0 (discrete time)")
    an.add_argument("--direction", choices=["controllability", "observability"])
    an.add_argument("--output", choices=["json", "text"], default="json")
    an.add_argument("--verbose", action="store_true", help="include reduction traces in JSON")

    st = sub.add_parser("selftest", help="reproduce the reference results and oracle batches")
    st.add_argument("--seed", type=int, default=None)
    return parser


def _query(args) -> Query:
    direction = args.direction or ("controllability" if args.b else "observability")
    if direction == "controllability" and args.b is None:
        raise UsageError("controllability needs --b")
    if direction == "observability" and args.c is None:
        raise UsageError("observability needs --c")
    if args.horizon is not None and args.domain != "discrete":
        raise UsageError("--horizon only applies to --domain discrete")
    if args.domain == "discrete" and args.variation == "tv" and args.horizon is None:
        raise UsageError("--domain discrete --variation tv needs --horizon")
    try:
        return Query(args.domain, VARIATIONS[args.variation], direction, args.horizon)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _text_report(report, a, other) -> str:
    q = report.query
    lines = [
        f"question: {q.direction}, {q.time_domain} {q.variation}"
        + (f", horizon {q.horizon}" if q.horizon is not None else ""),
        f"answer: {report.answer}",
    ]
    if q.direction == "observability":
        a, other = transpose(a), transpose(other)
        lines.append("graph of the transposed pair (A^T, C^T):")
    else:
        lines.append("graph of (A, B):")
    g = graph_of(a, other)
    lines.append(f"  states 1..{g.n}, inputs {g.n + 1}..{g.n + g.r}")
    lines += [f"  {v} -> {w}" for v, w in g.edges()] or ["  (no edges)"]
    for v in report.verdicts:
        head = f"{v.condition}" + (f" (T={v.horizon})" if v.horizon is not None else "")
        status = "holds" if v.holds else f"fails, witness {sorted(v.witness)}"
        lines.append(f"{head}: {status}")
        for k, s in enumerate(v.trace or (), start=1):
            lines.append(
                f"  step {k}: |V|={len(s.V)} T={sorted(s.candidates)} "
                f"{s.branch} v={s.picked} removes {sorted(s.removed)}"
            )
    lines += [f"note: {n}" for n in report.notes]
    return "\n".join(lines) + "\n"


def run_analyze(args, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        q = _query(args)
        a = load_pattern(args.a)
        other = load_pattern(args.b if args.b is not None else args.c)
        record = args.output == "text" or args.verbose
        report = analyze(a, other, q, record=record)
    except UsageError as exc:
        print(f"strongctrl: error: {exc}", file=err)
        return 1
    except PatternParseError as exc:
        print(f"strongctrl: parse error: {exc}", file=err)
        return 1
    except OSError as exc:
        print(f"strongctrl: cannot read {exc.filename}: {exc.strerror}", file=err)
        return 1
    except (PatternShapeError, ValueError) as exc:
        print(f"strongctrl: dimension error ({args.a}, {args.b or args.c}): {exc}", file=err)
        return 1
    if args.output == "json":
        out.write(report.to_json(verbose=args.verbose) + "\n")
    else:
        out.write(_text_report(report, a, other))
    return report.exit_code


def run_selftest(seed: int | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    from .selftest import DEFAULT_SEED, run_all

    seed = DEFAULT_SEED if seed is None else seed
    ok = run_all(seed, echo=lambda line: print(line, file=out))
    print(f"selftest (seed {seed}): {'all criteria pass' if ok else 'FAILURES'}", file=out)
    return 0 if ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return run_analyze(args)
    return run_selftest(args.seed)


if __name__ == "__main__":
    sys.exit(main())
