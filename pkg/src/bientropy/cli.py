"""Command-line entry point: ``bientropy <subcommand> ...``.

Exit status is 0 on success, 1 on usage errors and 2 on data errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional

from . import __version__
from . import enumeration, finance, glyphs, scanner, sequences, stats
from .bitstring import classify, parse_bits
from .entropy import BIEN_MAX_BITS, WeightingScheme, entropy_profile

_METRIC_SCHEME = {
    "bien": WeightingScheme.POWER_LAW,
    "tbien": WeightingScheme.LOGARITHMIC,
    "uniform": WeightingScheme.UNIFORM,
    "linear": WeightingScheme.LINEAR,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class Output:
    """Collects a result and renders it as JSON or CSV with a parameter header."""

    def __init__(self, args):
        self.args = args
        self.fmt = args.format
        self.precision = args.precision
        # threads never changes results and its default is host dependent
        params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "threads")}
        self.meta = {"tool": "bientropy", "version": __version__,
                     "subcommand": args.command, "params": params}

    def num(self, x):
        if x is None:
            return ""
        if isinstance(x, float):
            return f"{x:.{self.precision}f}"
        return str(x)

    def render(self, result: dict, tables: List[tuple]) -> str:
        if self.fmt == "json":
            return json.dumps({"meta": self.meta, "result": result}, indent=2) + "\n"
        buf = io.StringIO()
        buf.write("# " + json.dumps(self.meta, sort_keys=True) + "\n")
        w = csv.writer(buf, lineterminator="\n")
        for n, (header, rows) in enumerate(tables):
            if n:
                buf.write("\n")
            w.writerow(header)
            for row in rows:
                w.writerow([self.num(c) for c in row])
        return buf.getvalue()


def _emit(args, result: dict, tables: List[tuple]):
    text = Output(args).render(result, tables)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _stats_rows(label, st):
    return [label, st.n, st.mean, st.stdev]


# subcommands -----------------------------------------------------------

def cmd_compute(args):
    if (args.bits is None) == (args.bits_file is None):
        raise UsageError("give exactly one of --bits or --bits-file")
    if args.bits_file:
        with open(args.bits_file, encoding="ascii") as fh:
            s = parse_bits(fh.read())
    else:
        s = parse_bits(args.bits)
    if args.metric == "bien" and s.n > args.cap:
        raise ValueError(f"bien is limited to {args.cap} bits (got {s.n}); use --metric tbien")
    prof = entropy_profile(s, _METRIC_SCHEME[args.metric])
    result = {"bits": str(s), "n": s.n, "metric": args.metric, "score": prof.score}
    tables = [(["metric", "n", "score"], [[args.metric, s.n, prof.score]])]
    if args.profile:
        result["profile"] = prof.to_dict()["rows"]
        tables.append((["k", "p", "H", "weight", "weighted"],
                       [[r.k, r.p, r.h, r.weight, r.weighted] for r in prof.rows]))
    if args.classify:
        rep = classify(s)
        result["periodicity"] = rep.to_dict()
        ev = rep.eventual_period
        tables.append((["class", "period", "eventual_period", "eventual_offset", "last_derivative"],
                       [[rep.cls, rep.period, ev[0] if ev else None, ev[1] if ev else None,
                         rep.last_derivative_bit]]))
    _emit(args, result, tables)


def cmd_enumerate(args):
    metrics = [m.strip() for m in args.metrics.split(",") if m.strip()]
    bad = set(metrics) - set(enumeration.METRICS)
    if bad:
        raise UsageError(f"unknown metric(s): {', '.join(sorted(bad))}")
    table = enumeration.enumerate_strings(args.n, metrics, threads=args.threads)
    result = table.summary()
    tables = [(["metric", "n", "mean", "stdev"],
               [_stats_rows(m, st) for m, st in table.stats.items()]),
              (["class", "count"], [[c, k] for c, k in table.class_counts.items()]),
              (["adjusted_r2"], [[table.adjusted_r2]])]
    if args.dump:
        rows = list(table.rows())
        result["rows"] = [dict(zip(("value", "bits", "bien", "tbien", "class"), r)) for r in rows]
        tables.append((["value", "bits", "bien", "tbien", "class"], rows))
    if args.ascending:
        dump = enumeration.ascending_dump(table, args.ascending)
        result["ascending"] = {"metric": args.ascending, "order": [list(x) for x in dump]}
        tables.append((["rank", "value", "bits", args.ascending],
                       [[i + 1, v, format(v, f"0{args.n}b"), s] for i, (v, s) in enumerate(dump)]))
    if args.histogram is not None:
        hist = enumeration.histogram(table, args.histogram_metric, args.histogram)
        result["histogram"] = {"metric": args.histogram_metric, "width": args.histogram,
                               "bins": [list(x) for x in hist]}
        tables.append((["bin_lower", "count"], [[e, c] for e, c in hist]))
    _emit(args, result, tables)


def cmd_primes(args):
    curve = sequences.prefix_curve(args.mode, args.max, args.metric)
    result = {"mode": args.mode, "metric": args.metric,
              "curve": [[n, s] for n, s in curve]}
    tables = [(["n", args.metric], [[n, s] for n, s in curve])]
    if args.check:
        top = args.max - args.max % 2
        if top < 4:
            raise UsageError("--check needs --max of at least 4")
        violations = sequences.check_nonperiodicity(args.mode, top)
        result["check"] = {"max_even_n": top, "violations": violations}
        note = "no periodicity violations" if not violations else f"{len(violations)} periodicity violations"
        tables.append((["check", "max_even_n", "violations"], [[note, top, len(violations)]]))
        print(f"{args.mode}: {note} for even n in [4, {top}]", file=sys.stderr)
    _emit(args, result, tables)


def cmd_digits(args):
    if (args.digits_file is None) == (args.champernowne is None):
        raise UsageError("give exactly one of --digits-file or --champernowne")
    if args.digits_file:
        stream = sequences.read_digits(args.digits_file)
    else:
        stream = sequences.champernowne(args.champernowne, integer_part=args.integer_part)
    bits = sequences.ENCODINGS[args.encoding](stream)
    rep = sequences.sectioned_analysis(bits, args.section_bits, args.count, args.metric)
    result = rep.to_dict()
    result.update({"source": stream.source_label, "encoding": args.encoding,
                   "scores": rep.scores.tolist(), "running_mean": rep.running_mean.tolist()})
    tables = [(["metric", "n", "mean", "stdev"], [_stats_rows(args.metric, rep.stats)]),
              (["index", "score", "running_mean"],
               [[i + 1, float(s), float(m)] for i, (s, m) in enumerate(zip(rep.scores, rep.running_mean))])]
    _emit(args, result, tables)


def cmd_glyph(args):
    gl = glyphs.read_glyph_file(args.file)
    reports = glyphs.charset_table(gl)
    cols = list(reports)
    result = {
        "glyphs": [{"name": g.name, **{c: reports[c].scores[i] for c in cols}} for i, g in enumerate(gl)],
        "stats": {c: reports[c].stats.to_dict() for c in cols},
    }
    tables = [(["name"] + cols, [[g.name] + [reports[c].scores[i] for c in cols] for i, g in enumerate(gl)]),
              (["column", "n", "mean", "stdev"], [_stats_rows(c, reports[c].stats) for c in cols])]
    _emit(args, result, tables)


def cmd_scan(args):
    rep = scanner.scan_file(args.file, args.window_bits, args.max_windows, threads=args.threads)
    result = rep.to_dict()
    result["scores"] = [[o, s] for o, s in rep.windows]
    tables = [(["offset_bytes", "tbien"], [[o, s] for o, s in rep.windows])]
    if args.summary:
        tables.append((["metric", "n", "mean", "stdev"], [_stats_rows("tbien", rep.stats)]))
    _emit(args, result, tables)


def cmd_finance(args):
    P = finance.load_prices(args.prices)
    rep = finance.run_pipeline(P, args.threshold, args.samples, args.seed, d_fixed=args.d_fixed,
                               metric=args.metric, outlier_sd=args.outlier_sd or None,
                               i_max=args.i_max)
    result = rep.to_dict()
    tables = [(["side", "mean_return", "stdev_H", "size"],
               [["upper", rep.upper.mean_return, rep.upper.stdev, rep.upper.size],
                ["lower", rep.lower.mean_return, rep.lower.stdev, rep.lower.size]]),
              (["R", "samples", "spread", "sparsity", "outliers_replaced"],
               [[rep.R, rep.samples, rep.spread, rep.sparsity, rep.outliers_replaced]])]
    _emit(args, result, tables)


def _read_column(path):
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip().rstrip(",")
            if not line or line.startswith("#"):
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not a number: {line!r}") from None
    return values


def cmd_ttest(args):
    res = stats.welch_test(_read_column(args.a), _read_column(args.b))
    _emit(args, res.to_dict(), [(["t", "df", "p"], [[res.t, res.df, res.p_two_sided]])])


# parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--precision", type=int, default=4, help="decimals in CSV output")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    parser = _Parser(prog="bientropy", description="BiEntropy of finite binary strings")
    parser.add_argument("--version", action="version", version=f"bientropy {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="score one bit string")
    p.add_argument("--bits")
    p.add_argument("--bits-file")
    p.add_argument("--metric", choices=sorted(_METRIC_SCHEME), default="bien")
    p.add_argument("--cap", type=int, default=BIEN_MAX_BITS)
    p.add_argument("--profile", action="store_true", help="include the per-derivative rows")
    p.add_argument("--classify", action="store_true", help="include the periodicity report")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enumerate", parents=[common], help="score every n-bit string")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--metrics", default="bien,tbien")
    p.add_argument("--dump", action="store_true", help="list every string")
    p.add_argument("--ascending", choices=enumeration.METRICS)
    p.add_argument("--histogram", type=float, metavar="WIDTH")
    p.add_argument("--histogram-metric", choices=enumeration.METRICS, default="bien")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("primes", parents=[common], help="prime-encoding prefix curves")
    p.add_argument("--mode", choices=sorted(sequences.GENERATORS), default="bep")
    p.add_argument("--max", type=int, default=512)
    p.add_argument("--metric", choices=("bien", "tbien"), default="tbien")
    p.add_argument("--check", action="store_true", help="check even prefixes for periodicity")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("digits", parents=[common], help="sectioned analysis of digit expansions")
    p.add_argument("--digits-file")
    p.add_argument("--champernowne", type=int, metavar="COUNT")
    p.add_argument("--integer-part", action="store_true",
                   help="count the leading 0 of the Champernowne constant as its first digit")
    p.add_argument("--encoding", choices=sorted(sequences.ENCODINGS), default="half")
    p.add_argument("--section-bits", type=int, default=32)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--metric", choices=("bien", "tbien"), default="bien")
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser("glyph", parents=[common], help="7x5 glyph set report")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_glyph)

    p = sub.add_parser("scan", parents=[common], help="windowed TBiEn of a raw file")
    p.add_argument("--file", required=True)
    p.add_argument("--window-bits", type=int, default=1024)
    p.add_argument("--max-windows", type=int)
    p.add_argument("--summary", action="store_true", help="append mean/stdev to CSV output")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("finance", parents=[common], help="BiEntropy-decile holding returns")
    p.add_argument("--prices", required=True)
    p.add_argument("--threshold", type=float, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--d-fixed", type=int)
    p.add_argument("--i-max", type=int)
    p.add_argument("--metric", choices=("bien", "tbien"), default="tbien")
    p.add_argument("--outlier-sd", type=float, default=3.0, help="0 disables outlier replacement")
    p.set_defaults(func=cmd_finance)

    p = sub.add_parser("ttest", parents=[common], help="Welch two-sample t-test")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_ttest)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"bientropy {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"bientropy {args.command}: {exc}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
