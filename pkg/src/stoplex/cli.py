"""Command line interface.

Exit codes: 0 success, 2 input errors (missing/empty/undecodable input),
3 degenerate corpora (no tf-idf signal or zero variance), 1 anything else.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ._version import __version__
from .corpus import tokenize
from .errors import (
    AllZeroWeights,
    DecodeError,
    DegenerateDistribution,
    EmptyCorpus,
    StoplexError,
)
from .report import AnalysisReport, RunConfig, format_percent, run_pipeline


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stoplex",
        description="Detect stop-word candidates in a document corpus via tf-idf "
        "and analyze where they fall in the text.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="run the full analysis on files or directories")
    analyze.add_argument("inputs", nargs="+", help="text files and/or directories of text files")
    analyze.add_argument("--fraction", default="0.05", help="selection fraction in (0,1), default 0.05")
    analyze.add_argument(
        "--averaging", choices=("all", "containing"), default="all",
        help="average tf-idf over all documents or only containing ones",
    )
    analyze.add_argument(
        "--xbar", choices=("midpoint", "candidates"), default="midpoint",
        help="sample mean for the Z test: index-range midpoint or candidate mean",
    )
    analyze.add_argument("--zcrit", type=float, default=1.96, help="critical Z value, default 1.96")
    analyze.add_argument("--out", default=".", help="output directory, default current")
    analyze.add_argument("--plots", action="store_true", help="also write density.svg and sorted.svg")
    analyze.add_argument(
        "--order", choices=("list", "lexicographic"), default="list",
        help="document order: as given, or re-sorted by file name",
    )
    analyze.set_defaults(func=_cmd_analyze)

    tok = sub.add_parser("tokenize", help="print the tokens of one file, one per line")
    tok.add_argument("file")
    tok.set_defaults(func=_cmd_tokenize)

    ver = sub.add_parser("version", help="print the tool version")
    ver.set_defaults(func=_cmd_version)
    return parser


def _cmd_analyze(args: argparse.Namespace) -> int:
    config = RunConfig(
        inputs=tuple(args.inputs),
        fraction=args.fraction,
        averaging=args.averaging,
        xbar_mode=args.xbar,
        z_critical=args.zcrit,
        output_dir=args.out,
        plots=args.plots,
        order=args.order,
    )
    report = run_pipeline(config)
    _print_summary(report, Path(args.out))
    return 0


def _print_summary(report: AnalysisReport, out_dir: Path) -> None:
    m = report.moments
    cov = report.coverage
    zt = report.z_test
    print(f"documents: {report.doc_count}  unique words: {report.unique_words}  tokens: {report.token_total}")
    print(f"expectation: {m.expectation:.6g}  std dev: {m.std_dev:.6g}  asymmetry: {m.asymmetry:.6g}")
    print(
        f"candidates: {report.stopwords.count} "
        f"(fraction {report.stopwords.fraction:.6g}, threshold {report.stopwords.threshold:.6g})"
    )
    print(
        f"outside (E-sigma, E+sigma): {format_percent(cov.outside_fraction)} "
        f"(left {cov.left_count}, inside {cov.inside_count}, right {cov.right_count})"
    )
    print(
        f"z-test: Z = {zt.z:.6g} (critical {zt.critical:.6g}, x-bar {zt.sample_mean:.6g} "
        f"is {zt.xbar_side.value}) -> {zt.decision.value}"
    )
    print(f"location verdict: {report.verdict.location.value}")
    names = ["stopwords.txt", "report.json", "words.csv"]
    if report.config.plots:
        names += ["density.svg", "sorted.svg"]
    print("wrote: " + ", ".join(str(out_dir / n) for n in names))


def _cmd_tokenize(args: argparse.Namespace) -> int:
    path = Path(args.file)
    try:
        text = path.read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError(path.stem, str(exc)) from exc
    for token in tokenize(text):
        print(token)
    return 0


def _cmd_version(args: argparse.Namespace) -> int:
    print(f"stoplex {__version__}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EmptyCorpus, DecodeError, FileNotFoundError, IsADirectoryError) as exc:
        _fail(exc)
        return 2
    except (AllZeroWeights, DegenerateDistribution) as exc:
        _fail(exc)
        return 3
    except (OSError, ValueError) as exc:  # unreadable input or bad option values
        _fail(exc)
        return 2
    except StoplexError as exc:
        _fail(exc)
        return 1


def _fail(exc: Exception) -> None:
    stage = getattr(exc, "stage", None)
    prefix = f"stoplex: [{stage}] " if stage else "stoplex: "
    print(f"{prefix}{exc}", file=sys.stderr)


if __name__ == "__main__":
    raise SystemExit(main())
