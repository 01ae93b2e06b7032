"""Pipeline orchestration: input files in, reports and plots out.

The run writes stopwords.txt, report.json and words.csv (plus two SVG
plots when enabled) into the output directory, all after computation has
finished. JSON numbers use Python's shortest round-trip float
representation, so reports diff byte-stably and reload losslessly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

from ._version import __version__
from .corpus import Lexicon, build_lexicon, collect_input_files, load_corpus_from_paths
from .errors import NonFinite, StoplexError
from .moments import MomentSummary, density, moment_summary
from .plots import emit_density_plot, emit_sorted_plot
from .position import (
    CoverageReport,
    LocationVerdict,
    ZTestResult,
    hypothesis_decision,
    interval_coverage,
    location_verdict,
)
from .selection import StopwordSet, _as_fraction, export_list, select_candidates
from .weighting import AveragingMode, apply_weights, probabilities

XBAR_MODES = ("midpoint", "candidates")
ORDER_MODES = ("list", "lexicographic")


@dataclass(frozen=True)
class RunConfig:
    """Everything one analysis run depends on."""

    inputs: tuple[str, ...]
    fraction: float | str = 0.05
    averaging: AveragingMode | str = AveragingMode.ALL_DOCS
    xbar_mode: str = "midpoint"
    z_critical: float = 1.96
    output_dir: str | Path = "."
    plots: bool = False
    order: str = "list"

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(str(p) for p in self.inputs))
        object.__setattr__(self, "averaging", AveragingMode(self.averaging))
        frac = _as_fraction(self.fraction)
        if not 0 < frac < 1:
            raise ValueError(f"fraction must lie in (0, 1), got {self.fraction!r}")
        if not self.z_critical > 0:
            raise ValueError(f"z_critical must be > 0, got {self.z_critical!r}")
        if self.xbar_mode not in XBAR_MODES:
            raise ValueError(f"xbar_mode must be one of {XBAR_MODES}, got {self.xbar_mode!r}")
        if self.order not in ORDER_MODES:
            raise ValueError(f"order must be one of {ORDER_MODES}, got {self.order!r}")

    @property
    def fraction_value(self) -> float:
        return float(_as_fraction(self.fraction))


@dataclass(frozen=True)
class AnalysisReport:
    """Aggregated results of one pipeline run."""

    doc_count: int
    unique_words: int
    token_total: int
    moments: MomentSummary
    stopwords: StopwordSet
    coverage: CoverageReport
    z_test: ZTestResult
    verdict: LocationVerdict
    config: RunConfig
    version: str = __version__

    def to_dict(self) -> dict:
        """Report as a JSON-ready dict with a fixed key layout."""
        m = self.moments
        data = {
            "corpus": {
                "documents": self.doc_count,
                "unique_words": self.unique_words,
                "tokens": self.token_total,
            },
            "moments": {
                "expectation": m.expectation,
                "dispersion": m.dispersion,
                "std_dev": m.std_dev,
                "raw_moment_1": m.raw_moment_1,
                "raw_moment_2": m.raw_moment_2,
                "raw_moment_3": m.raw_moment_3,
                "third_central_moment": m.third_central_moment,
                "asymmetry": m.asymmetry,
            },
            "stopwords": {
                "fraction": self.stopwords.fraction,
                "count": self.stopwords.count,
                "threshold": self.stopwords.threshold,
            },
            "coverage": {
                "left": self.coverage.left_count,
                "inside": self.coverage.inside_count,
                "right": self.coverage.right_count,
                "outside_fraction": self.coverage.outside_fraction,
            },
            "z_test": {
                "n": self.z_test.n_unique,
                "x_bar": self.z_test.sample_mean,
                "z": self.z_test.z,
                "critical": self.z_test.critical,
                "x_bar_side": self.z_test.xbar_side.value,
                "decision": self.z_test.decision.value,
            },
            "verdict": {
                "asymmetry": self.verdict.asymmetry,
                "location": self.verdict.location.value,
            },
            "config": {
                "inputs": list(self.config.inputs),
                "fraction": self.config.fraction_value,
                "averaging": self.config.averaging.value,
                "xbar_mode": self.config.xbar_mode,
                "z_critical": self.config.z_critical,
                "plots": self.config.plots,
                "order": self.config.order,
            },
            "version": self.version,
        }
        _require_finite(data)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"


def _require_finite(node, path="report") -> None:
    if isinstance(node, dict):
        for key, value in node.items():
            _require_finite(value, f"{path}.{key}")
    elif isinstance(node, list):
        for pos, value in enumerate(node):
            _require_finite(value, f"{path}[{pos}]")
    elif isinstance(node, float) and not math.isfinite(node):
        raise NonFinite(f"{path} is {node!r}")


@contextmanager
def _stage(name: str):
    """Tag any StoplexError escaping the block with the stage name."""
    try:
        yield
    except StoplexError as exc:
        exc.stage = name
        raise


def sample_mean_for(config: RunConfig, lexicon_size: int, stopwords: StopwordSet) -> float:
    """X-bar for the Z test: index-range midpoint, or the candidates' mean index."""
    if config.xbar_mode == "midpoint":
        return (lexicon_size + 1) / 2
    indices = [e.first_index for e in stopwords.candidates]
    return math.fsum(indices) / len(indices)


def words_csv(lexicon: Lexicon) -> str:
    """CSV word table in first_index order; floats use repr round-tripping."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["word", "first_index", "doc_frequency", "idf", "weight", "probability"])
    for e in lexicon.entries:
        writer.writerow([e.surface, e.first_index, e.doc_frequency, e.idf, e.weight, e.probability])
    return buffer.getvalue()


def run_pipeline(config: RunConfig) -> AnalysisReport:
    """Execute the full analysis and write the output files.

    Stages run in a fixed order; any stage error carries the stage name in
    its ``stage`` attribute. Files are written only after every stage has
    completed.
    """
    with _stage("load_corpus"):
        files = collect_input_files(config.inputs, config.order)
        corpus = load_corpus_from_paths(files)
    with _stage("build_lexicon"):
        lexicon = build_lexicon(corpus)
    with _stage("weights"):
        lexicon = apply_weights(lexicon, config.averaging)
    with _stage("probabilities"):
        lexicon = probabilities(lexicon)
    with _stage("density"):
        dist = density(lexicon)
    with _stage("moment_summary"):
        summary = moment_summary(dist)
    with _stage("select_candidates"):
        stopwords = select_candidates(lexicon, config.fraction)
    with _stage("interval_coverage"):
        coverage = interval_coverage(stopwords, summary)
    with _stage("z_test"):
        xbar = sample_mean_for(config, lexicon.size, stopwords)
        z_result = hypothesis_decision(lexicon.size, xbar, summary, config.z_critical)
    with _stage("verdict"):
        verdict = location_verdict(summary.asymmetry)

    report = AnalysisReport(
        doc_count=corpus.doc_count,
        unique_words=lexicon.size,
        token_total=corpus.token_total,
        moments=summary,
        stopwords=stopwords,
        coverage=coverage,
        z_test=z_result,
        verdict=verdict,
        config=config,
    )

    with _stage("write_outputs"):
        out_dir = Path(config.output_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "stopwords.txt").write_text(export_list(stopwords), encoding="utf-8")
        (out_dir / "report.json").write_text(report.to_json(), encoding="utf-8")
        (out_dir / "words.csv").write_text(words_csv(lexicon), encoding="utf-8")
        if config.plots:
            (out_dir / "density.svg").write_text(
                emit_density_plot(dist, stopwords, summary), encoding="utf-8"
            )
            (out_dir / "sorted.svg").write_text(
                emit_sorted_plot(lexicon, stopwords), encoding="utf-8"
            )
    return report


def format_percent(fraction: float) -> str:
    """Human-readable percentage with one decimal, e.g. 0.858255 -> '85.8%'."""
    return f"{100.0 * fraction:.1f}%"
