"""Minimal deterministic SVG scatter plots.

Built by string assembly instead of a plotting package so the output
carries no timestamps, random ids or library version strings: two runs on
the same data are byte-identical.
"""

from __future__ import annotations

from .corpus import Lexicon
from .moments import IndexDistribution, MomentSummary
from .selection import StopwordSet

_WIDTH = 800
_HEIGHT = 500
_LEFT, _RIGHT, _TOP, _BOTTOM = 72, 24, 28, 56

_POINT_COLOR = "#4878a8"
_CANDIDATE_COLOR = "#e07a28"
_REF_COLOR = "#777777"
_AXIS_COLOR = "#222222"


class _Frame:
    """Maps data coordinates onto the fixed pixel viewport."""

    def __init__(self, x_lo: float, x_hi: float, y_lo: float, y_hi: float):
        self.x_lo, self.x_hi = x_lo, max(x_hi, x_lo + 1e-9)
        self.y_lo, self.y_hi = y_lo, max(y_hi, y_lo + 1e-9)
        self.px_lo, self.px_hi = _LEFT, _WIDTH - _RIGHT
        self.py_lo, self.py_hi = _HEIGHT - _BOTTOM, _TOP

    def x(self, v: float) -> float:
        t = (v - self.x_lo) / (self.x_hi - self.x_lo)
        return self.px_lo + t * (self.px_hi - self.px_lo)

    def y(self, v: float) -> float:
        t = (v - self.y_lo) / (self.y_hi - self.y_lo)
        return self.py_lo + t * (self.py_hi - self.py_lo)

    def clamp_x(self, v: float) -> float:
        return min(max(v, self.x_lo), self.x_hi)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _header(title: str) -> str:
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_WIDTH}" height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">\n'
        f'<title>{title}</title>\n'
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="#ffffff"/>\n'
    )


def _axes(frame: _Frame, x_label: str, y_label: str) -> list[str]:
    x0, x1 = frame.px_lo, frame.px_hi
    y0, y1 = frame.py_lo, frame.py_hi
    mid_x = (x0 + x1) / 2
    mid_y = (y0 + y1) / 2
    parts = [
        f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="{_AXIS_COLOR}"/>',
        f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="{_AXIS_COLOR}"/>',
        f'<text class="axis-label" x="{_fmt(mid_x)}" y="{_HEIGHT - 14}" '
        f'text-anchor="middle" font-size="14">{x_label}</text>',
        f'<text class="axis-label" x="18" y="{_fmt(mid_y)}" text-anchor="middle" '
        f'font-size="14" transform="rotate(-90 18 {_fmt(mid_y)})">{y_label}</text>',
        # tick labels at the data extremes
        f'<text class="tick" x="{x0}" y="{y0 + 18}" text-anchor="middle" font-size="11">'
        f'{_tick(frame.x_lo)}</text>',
        f'<text class="tick" x="{x1}" y="{y0 + 18}" text-anchor="middle" font-size="11">'
        f'{_tick(frame.x_hi)}</text>',
        f'<text class="tick" x="{x0 - 6}" y="{y0 + 4}" text-anchor="end" font-size="11">'
        f'{_tick(frame.y_lo)}</text>',
        f'<text class="tick" x="{x0 - 6}" y="{y1 + 4}" text-anchor="end" font-size="11">'
        f'{_tick(frame.y_hi)}</text>',
    ]
    return parts


def _tick(v: float) -> str:
    return f"{v:.3g}"


def emit_density_plot(
    dist: IndexDistribution,
    candidates: StopwordSet,
    summary: MomentSummary,
) -> str:
    """Scatter of (index, probability) with candidates and E, E+-sigma marked.

    Candidate points are drawn on top in a second color; dashed reference
    lines sit at E - sigma, E and E + sigma (clamped into the index range).
    """
    n = dist.size
    y_max = max(dist.probabilities)
    frame = _Frame(0.5, n + 0.5, 0.0, y_max * 1.05 if y_max > 0 else 1.0)
    candidate_indices = {e.first_index for e in candidates.candidates}

    parts = [_header("probability of unique words by first-appearance index")]
    parts.extend(_axes(frame, "first-appearance index", "probability"))
    for i, p in dist.points:
        if i in candidate_indices:
            continue
        parts.append(
            f'<circle class="word" cx="{_fmt(frame.x(i))}" cy="{_fmt(frame.y(p))}" '
            f'r="2" fill="{_POINT_COLOR}"/>'
        )
    for entry in candidates.candidates:
        i = entry.first_index
        p = dist.probabilities[i - 1] if i <= n else 0.0
        parts.append(
            f'<circle class="stopword" cx="{_fmt(frame.x(i))}" cy="{_fmt(frame.y(p))}" '
            f'r="3" fill="{_CANDIDATE_COLOR}"/>'
        )
    e, s = summary.expectation, summary.std_dev
    for value, label in ((e - s, "E-σ"), (e, "E"), (e + s, "E+σ")):
        px = _fmt(frame.x(frame.clamp_x(value)))
        parts.append(
            f'<line class="ref" x1="{px}" y1="{frame.py_hi}" x2="{px}" y2="{frame.py_lo}" '
            f'stroke="{_REF_COLOR}" stroke-dasharray="4 3"/>'
        )
        parts.append(
            f'<text class="ref-label" x="{px}" y="{_TOP - 8}" text-anchor="middle" '
            f'font-size="11">{label}</text>'
        )
    parts.append("</svg>\n")
    return "\n".join(parts)


def emit_sorted_plot(lexicon: Lexicon, candidates: StopwordSet) -> str:
    """Probabilities in descending order with the selection cutoff marked.

    The cutoff line sits after rank N - k, separating the kept words from
    the k candidates at the low end of the curve.
    """
    probs = sorted((e.probability or 0.0 for e in lexicon.entries), reverse=True)
    n = len(probs)
    k = candidates.count
    y_max = probs[0] if probs and probs[0] > 0 else 1.0
    frame = _Frame(0.5, n + 0.5, 0.0, y_max * 1.05)

    parts = [_header("unique words sorted by probability")]
    parts.extend(_axes(frame, "rank (descending probability)", "probability"))
    for rank, p in enumerate(probs, start=1):
        color = _CANDIDATE_COLOR if rank > n - k else _POINT_COLOR
        cls = "stopword" if rank > n - k else "word"
        parts.append(
            f'<circle class="{cls}" cx="{_fmt(frame.x(rank))}" cy="{_fmt(frame.y(p))}" '
            f'r="2" fill="{color}"/>'
        )
    cutoff_x = _fmt(frame.x(frame.clamp_x(n - k + 0.5)))
    parts.append(
        f'<line class="cutoff" x1="{cutoff_x}" y1="{frame.py_hi}" x2="{cutoff_x}" '
        f'y2="{frame.py_lo}" stroke="{_REF_COLOR}" stroke-dasharray="4 3"/>'
    )
    parts.append(
        f'<text class="ref-label" x="{cutoff_x}" y="{_TOP - 8}" text-anchor="middle" '
        f'font-size="11">cutoff (rank {n - k})</text>'
    )
    parts.append("</svg>\n")
    return "\n".join(parts)
