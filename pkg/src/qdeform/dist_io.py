"""Distribution files in, CSV tables and SVG curve plots out.

All emitters are byte-deterministic: the same spec always produces the same
bytes, with LF line endings and 17-significant-digit numbers.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass
from typing import IO, Iterable, List, Tuple, Union

from .core import qexp, qlog
from .entropy import ProbabilityDistribution
from .extended import BranchPolicy, DeformParams, ExtendedReal, Kind, format_real

__all__ = [
    "DistributionFormatError",
    "parse_distribution",
    "format_distribution_lines",
    "Fn",
    "TableSpec",
    "CurveSpec",
    "CurvePreset",
    "PRESETS",
    "evaluate",
    "render_value",
    "emit_table_csv",
    "emit_curve_csv",
    "emit_curve_svg",
]


class DistributionFormatError(ValueError):
    pass


Source = Union[bytes, str, IO[bytes], IO[str]]


def _read_text(source: Source) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            return source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DistributionFormatError(f"input is not UTF-8: {exc}") from None
    return source


def _to_float(token, where: str) -> float:
    if isinstance(token, bool) or not isinstance(token, (int, float, str)):
        raise DistributionFormatError(f"{where}: not a number: {token!r}")
    try:
        value = float(token)
    except ValueError:
        raise DistributionFormatError(f"{where}: malformed number {token!r}") from None
    if not math.isfinite(value):
        raise DistributionFormatError(f"{where}: non-finite value {token!r}")
    if value < 0:
        raise DistributionFormatError(f"{where}: negative probability {value!r}")
    return value


def parse_distribution(source: Source, format: str = "lines", renormalize: bool = False) -> ProbabilityDistribution:
    """Read a probability vector.

    ``lines``: one decimal per line; blank lines and ``#`` comments skipped.
    ``json``: a top-level array, or an object with a ``"probabilities"`` array.

    Without ``renormalize`` the values must already sum to 1 within 1e-9;
    with it they are divided by their (positive) sum.
    """
    text = _read_text(source)
    if format == "lines":
        values = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            values.append(_to_float(line, f"line {lineno}"))
    elif format == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DistributionFormatError(f"invalid JSON: {exc}") from None
        if isinstance(doc, dict):
            if "probabilities" not in doc:
                raise DistributionFormatError('JSON object has no "probabilities" key')
            doc = doc["probabilities"]
        if not isinstance(doc, list):
            raise DistributionFormatError("expected a JSON array of numbers")
        values = [_to_float(v, f"element {i}") for i, v in enumerate(doc)]
    else:
        raise ValueError(f"unknown distribution format {format!r}")

    if not values:
        raise DistributionFormatError("no probabilities in input")
    try:
        if renormalize:
            return ProbabilityDistribution.normalized(values)
        return ProbabilityDistribution(tuple(values))
    except ValueError as exc:
        raise DistributionFormatError(str(exc)) from None


def format_distribution_lines(dist: Iterable[float]) -> str:
    return "".join(repr(float(p)) + "\n" for p in dist)


class Fn(enum.Enum):
    LOG = "log"
    EXP = "exp"


def evaluate(fn: Fn, x: float, params: DeformParams, policy: BranchPolicy = BranchPolicy.STRICT) -> ExtendedReal:
    if Fn(fn) is Fn.LOG:
        return qlog(x, params.q, params.a)
    return qexp(x, params.q, params.a, policy)


def render_value(value: ExtendedReal) -> str:
    """CSV cell for a result: digits, ``+inf``/``-inf``, or empty when undefined."""
    if value.kind is Kind.UNDEFINED:
        return ""
    return format_real(value.value)


def _writer(buf):
    return csv.writer(buf, lineterminator="\n")


def _flush(text: str, sink) -> None:
    # text sinks get str, anything else (files opened "wb", BytesIO) gets UTF-8
    if isinstance(sink, io.TextIOBase):
        sink.write(text)
    else:
        sink.write(text.encode("utf-8"))


@dataclass(frozen=True)
class TableSpec:
    x_min: float
    x_max: float
    steps: int
    params: DeformParams
    function: Fn = Fn.LOG
    policy: BranchPolicy = BranchPolicy.STRICT

    def __post_init__(self):
        object.__setattr__(self, "function", Fn(self.function))
        object.__setattr__(self, "policy", BranchPolicy(self.policy))
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise ValueError("table bounds must be finite")
        if self.x_min > self.x_max:
            raise ValueError(f"x_min={self.x_min!r} exceeds x_max={self.x_max!r}")
        if self.x_min < self.x_max and self.steps < 2:
            raise ValueError(f"steps must be at least 2, got {self.steps!r}")

    def grid(self) -> List[float]:
        """Uniform grid including both ends; a degenerate range yields one point."""
        if self.x_min == self.x_max:
            return [self.x_min]
        n = self.steps - 1
        span = self.x_max - self.x_min
        return [self.x_min + span * i / n for i in range(n)] + [self.x_max]


def emit_table_csv(spec: TableSpec, sink) -> None:
    """Write ``x,value,kind`` rows for ``spec`` in ascending x."""
    buf = io.StringIO()
    w = _writer(buf)
    w.writerow(["x", "value", "kind"])
    for x in spec.grid():
        v = evaluate(spec.function, x, spec.params, spec.policy)
        w.writerow([format_real(x), render_value(v), v.kind.value])
    _flush(buf.getvalue(), sink)


@dataclass(frozen=True)
class CurveSpec:
    q: float
    a: float
    function: Fn

    @property
    def traditional(self) -> bool:
        return self.q == 1

    @property
    def label(self) -> str:
        name = "ln" if self.function is Fn.LOG else "exp"
        tag = " (traditional)" if self.traditional else ""
        return f"{name}  q = {format_real(self.q)}{tag}"


@dataclass(frozen=True)
class CurvePreset:
    """A set of curves sampled at ``samples`` points on ``(x_min, x_max]``."""

    id: str
    title: str
    curves: Tuple[CurveSpec, ...]
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    samples: int = 400

    def xs(self) -> List[float]:
        span = self.x_max - self.x_min
        return [self.x_min + span * i / self.samples for i in range(1, self.samples + 1)]

    def sample(self, curve: CurveSpec) -> List[Tuple[float, ExtendedReal]]:
        params = DeformParams(curve.q, curve.a)
        return [(x, evaluate(curve.function, x, params)) for x in self.xs()]


def _preset(id, title, fn, a, x_min, x_max, y_min, y_max):
    curves = tuple(CurveSpec(q, a, fn) for q in (2.3, -2.3, 1.0))
    return CurvePreset(id, title, curves, x_min, x_max, y_min, y_max)


PRESETS = {
    "fig1": _preset("fig1", "Generalized logarithm, a = 4", Fn.LOG, 4.0, 0.0, 8.0, -3.0, 3.0),
    "fig2": _preset("fig2", "Generalized logarithm, a = 1.0001", Fn.LOG, 1.0001, 0.0, 8.0, -2.5e4, 2.5e4),
    "fig3": _preset("fig3", "Generalized exponential, a = 4", Fn.EXP, 4.0, -2.0, 3.0, -1.0, 8.0),
}


def emit_curve_csv(preset: CurvePreset, sink) -> None:
    """Write ``fn,q,a,x,value,kind`` rows, curve by curve, each in ascending x."""
    buf = io.StringIO()
    w = _writer(buf)
    w.writerow(["fn", "q", "a", "x", "value", "kind"])
    for curve in preset.curves:
        for x, v in preset.sample(curve):
            w.writerow([curve.function.value, format_real(curve.q), format_real(curve.a),
                        format_real(x), render_value(v), v.kind.value])
    _flush(buf.getvalue(), sink)


# SVG layout, in user units
_W, _H = 640, 480
_LEFT, _RIGHT, _TOP, _BOTTOM = 70, 20, 40, 50
_COLORS = ("#d62728", "#1f77b4", "#000000")


def _segments(points, y_min, y_max) -> List[List[Tuple[float, float]]]:
    """Split at undefined, infinite or off-window samples; drop lone points."""
    runs, run = [], []
    for x, v in points:
        if v.is_finite and y_min <= v.value <= y_max:
            run.append((x, v.value))
        else:
            if len(run) > 1:
                runs.append(run)
            run = []
    if len(run) > 1:
        runs.append(run)
    return runs


def _fmt(v: float) -> str:
    return format(v + 0.0, ".2f")


def emit_curve_svg(preset: CurvePreset, sink) -> None:
    """Standalone SVG 1.1 plot of a preset; the ``q = 1`` curve is dashed."""
    pw = _W - _LEFT - _RIGHT
    ph = _H - _TOP - _BOTTOM

    def sx(x):
        return _LEFT + (x - preset.x_min) / (preset.x_max - preset.x_min) * pw

    def sy(y):
        return _TOP + (preset.y_max - y) / (preset.y_max - preset.y_min) * ph

    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<title>{preset.title}</title>',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="#ffffff"/>',
        f'<text x="{_W // 2}" y="24" text-anchor="middle" font-family="sans-serif" font-size="15">{preset.title}</text>',
        f'<rect x="{_LEFT}" y="{_TOP}" width="{pw}" height="{ph}" fill="none" stroke="#888888"/>',
    ]
    # axes through the origin when visible
    if preset.y_min <= 0 <= preset.y_max:
        y0 = _fmt(sy(0.0))
        lines.append(f'<line class="axis" x1="{_LEFT}" y1="{y0}" x2="{_LEFT + pw}" y2="{y0}" stroke="#444444"/>')
    if preset.x_min <= 0 <= preset.x_max:
        x0 = _fmt(sx(0.0))
        lines.append(f'<line class="axis" x1="{x0}" y1="{_TOP}" x2="{x0}" y2="{_TOP + ph}" stroke="#444444"/>')
    for xv, anchor in ((preset.x_min, "start"), (preset.x_max, "end")):
        lines.append(f'<text x="{_fmt(sx(xv))}" y="{_TOP + ph + 18}" text-anchor="{anchor}" '
                     f'font-family="sans-serif" font-size="12">{format_real(xv)}</text>')
    for yv, dy in ((preset.y_min, 0), (preset.y_max, 10)):
        lines.append(f'<text x="{_LEFT - 6}" y="{_fmt(sy(yv) + dy)}" text-anchor="end" '
                     f'font-family="sans-serif" font-size="12">{format_real(yv)}</text>')
    lines.append(f'<text x="{_LEFT + pw // 2}" y="{_H - 12}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="13">x</text>')

    for i, curve in enumerate(preset.curves):
        color = _COLORS[i % len(_COLORS)]
        dash = ' stroke-dasharray="6,4"' if curve.traditional else ""
        for run in _segments(preset.sample(curve), preset.y_min, preset.y_max):
            pts = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in run)
            lines.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{pts}"/>')

    lx, ly = _LEFT + pw - 200, _TOP + 12
    for i, curve in enumerate(preset.curves):
        color = _COLORS[i % len(_COLORS)]
        dash = ' stroke-dasharray="6,4"' if curve.traditional else ""
        y = ly + 18 * i
        lines.append(f'<g class="legend-entry"><line x1="{lx}" y1="{y}" x2="{lx + 28}" y2="{y}" '
                     f'stroke="{color}" stroke-width="1.5"{dash}/>'
                     f'<text x="{lx + 34}" y="{y + 4}" font-family="sans-serif" font-size="12">'
                     f'{curve.label}</text></g>')
    lines.append("</svg>")

    _flush("\n".join(lines) + "\n", sink)
