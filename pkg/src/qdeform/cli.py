"""``qdeform`` command line.

Exit codes: 0 success, 1 an undefined scalar result (reason code on
stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import math
import sys
from typing import List, Optional

from .core import qexp, qlog
from .dist_io import (
    PRESETS,
    DistributionFormatError,
    Fn,
    TableSpec,
    emit_curve_csv,
    emit_curve_svg,
    emit_table_csv,
    parse_distribution,
    render_value,
)
from .entropy import EntropyParams, entropy_q, entropy_truncated
from .extended import BranchPolicy, DeformParams, ExtendedReal, Kind, format_real
from .series import INFINITE, MAX_ORDER, denom_truncated, remainder_bound, truncation_gap


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def real(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def base(text: str) -> float:
    """A decimal base or the literal ``e``."""
    return math.e if text == "e" else real(text)


def order(text: str):
    if text == "inf":
        return INFINITE
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf': {text!r}") from None
    if not 1 <= k <= MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order must lie in [1, {MAX_ORDER}]")
    return k


def order_range(text: str):
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        k1, k2 = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <int>..<int>: {text!r}") from None
    if not 1 <= k1 <= k2 <= MAX_ORDER:
        raise argparse.ArgumentTypeError(f"need 1 <= k1 <= k2 <= {MAX_ORDER}: {text!r}")
    return k1, k2


def q_grid(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected qmin:qmax:steps: {text!r}")
    qmin, qmax = real(parts[0]), real(parts[1])
    try:
        steps = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"steps must be an integer: {parts[2]!r}") from None
    if steps < 1 or qmin > qmax or (steps == 1 and qmin != qmax):
        raise argparse.ArgumentTypeError(f"invalid grid {text!r}")
    if steps == 1:
        return [qmin]
    return [qmin + (qmax - qmin) * i / (steps - 1) for i in range(steps - 1)] + [qmax]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qdeform", description="Base-explicit q-logarithm, q-exponential and entropy.",
                allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate one value", allow_abbrev=False)
    ev.add_argument("--fn", choices=["log", "exp"], required=True)
    ev.add_argument("--x", type=real, required=True)
    ev.add_argument("--q", type=real, required=True)
    ev.add_argument("--base", type=base, required=True)
    ev.add_argument("--policy", choices=["strict", "cutoff"], default="strict")

    tb = sub.add_parser("table", help="CSV table over a uniform x grid", allow_abbrev=False)
    tb.add_argument("--fn", choices=["log", "exp"], required=True)
    tb.add_argument("--x-min", type=real, required=True)
    tb.add_argument("--x-max", type=real, required=True)
    tb.add_argument("--steps", type=int, required=True)
    tb.add_argument("--q", type=real, required=True)
    tb.add_argument("--base", type=base, required=True)
    tb.add_argument("--policy", choices=["strict", "cutoff"], default="strict")
    tb.add_argument("--out")

    cv = sub.add_parser("curve", help="figure curve data (CSV) and plot (SVG)", allow_abbrev=False)
    cv.add_argument("--preset", choices=sorted(PRESETS), required=True)
    cv.add_argument("--out")
    cv.add_argument("--svg")

    en = sub.add_parser("entropy", help="generalized entropy of a distribution file", allow_abbrev=False)
    en.add_argument("--dist", required=True)
    en.add_argument("--format", choices=["lines", "json"])
    en.add_argument("--renormalize", action="store_true")
    en.add_argument("--q", type=real)
    en.add_argument("--base", type=base)
    en.add_argument("--k", type=real, default=1.0)
    en.add_argument("--truncation", type=order)
    en.add_argument("--grid", type=q_grid)

    se = sub.add_parser("series", help="truncations of e**(1-q) - 1", allow_abbrev=False)
    se.add_argument("--q", type=real, required=True)
    se.add_argument("--orders", type=order_range, required=True)
    return p


def parse_args(argv: List[str]) -> argparse.Namespace:
    """Parse and cross-validate ``argv``; raises :class:`UsageError`."""
    ns = build_parser().parse_args(argv)
    if ns.command == "table":
        if ns.x_min > ns.x_max:
            raise UsageError("qdeform table: --x-min must not exceed --x-max")
        if ns.x_min < ns.x_max and ns.steps < 2:
            raise UsageError("qdeform table: --steps must be at least 2")
    if ns.command in ("eval", "table") and not ns.base > 0:
        raise UsageError(f"qdeform {ns.command}: --base must be positive")
    if ns.command == "entropy":
        if ns.q is None and ns.grid is None:
            raise UsageError("qdeform entropy: one of --q or --grid is required")
        if ns.q is not None and ns.grid is not None:
            raise UsageError("qdeform entropy: --q and --grid are mutually exclusive")
        if ns.truncation is not None and ns.base is not None and ns.base != math.e:
            raise UsageError("qdeform entropy: --truncation uses the natural base; drop --base or pass e")
        if ns.base is not None and not ns.base > 0:
            raise UsageError("qdeform entropy: --base must be positive")
        if not ns.k > 0:
            raise UsageError("qdeform entropy: --k must be positive")
    return ns


def _scalar(result: ExtendedReal, stdout, stderr) -> int:
    if result.kind is Kind.UNDEFINED:
        stderr.write(f"qdeform: undefined result: {result.reason.value}\n")
        return 1
    stdout.write(format_real(result.value) + "\n")
    return 0


def _open_or(path: Optional[str], default):
    return open(path, "w", encoding="utf-8", newline="") if path else default


def _entropy(ns, q: float, dist) -> ExtendedReal:
    if ns.truncation is not None:
        return entropy_truncated(dist, q, ns.k, ns.truncation)
    return entropy_q(dist, EntropyParams(q, ns.base if ns.base is not None else math.e, ns.k))


def _run(ns, stdout, stderr) -> int:
    if ns.command == "eval":
        if ns.fn == "log":
            return _scalar(qlog(ns.x, ns.q, ns.base), stdout, stderr)
        return _scalar(qexp(ns.x, ns.q, ns.base, BranchPolicy(ns.policy)), stdout, stderr)

    if ns.command == "table":
        spec = TableSpec(ns.x_min, ns.x_max, ns.steps, DeformParams(ns.q, ns.base), Fn(ns.fn),
                         BranchPolicy(ns.policy))
        out = _open_or(ns.out, stdout)
        try:
            emit_table_csv(spec, out)
        finally:
            if out is not stdout:
                out.close()
        return 0

    if ns.command == "curve":
        preset = PRESETS[ns.preset]
        if ns.svg:
            with open(ns.svg, "w", encoding="utf-8", newline="") as fh:
                emit_curve_svg(preset, fh)
        if ns.out or not ns.svg:
            out = _open_or(ns.out, stdout)
            try:
                emit_curve_csv(preset, out)
            finally:
                if out is not stdout:
                    out.close()
        return 0

    if ns.command == "entropy":
        fmt = ns.format or ("json" if ns.dist.lower().endswith(".json") else "lines")
        with open(ns.dist, "rb") as fh:
            dist = parse_distribution(fh, fmt, ns.renormalize)
        if ns.grid is None:
            return _scalar(_entropy(ns, ns.q, dist), stdout, stderr)
        buf = io.StringIO()
        buf.write("q,entropy\n")
        for q in ns.grid:
            buf.write(f"{format_real(q)},{render_value(_entropy(ns, q, dist))}\n")
        stdout.write(buf.getvalue())
        return 0

    if ns.command == "series":
        k1, k2 = ns.orders
        buf = io.StringIO()
        buf.write("order,denominator,gap,bound\n")
        for k in range(k1, k2 + 1):
            row = (k, denom_truncated(ns.q, k), truncation_gap(ns.q, k), remainder_bound(ns.q, k))
            buf.write(f"{k},{format_real(row[1])},{format_real(row[2])},{format_real(row[3])}\n")
        stdout.write(buf.getvalue())
        return 0

    raise AssertionError(ns.command)


def run(argv: List[str], stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        ns = parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return 2
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    try:
        return _run(ns, stdout, stderr)
    except DistributionFormatError as exc:
        stderr.write(f"qdeform: bad distribution: {exc}\n")
        return 2
    except OSError as exc:
        stderr.write(f"qdeform: {exc}\n")
        return 2


def main() -> None:
    try:
        code = run(sys.argv[1:])
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    main()
