"""Truncations of the natural-base denominator ``e**(1-q) - 1``.

Expanding ``e**(1-q) - 1`` in powers of ``u = 1-q`` and keeping the first
``k`` terms gives a family of approximate logarithms::

    ln_k(x; q) = (x**(1-q) - 1) / sum_{n=1..k} u**n / n!

``k = 1`` is the Tsallis logarithm, ``k = 2`` has denominator
``(1-q)(3-q)/2``, and the untruncated member is ``qlog(x; q, e)``.
"""

from __future__ import annotations

import math
from typing import Union

from .core import qlog
from .extended import ExtendedReal, Reason

__all__ = [
    "INFINITE",
    "MAX_ORDER",
    "check_order",
    "denom_truncated",
    "truncation_gap",
    "remainder_bound",
    "qlog_truncated",
]

INFINITE = math.inf
MAX_ORDER = 30

Order = Union[int, float]


def check_order(order: Order) -> Order:
    """Validate a truncation order: an integer in ``[1, MAX_ORDER]`` or :data:`INFINITE`."""
    if order == INFINITE:
        return INFINITE
    if isinstance(order, bool) or int(order) != order:
        raise ValueError(f"truncation order must be an integer or INFINITE, got {order!r}")
    order = int(order)
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"truncation order must lie in [1, {MAX_ORDER}], got {order}")
    return order


def denom_truncated(q: float, order: Order) -> float:
    """Partial sum ``sum_{n=1..k} (1-q)**n / n!``; ``expm1(1-q)`` for :data:`INFINITE`.

    >>> denom_truncated(2, 1), denom_truncated(2, 2)
    (-1.0, -0.5)
    """
    order = check_order(order)
    u = 1.0 - q
    if order == INFINITE:
        return math.expm1(u)
    term = 1.0
    total = 0.0
    for n in range(1, order + 1):
        term *= u / n
        total += term
    return total


def truncation_gap(q: float, k: int) -> float:
    """``|denom_truncated(q, k) - (e**(1-q) - 1)|`` summed from the tail.

    Subtracting the two floats directly leaves only rounding noise once the
    gap drops below an ulp of the denominator; the tail
    ``sum_{n>k} u**n / n!`` has no such cancellation.
    """
    k = check_order(k)
    if k == INFINITE:
        return 0.0
    u = 1.0 - q
    if u == 0:
        return 0.0
    term = 1.0
    for n in range(1, k + 2):
        term *= u / n
    tail = 0.0
    n = k + 1
    while True:
        tail += term
        n += 1
        term *= u / n
        if term == 0.0 or abs(term) <= 1e-17 * abs(tail):
            break
    return abs(tail)


def remainder_bound(q: float, k: int) -> float:
    """Lagrange bound ``|1-q|**(k+1) / (k+1)! * e**|1-q|`` on :func:`truncation_gap`."""
    k = check_order(k)
    if k == INFINITE:
        return 0.0
    u = abs(1.0 - q)
    return math.exp((k + 1) * math.log(u) - math.lgamma(k + 2) + u) if u else 0.0


def qlog_truncated(x: float, q: float, order: Order) -> ExtendedReal:
    """Approximate natural-base logarithm with a truncated denominator.

    ``q = 1`` returns ``ln x`` for every order, the common limit of the
    family. A finite order whose partial sum vanishes (e.g. ``k = 2`` at
    ``q = 3``) has no value and is reported like a unit base.
    """
    order = check_order(order)
    if order == INFINITE:
        return qlog(x, q, math.e)
    if not x > 0:
        return ExtendedReal.undefined(Reason.NON_POSITIVE_ARGUMENT)
    if q == 1:
        return ExtendedReal.finite(math.log(x))
    den = denom_truncated(q, order)
    if den == 0:
        return ExtendedReal.undefined(Reason.BASE_ONE)
    u = (1.0 - q) * math.log(x)
    if u > 709.78:
        return ExtendedReal.from_float(math.copysign(math.inf, den))
    return ExtendedReal.from_float(math.expm1(u) / den)
