"""Identities of the generalized logarithm and exponential.

Each identity is computed from *already evaluated* logarithm or exponential
values, never from raw arguments, so that comparing it with a direct
evaluation isolates the error of the identity itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import base_factor, qlog
from .extended import DeformParams, DomainError, ExtendedReal, Reason

__all__ = [
    "LogValue",
    "base_change",
    "qlog_product",
    "qlog_ratio",
    "qlog_negative_power",
    "qexp_sum",
    "qexp_product_exponent",
    "qexp_ratio_exponent",
]


@dataclass(frozen=True)
class LogValue:
    """A finite qlog result together with the ``(q, a)`` it was computed under."""

    value: float
    params: DeformParams

    @classmethod
    def of(cls, x: float, q: float, a: float) -> "LogValue":
        return cls(qlog(x, q, a).unwrap(), DeformParams(q, a))


def _coupling(params: DeformParams) -> float:
    if not params.is_valid_base:
        raise DomainError(Reason.BASE_ONE, f"base a={params.a!r}")
    return base_factor(params.q, params.a)


def _same_params(lx: LogValue, ly: LogValue) -> DeformParams:
    if lx.params != ly.params:
        raise ValueError(f"parameter mismatch: {lx.params} vs {ly.params}")
    return lx.params


def base_change(x: float, q: float, from_base: float, to_base: float) -> ExtendedReal:
    """``log_a(x; q)`` with ``a = from_base``, computed as ``log_b(x)/log_b(a)`` in ``b = to_base``."""
    if from_base == 1 or to_base == 1:
        return ExtendedReal.undefined(Reason.BASE_ONE)
    num = qlog(x, q, to_base)
    if not num.is_defined:
        return num
    den = qlog(from_base, q, to_base)
    return ExtendedReal.from_float(num.value / den.value)


def qlog_product(lx: LogValue, ly: LogValue) -> float:
    """``log(x*y) = L(x) + L(y) + (a**(1-q) - 1) * L(x) * L(y)``."""
    params = _same_params(lx, ly)
    c = _coupling(params)
    return lx.value + ly.value + c * lx.value * ly.value


def qlog_ratio(lx: LogValue, ly: LogValue, y: float) -> float:
    """``log(x/y)`` from ``L(x)``, ``L(y)`` and ``y``.

    ``L(x) - y**(q-1) * L(y) - (a**(1-q) - 1) * y**(q-1) * L(x) * L(y)``
    """
    params = _same_params(lx, ly)
    if not y > 0:
        raise DomainError(Reason.NON_POSITIVE_ARGUMENT, f"y={y!r}")
    c = _coupling(params)
    w = math.exp((params.q - 1.0) * math.log(y))
    return lx.value - w * ly.value * (1.0 + c * lx.value)


def qlog_negative_power(x: float, r: float, params: DeformParams) -> float:
    """``log(x**-r) = -x**(-r*(1-q)) * log(x**r)``."""
    if not x > 0:
        raise DomainError(Reason.NON_POSITIVE_ARGUMENT, f"x={x!r}")
    if not r > 0:
        raise ValueError(f"r must be positive, got {r!r}")
    t = params.exponent
    lr = r * math.log(x)
    positive = qlog(math.exp(lr), params.q, params.a).unwrap()
    return -math.exp(-t * lr) * positive


def qexp_sum(ex: float, ey: float, q: float) -> float:
    """``a_q**(x+y)`` from ``ex = a_q**x`` and ``ey = a_q**y``.

    ``[ex**(1-q) + ey**(1-q) - 1] ** (1/(1-q))``; the base drops out.
    """
    if not (ex > 0 and ey > 0):
        raise DomainError(Reason.NON_POSITIVE_ARGUMENT, "exponential values must be positive")
    t = 1.0 - q
    if t == 0.0:
        return ex * ey
    y = math.expm1(t * math.log(ex)) + math.expm1(t * math.log(ey))
    if not y > -1.0:
        raise DomainError(Reason.NEGATIVE_BRACKET)
    return math.exp(math.log1p(y) / t)


def qexp_product_exponent(x: float, y: float, params: DeformParams) -> float:
    """Exponent ``z`` with ``a_q**x * a_q**y = a_q**z``: ``x + y + (a**(1-q) - 1)*x*y``."""
    return x + y + _coupling(params) * x * y


def qexp_ratio_exponent(x: float, y: float, params: DeformParams) -> float:
    """Exponent ``z`` with ``a_q**x / a_q**y = a_q**z``: ``(x - y) / (1 + (a**(1-q) - 1)*y)``."""
    den = 1.0 + _coupling(params) * y
    if den == 0:
        raise DomainError(Reason.NEGATIVE_BRACKET, f"a_q**y is zero at y={y!r}")
    return (x - y) / den
