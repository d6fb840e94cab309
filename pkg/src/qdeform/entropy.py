"""Generalized entropy with an explicit logarithm base.

    S_q = k * sum_i p_i * log_a(1/p_i; q) = k * (1 - sum_i p_i**q) / (1 - a**(1-q))

``a = e`` is the natural-base entropy, ``a = 2`` Daroczy's, ``q = 1`` the
Boltzmann-Gibbs entropy in base ``a``, and the order-1 truncated
denominator gives the Tsallis entropy.

The sum is accumulated term by term as ``p * log_a(1/p; q)`` rather than
as ``1 - sum p**q``: the two agree for an exactly normalized vector, but the
first keeps full precision near ``q = 1`` and ignores the small
normalization slack that a validated distribution is allowed to carry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .core import dpow_kernel, qlog
from .extended import DeformParams, ExtendedReal, Reason
from .series import INFINITE, Order, check_order, denom_truncated

__all__ = [
    "NORMALIZATION_TOL",
    "ProbabilityDistribution",
    "EntropyParams",
    "entropy_q",
    "entropy_truncated",
    "entropy_uniform",
]

NORMALIZATION_TOL = 1e-9


@dataclass(frozen=True)
class ProbabilityDistribution:
    """Probabilities ``p_1..p_W``, each in [0, 1], summing to 1 within 1e-9."""

    probs: tuple

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise ValueError("a distribution needs at least one state")
        for i, p in enumerate(probs):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"probability {i} is outside [0, 1]: {p!r}")
        total = math.fsum(probs)
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")

    @classmethod
    def normalized(cls, weights: Sequence[float]) -> "ProbabilityDistribution":
        """Divide nonnegative weights by their sum."""
        weights = [float(w) for w in weights]
        if any(w < 0 or math.isnan(w) for w in weights):
            raise ValueError("weights must be nonnegative")
        total = math.fsum(weights)
        if not total > 0:
            raise ValueError("weights must have a positive sum")
        return cls(tuple(w / total for w in weights))

    @classmethod
    def uniform(cls, W: int) -> "ProbabilityDistribution":
        return cls((1.0 / W,) * W)

    @property
    def W(self) -> int:
        return len(self.probs)

    def __len__(self):
        return len(self.probs)

    def __iter__(self):
        return iter(self.probs)


@dataclass(frozen=True)
class EntropyParams:
    q: float
    a: float = math.e
    k: float = 1.0

    def __post_init__(self):
        DeformParams(self.q, self.a)
        if not self.k > 0:
            raise ValueError(f"scale k must be positive, got {self.k!r}")


DistLike = Union[ProbabilityDistribution, Sequence[float]]


def _coerce(dist: DistLike):
    if isinstance(dist, ProbabilityDistribution):
        return dist
    if len(dist) == 0:
        return None
    return ProbabilityDistribution(tuple(dist))


def _weighted_numerators(dist: ProbabilityDistribution, t: float) -> float:
    # sum_i p_i * ((1/p_i)**t - 1) / t; zero states add nothing when q > 0
    terms = [p * dpow_kernel(1.0 / p, t) for p in dist.probs if p > 0]
    return math.fsum(terms)


def _precheck(dist: DistLike, q: float):
    d = _coerce(dist)
    if d is None:
        return None, ExtendedReal.undefined(Reason.EMPTY_DISTRIBUTION)
    if q <= 0 and any(p == 0 for p in d.probs):
        return d, ExtendedReal.undefined(Reason.ZERO_PROBABILITY_NEGATIVE_Q)
    return d, None


def entropy_q(dist: DistLike, params: EntropyParams) -> ExtendedReal:
    """``S_q = k * (1 - sum p**q) / (1 - a**(1-q))``.

    Parameters
    ----------
    dist : ProbabilityDistribution or sequence of float
        A plain sequence is validated; an empty one yields
        ``Undefined(EmptyDistribution)``.
    params : EntropyParams

    Returns
    -------
    ExtendedReal
        ``Undefined(ZeroProbabilityNegativeQ)`` if some ``p_i = 0`` and
        ``q <= 0``; ``Undefined(BaseOne)`` for ``a = 1``.
    """
    d, bad = _precheck(dist, params.q)
    if bad is not None:
        return bad
    if params.a == 1:
        return ExtendedReal.undefined(Reason.BASE_ONE)
    if params.a == 0:
        raise ValueError("entropy needs a base a > 0")
    t = 1.0 - params.q
    num = _weighted_numerators(d, t)
    return ExtendedReal.from_float(params.k * num / dpow_kernel(params.a, t))


def entropy_truncated(dist: DistLike, q: float, k_scale: float = 1.0, order: Order = 1) -> ExtendedReal:
    """Natural-base entropy with the denominator truncated at ``order``.

    Order 1 is the Tsallis entropy ``k * (1 - sum p**q) / (q - 1)``;
    :data:`~qdeform.series.INFINITE` reproduces :func:`entropy_q` with ``a = e``.
    """
    order = check_order(order)
    if not k_scale > 0:
        raise ValueError(f"scale k must be positive, got {k_scale!r}")
    if order == INFINITE:
        return entropy_q(dist, EntropyParams(q, math.e, k_scale))
    d, bad = _precheck(dist, q)
    if bad is not None:
        return bad
    t = 1.0 - q
    if t == 0.0:
        return ExtendedReal.from_float(k_scale * _weighted_numerators(d, 0.0))
    den = denom_truncated(q, order)
    if den == 0:
        return ExtendedReal.undefined(Reason.BASE_ONE)
    # numerators are scaled by 1/t inside the kernel; undo that here
    return ExtendedReal.from_float(k_scale * t * _weighted_numerators(d, t) / den)


def entropy_uniform(W: int, params: EntropyParams) -> ExtendedReal:
    """Entropy of ``W`` equiprobable states, ``k * log_a(W; q)``."""
    if int(W) != W or W < 1:
        raise ValueError(f"W must be a positive integer, got {W!r}")
    if params.a == 1:
        return ExtendedReal.undefined(Reason.BASE_ONE)
    value = qlog(float(W), params.q, params.a)
    if not value.is_finite:
        return value
    return ExtendedReal.from_float(params.k * value.value)

