"""Result and parameter types shared by every evaluator in the package.

Evaluators never raise for out-of-domain *values*; they return an
:class:`ExtendedReal` that is either a finite float, a signed infinity, or
an undefined marker carrying a :class:`Reason`. Malformed *calls* (wrong
parameter types, a negative base) still raise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional


class Kind(enum.Enum):
    FINITE = "Finite"
    POS_INFINITY = "PosInfinity"
    NEG_INFINITY = "NegInfinity"
    UNDEFINED = "Undefined"


class Reason(enum.Enum):
    BASE_ONE = "BaseOne"
    NON_POSITIVE_ARGUMENT = "NonPositiveArgument"
    NEGATIVE_BRACKET = "NegativeBracket"
    ZERO_PROBABILITY_NEGATIVE_Q = "ZeroProbabilityNegativeQ"
    EMPTY_DISTRIBUTION = "EmptyDistribution"


class DomainError(ValueError):
    """Raised when an undefined result is forced into a float."""

    def __init__(self, reason: Reason, message: str = ""):
        self.reason = reason
        super().__init__(f"{reason.value}: {message}" if message else reason.value)


@dataclass(frozen=True)
class ExtendedReal:
    kind: Kind
    value: float = math.nan
    reason: Optional[Reason] = None

    def __post_init__(self):
        if self.kind is Kind.FINITE:
            if not math.isfinite(self.value):
                raise ValueError(f"Finite result must be a finite float, got {self.value!r}")
            if self.reason is not None:
                raise ValueError("Finite result cannot carry a reason")
        elif self.kind is Kind.UNDEFINED:
            if self.reason is None:
                raise ValueError("Undefined result needs a reason")
        elif self.reason is not None:
            raise ValueError("Infinite result cannot carry a reason")

    @classmethod
    def finite(cls, value: float) -> "ExtendedReal":
        return cls(Kind.FINITE, float(value))

    @classmethod
    def pos_inf(cls) -> "ExtendedReal":
        return cls(Kind.POS_INFINITY, math.inf)

    @classmethod
    def neg_inf(cls) -> "ExtendedReal":
        return cls(Kind.NEG_INFINITY, -math.inf)

    @classmethod
    def undefined(cls, reason: Reason) -> "ExtendedReal":
        return cls(Kind.UNDEFINED, math.nan, reason)

    @classmethod
    def from_float(cls, value: float) -> "ExtendedReal":
        """Classify a float; NaN is not accepted since it has no reason code."""
        if math.isnan(value):
            raise ValueError("NaN cannot be classified without a reason")
        if value == math.inf:
            return cls.pos_inf()
        if value == -math.inf:
            return cls.neg_inf()
        return cls.finite(value)

    @property
    def is_finite(self) -> bool:
        return self.kind is Kind.FINITE

    @property
    def is_defined(self) -> bool:
        return self.kind is not Kind.UNDEFINED

    def unwrap(self) -> float:
        """Return the float (``±inf`` for infinities) or raise :class:`DomainError`."""
        if self.kind is Kind.UNDEFINED:
            raise DomainError(self.reason)
        return self.value

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        if self.kind is Kind.FINITE:
            return format_real(self.value)
        if self.kind is Kind.POS_INFINITY:
            return "+inf"
        if self.kind is Kind.NEG_INFINITY:
            return "-inf"
        return f"Undefined({self.reason.value})"


def format_real(value: float) -> str:
    """17 significant digits, enough to round-trip any double. ``-0`` prints as ``0``."""
    if value == math.inf:
        return "+inf"
    if value == -math.inf:
        return "-inf"
    return format(value + 0.0, ".17g")


class BranchPolicy(enum.Enum):
    """What the q-exponential returns where its bracket is negative."""

    STRICT = "strict"
    CUTOFF = "cutoff"


class BaseRegime(enum.Enum):
    ZERO = "zero"
    BELOW_ONE = "below_one"
    ONE = "one"
    ABOVE_ONE = "above_one"


@dataclass(frozen=True)
class DeformParams:
    """Deformation parameter ``q`` and base ``a``.

    ``a == 1`` and ``a == 0`` are representable so that evaluators can report
    them through their results; negative bases are rejected here.
    """

    q: float
    a: float

    def __post_init__(self):
        if math.isnan(self.q) or math.isnan(self.a) or math.isinf(self.q):
            raise ValueError(f"q and a must be real numbers, got q={self.q!r}, a={self.a!r}")
        if self.a < 0:
            raise ValueError(f"negative base a={self.a!r} is not supported")

    @property
    def regime(self) -> BaseRegime:
        if self.a == 0:
            return BaseRegime.ZERO
        if self.a == 1:
            return BaseRegime.ONE
        return BaseRegime.BELOW_ONE if self.a < 1 else BaseRegime.ABOVE_ONE

    @property
    def is_valid_base(self) -> bool:
        """True for the bases the general qlog/qexp accept: a > 0 and a != 1."""
        return self.regime in (BaseRegime.BELOW_ONE, BaseRegime.ABOVE_ONE)

    @property
    def exponent(self) -> float:
        """The shifted exponent ``1 - q`` that every formula is written in."""
        return 1.0 - self.q
