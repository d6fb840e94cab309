"""Base-explicit q-logarithm and q-exponential.

    log_a(x; q) = (x**(1-q) - 1) / (a**(1-q) - 1)
    a_q**x      = (1 + (a**(1-q) - 1) * x) ** (1 / (1-q))

Both are evaluated through ``expm1``/``log1p`` compositions so that q = 1 is
the ordinary logarithm/exponential and nearby q lose no precision.
"""

from __future__ import annotations

import math

from .extended import BranchPolicy, DeformParams, ExtendedReal, Reason

__all__ = [
    "dpow_kernel",
    "qlog",
    "qlog_negative",
    "qlog_zero",
    "qlog_base_zero",
    "qexp",
    "qexp_base_zero",
    "limit_qlog_x_to_inf",
    "limit_qlog_a_to_inf",
    "base_factor",
]

# expm1/exp overflow just above this
_EXP_MAX = 709.78


def dpow_kernel(y: float, t: float) -> float:
    """``(y**t - 1) / t``, continuous through ``t = 0`` where it equals ``ln y``.

    Parameters
    ----------
    y : float
        Positive argument.
    t : float
        Exponent; any real.

    Returns
    -------
    float
        May be ``±inf`` when ``y**t`` overflows.
    """
    ly = math.log(y)
    u = t * ly
    if t == 0.0 or u == 0.0:
        # u underflowed for a nonzero t: the quotient is ln y to full precision
        return ly
    if u > _EXP_MAX:
        return math.copysign(math.inf, t)
    return math.expm1(u) / t


def base_factor(q: float, a: float) -> float:
    """``a**(1-q) - 1``, the coupling constant of every pseudo-additive law."""
    if a == 0:
        return -1.0 if q < 1 else math.nan
    u = (1.0 - q) * math.log(a)
    if u > _EXP_MAX:
        return math.inf
    return math.expm1(u)


def _check_base(q: float, a: float):
    DeformParams(q, a)
    if a == 1:
        return ExtendedReal.undefined(Reason.BASE_ONE)
    if a == 0:
        raise ValueError("a = 0 needs the dedicated zero-base functions")
    return None


def qlog(x: float, q: float, a: float) -> ExtendedReal:
    """Generalized logarithm of ``x`` in base ``a``.

    Exactly 0 at ``x = 1`` and exactly 1 at ``x = a``. For ``q = 1`` this is
    ``ln(x) / ln(a)``.

    Examples
    --------
    >>> qlog(8, 1, 2).value
    3.0
    >>> qlog(4, -2.3, 4).value
    1.0
    """
    bad = _check_base(q, a)
    if bad is not None:
        return bad
    if not x > 0:
        return ExtendedReal.undefined(Reason.NON_POSITIVE_ARGUMENT)
    t = 1.0 - q
    num = dpow_kernel(x, t)
    den = dpow_kernel(a, t)
    if math.isinf(num) and math.isinf(den):
        # both powers dominate their -1: ratio is (x/a)**t
        lr = t * (math.log(x) - math.log(a))
        if lr > _EXP_MAX:
            return ExtendedReal.pos_inf()
        return ExtendedReal.finite(math.exp(lr))
    return ExtendedReal.from_float(num / den)


def qlog_negative(x: float, q: float, a: float) -> ExtendedReal:
    """``log_a(-x; q)`` for ``x > 0`` and integer ``q != 1``.

    On the real branch ``(-1)**(1-q) = -(-1)**q`` this is
    ``(1 + (-1)**q * x**(1-q)) / (1 - a**(1-q))``.
    """
    if q != int(q) or q == 1:
        raise ValueError(f"the negative-argument logarithm needs an integer q != 1, got {q!r}")
    bad = _check_base(q, a)
    if bad is not None:
        return bad
    if not x > 0:
        return ExtendedReal.undefined(Reason.NON_POSITIVE_ARGUMENT)
    t = 1.0 - q
    u = t * math.log(x)
    sign = -1.0 if int(q) % 2 else 1.0
    if u > _EXP_MAX:
        num = sign * math.inf
    elif sign < 0:
        num = -math.expm1(u)
    else:
        num = 1.0 + math.exp(u)
    den = -base_factor(q, a)
    if math.isinf(num) and math.isinf(den):
        # |x**t| and a**t both dominate the constant 1
        lr = t * (math.log(x) - math.log(a))
        if lr > _EXP_MAX:
            return ExtendedReal.from_float(-sign * math.inf)
        return ExtendedReal.finite(-sign * math.exp(lr))
    return ExtendedReal.from_float(num / den)


def qlog_zero(q: float, a: float) -> ExtendedReal:
    """``log_a(0; q)``: finite for ``q < 1``, a signed infinity otherwise.

    For ``q >= 1`` the value is the limit ``x -> 0+``. There
    ``x**(1-q) - 1 -> +inf`` (q > 1) or ``ln x -> -inf`` (q = 1), so the sign
    is ``-`` for ``a > 1`` and ``+`` for ``0 < a < 1`` in both cases.
    """
    bad = _check_base(q, a)
    if bad is not None:
        return bad
    if q < 1:
        return ExtendedReal.from_float(-1.0 / base_factor(q, a))
    return ExtendedReal.neg_inf() if a > 1 else ExtendedReal.pos_inf()


def qlog_base_zero(x: float, q: float) -> ExtendedReal:
    """``log_0(x; q) = 1 - x**(1-q)`` for ``q < 1``.

    For ``q >= 1`` the zero-base logarithm is void; it is reported as a
    finite zero rather than as undefined.
    """
    if not x > 0:
        return ExtendedReal.undefined(Reason.NON_POSITIVE_ARGUMENT)
    if q >= 1:
        return ExtendedReal.finite(0.0)
    u = (1.0 - q) * math.log(x)
    if u > _EXP_MAX:
        return ExtendedReal.neg_inf()
    return ExtendedReal.finite(-math.expm1(u))


def _bracket_power(y: float, t: float, policy: BranchPolicy) -> ExtendedReal:
    # (1 + y) ** (1/t) with the boundary and negative-bracket conventions
    if y > -1.0:
        r = math.log1p(y) / t
        if r > _EXP_MAX:
            return ExtendedReal.pos_inf()
        return ExtendedReal.finite(math.exp(r))
    if y == -1.0:
        return ExtendedReal.finite(0.0) if t > 0 else ExtendedReal.pos_inf()
    if policy is BranchPolicy.CUTOFF:
        return ExtendedReal.finite(0.0)
    return ExtendedReal.undefined(Reason.NEGATIVE_BRACKET)


def qexp(x: float, q: float, a: float, policy: BranchPolicy = BranchPolicy.STRICT) -> ExtendedReal:
    """Generalized exponential ``a_q**x``, the inverse of :func:`qlog`.

    Real-valued where the bracket ``1 + (a**(1-q) - 1) * x`` is positive.
    At a zero bracket the result is 0 or ``+inf`` depending on the sign of
    ``1/(1-q)``; below zero ``policy`` decides between undefined (strict)
    and 0 (cutoff).

    Examples
    --------
    >>> qexp(0, 2.3, 4).value
    1.0
    >>> qexp(1, -2.3, 4).value
    4.0
    >>> qexp(10, 2, 4).reason
    <Reason.NEGATIVE_BRACKET: 'NegativeBracket'>
    """
    bad = _check_base(q, a)
    if bad is not None:
        return bad
    policy = BranchPolicy(policy)
    if x == 1:
        # a_q**1 = a for every q; returned exactly
        return ExtendedReal.finite(a)
    t = 1.0 - q
    la = math.log(a)
    if t == 0.0:
        r = x * la
        if r > _EXP_MAX:
            return ExtendedReal.pos_inf()
        return ExtendedReal.finite(math.exp(r))
    c = base_factor(q, a)
    if math.isinf(c):
        if x == 0:
            return ExtendedReal.finite(1.0)
        if x < 0:
            return _bracket_power(-math.inf, t, policy)
        # 1 + c*x ~ c*x, so the result is a * x**(1/t)
        r = la + math.log(x) / t
        return ExtendedReal.pos_inf() if r > _EXP_MAX else ExtendedReal.finite(math.exp(r))
    return _bracket_power(c * x, t, policy)


def qexp_base_zero(x: float, q: float) -> ExtendedReal:
    """``0_q**x = (1 - x)**(1/(1-q))`` for ``q < 1``; vanishes for ``q >= 1``."""
    if q >= 1:
        return ExtendedReal.finite(0.0)
    if x < 1:
        r = math.log1p(-x) / (1.0 - q)
        return ExtendedReal.pos_inf() if r > _EXP_MAX else ExtendedReal.finite(math.exp(r))
    if x == 1:
        return ExtendedReal.finite(0.0)
    return ExtendedReal.undefined(Reason.NEGATIVE_BRACKET)


def limit_qlog_x_to_inf(q: float, a: float) -> ExtendedReal:
    """``lim_{x->inf} log_a(x; q)`` for a base ``a > 1``.

    Finite, ``1/(1 - a**(1-q))``, when ``q > 1``; ``+inf`` otherwise.
    """
    bad = _check_base(q, a)
    if bad is not None:
        return bad
    if a < 1:
        raise ValueError("the x -> inf limit is only provided for bases a > 1")
    if q > 1:
        return ExtendedReal.from_float(-1.0 / base_factor(q, a))
    return ExtendedReal.pos_inf()


def limit_qlog_a_to_inf(x: float, q: float) -> ExtendedReal:
    """``lim_{a->inf} log_a(x; q)``: ``1 - x**(1-q)`` for ``q > 1``, else 0."""
    if not x > 0:
        return ExtendedReal.undefined(Reason.NON_POSITIVE_ARGUMENT)
    if q <= 1:
        return ExtendedReal.finite(0.0)
    return ExtendedReal.finite(-math.expm1((1.0 - q) * math.log(x)))
