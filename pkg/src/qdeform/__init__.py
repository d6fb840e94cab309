"""Base-explicit q-deformed logarithm and exponential, their identities,
truncated-series approximations, and generalized entropy."""

from .algebra import (
    LogValue,
    base_change,
    qexp_product_exponent,
    qexp_ratio_exponent,
    qexp_sum,
    qlog_negative_power,
    qlog_product,
    qlog_ratio,
)
from .core import (
    base_factor,
    dpow_kernel,
    limit_qlog_a_to_inf,
    limit_qlog_x_to_inf,
    qexp,
    qexp_base_zero,
    qlog,
    qlog_base_zero,
    qlog_negative,
    qlog_zero,
)
from .entropy import EntropyParams, ProbabilityDistribution, entropy_q, entropy_truncated, entropy_uniform
from .extended import BaseRegime, BranchPolicy, DeformParams, DomainError, ExtendedReal, Kind, Reason
from .series import INFINITE, denom_truncated, qlog_truncated, remainder_bound, truncation_gap

__version__ = "0.1.0"
