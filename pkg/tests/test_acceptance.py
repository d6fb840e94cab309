"""Exit criteria for the package, one test per criterion.

A summary line per criterion is printed at the end of the pytest run.
"""

import io
import math
import time

import numpy as np
import pytest

from conftest import rel_err
from qdeform import (
    DeformParams,
    EntropyParams,
    LogValue,
    ProbabilityDistribution,
    base_change,
    denom_truncated,
    entropy_q,
    entropy_truncated,
    qexp,
    qexp_product_exponent,
    qexp_ratio_exponent,
    qexp_sum,
    qlog,
    qlog_negative_power,
    qlog_product,
    qlog_ratio,
    remainder_bound,
    truncation_gap,
)
from qdeform.cli import run

criterion = pytest.mark.criterion

Q_GRID = [-2.3, -1.0, 0.0, 0.5, 1.0, 2.0, 2.3, 5.0]
A_GRID = [0.5, 1.0001, 2.0, math.e, 4.0, 10.0]
BASES = [0.5, 2.0, math.e, 4.0, 10.0]
N = 1000


@criterion(1, "fixed points qlog(1)=0, qexp(0)=1 exact; qlog(a)=1, qexp(1)=a within 1e-13")
def test_fixed_points():
    for q in Q_GRID:
        for a in A_GRID:
            assert qlog(1.0, q, a).value == 0.0
            assert qexp(0.0, q, a).value == 1.0
            assert abs(qlog(a, q, a).value - 1.0) <= 1e-13
            assert abs(qexp(1.0, q, a).value - a) <= 1e-13 * a


@criterion(2, "qexp(qlog(x)) = x to 1e-10 relative on 1000 seeded samples")
def test_inverse_identity():
    rng = np.random.default_rng(20261016)
    done = 0
    while done < N:
        x = float(10 ** rng.uniform(-1, 1))
        q = float(rng.uniform(-5, 5))
        a = float(10 ** rng.uniform(-1, 1))
        if abs(math.log(a)) < 0.05:
            continue
        lg = qlog(x, q, a)
        if not lg.is_finite:
            continue
        assert rel_err(qexp(lg.value, q, a).value, x) <= 1e-10, (x, q, a)
        done += 1


def _samples(seed):
    rng = np.random.default_rng(seed)
    while True:
        x = float(rng.uniform(0, 10)) or 10.0
        y = float(rng.uniform(0, 10)) or 10.0
        yield x, y, float(rng.uniform(-3, 3)), float(rng.choice(BASES)), rng


@criterion(3, "identity suite (base change, power, product, ratio, exp sum/product/ratio) to 1e-10; exact witnesses")
def test_identity_suite():
    counts = dict.fromkeys(["base", "power", "product", "ratio", "exp"], 0)
    for x, y, q, a, rng in _samples(3):
        if counts["product"] == N:
            break
        p = DeformParams(q, a)
        lx, ly = LogValue.of(x, q, a), LogValue.of(y, q, a)
        b = float(rng.choice([v for v in BASES if v != a]))
        assert rel_err(base_change(x, q, a, b).value, lx.value) <= 1e-10
        r = float(rng.uniform(0.1, 3))
        assert rel_err(qlog_negative_power(x, r, p), qlog(x ** -r, q, a).value) <= 1e-10
        assert rel_err(qlog_product(lx, ly), qlog(x * y, q, a).value) <= 1e-10
        assert rel_err(qlog_ratio(lx, ly, y), qlog(x / y, q, a).value) <= 1e-10
        for key in ("base", "power", "product", "ratio"):
            counts[key] += 1
    for x, y, q, a, _ in _samples(33):
        if counts["exp"] == N:
            break
        p = DeformParams(q, a)
        ex, ey, exy = qexp(x, q, a), qexp(y, q, a), qexp(x + y, q, a)
        if not all(v.is_finite and v.value > 0 for v in (ex, ey, exy)):
            continue
        assert rel_err(qexp_sum(ex.value, ey.value, q), exy.value) <= 1e-10
        assert rel_err(qexp(qexp_product_exponent(x, y, p), q, a).value, ex.value * ey.value) <= 1e-10
        assert rel_err(qexp(qexp_ratio_exponent(x, y, p), q, a).value, ex.value / ey.value) <= 1e-10
        counts["exp"] += 1
    assert set(counts.values()) == {N}

    p22 = DeformParams(2, 2)
    assert qlog_product(LogValue(1.0, p22), LogValue(1.5, p22)) == 1.75
    assert qlog(8, 2, 2).value == 1.75
    assert qexp_sum(4 / 3, 8 / 7, 2) == pytest.approx(1.6, rel=1e-15)
    assert qlog_ratio(LogValue(1.75, p22), LogValue(1.0, p22), 2.0) == 1.5
    assert qlog_negative_power(2, 1, p22) == -2.0
    assert base_change(8, 2, 4, 2).value == pytest.approx(7 / 6, rel=1e-15)
    assert qexp_product_exponent(0.5, 0.25, p22) == 0.6875


@criterion(4, "q=1 recovery: exact at q=1, within 1e-8 at q=1+-1e-10")
def test_q1_recovery():
    for x in (0.1, 2.0, 10.0):
        for a in (2.0, math.e, 10.0):
            classical = math.log(x) / math.log(a)
            assert qlog(x, 1.0, a).value - classical == 0.0
            for q in (1 + 1e-10, 1 - 1e-10):
                assert abs(qlog(x, q, a).value - classical) <= 1e-8


@criterion(5, "asymptotics x->inf and a->inf within 1e-6")
def test_asymptotics():
    assert abs(qlog(1e8, 2.3, 4).value - 1 / (1 - 4 ** -1.3)) <= 1e-6
    assert abs(qlog(2, 2, 1e8).value - (1 - 2 ** -1)) <= 1e-6


@criterion(6, "series: linear -1, quadratic -0.5 at q=2; truncation gap within Lagrange bound")
def test_series():
    assert denom_truncated(2, 1) == -1.0
    assert denom_truncated(2, 2) == -0.5
    for i in range(51):
        q = round(-2 + 0.1 * i, 10)
        for k in range(1, 13):
            assert truncation_gap(q, k) <= remainder_bound(q, k), (q, k)


@criterion(7, "entropy values: natural base, Daroczy, Tsallis, BG, certainty")
def test_entropy_values():
    coin = ProbabilityDistribution.uniform(2)
    assert abs(entropy_q(coin, EntropyParams(2, math.e)).value - 0.7909883534346632) <= 1e-6
    assert entropy_q(coin, EntropyParams(2, 2)).value == 1.0
    assert entropy_truncated(coin, 2, 1.0, 1).value == 0.5
    assert abs(entropy_q(coin, EntropyParams(1, math.e)).value - math.log(2)) <= 1e-12
    certain = ProbabilityDistribution((1.0, 0.0, 0.0))
    for q in (0.1, 0.5, 1.0, 2.0, 2.7, 5.0):
        for a in (0.5, 2.0, math.e, 10.0):
            assert entropy_q(certain, EntropyParams(q, a)).value == 0.0


def _random_dist(rng, W):
    return ProbabilityDistribution.normalized(rng.dirichlet(np.ones(W)))


@criterion(8, "entropy properties: nonnegativity, expansibility, uniform maximality")
def test_entropy_properties():
    rng = np.random.default_rng(8)
    for _ in range(500):
        d = _random_dist(rng, int(rng.integers(1, 10)))
        q = float(rng.uniform(0.01, 5))
        a = float(rng.uniform(1.01, 20))
        ep = EntropyParams(q, a)
        s = entropy_q(d, ep).value
        assert s >= 0
        assert (s == 0) == (max(d.probs) == 1.0)
        padded = entropy_q(list(d.probs) + [0.0], ep).value
        assert abs(s - padded) <= 1e-15
    for q in (0.5, 1.0, 2.0, 3.0):
        for a in (2.0, math.e):
            for W in (2, 4, 8):
                ep = EntropyParams(q, a)
                top = entropy_q(ProbabilityDistribution.uniform(W), ep).value
                for _ in range(200):
                    assert entropy_q(_random_dist(rng, W), ep).value <= top + 1e-12


def _curve_csv(preset):
    out, err = io.StringIO(), io.StringIO()
    assert run(["curve", "--preset", preset], out, err) == 0
    rows = [line.split(",") for line in out.getvalue().splitlines()[1:]]
    curves = {}
    for fn, q, a, x, value, kind in rows:
        curves.setdefault(float(q), []).append((x, value, kind))
    return curves


@criterion(9, "figure reproduction: anchor rows, opposing concavity, runtime < 1 s")
def test_figures():
    start = time.perf_counter()
    fig1 = _curve_csv("fig1")
    fig3 = _curve_csv("fig3")
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    for q, rows in fig1.items():
        assert ("1", "0", "Finite") in rows, q
        assert ("4", "1", "Finite") in rows, q
    for q, rows in fig3.items():
        assert ("0", "1", "Finite") in rows, q
        assert ("1", "4", "Finite") in rows, q

    def second_differences(rows):
        pts = [(float(x), float(v)) for x, v, _ in rows if 1.5 <= float(x) <= 3.5]
        ys = np.array([v for _, v in pts])
        return ys[2:] - 2 * ys[1:-1] + ys[:-2]

    up, down = second_differences(fig1[-2.3]), second_differences(fig1[2.3])
    assert np.all(up > 0) and np.all(down < 0)


@criterion(10, "violation witnesses for the power law and the exponential sum at q=2, a=2")
def test_violation_witnesses():
    power = qlog(2.0 ** 2, 2, 2).value
    assert rel_err(power, 2 * qlog(2.0, 2, 2).value) > 1e-3
    total = qexp(0.5 + 0.25, 2, 2).value
    assert rel_err(total, qexp(0.5, 2, 2).value * qexp(0.25, 2, 2).value) > 1e-3
