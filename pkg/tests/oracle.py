"""Independent 40-digit evaluations straight from the defining formulas.

Nothing here shares code with the package: no expm1/log1p tricks, no
kernel, just mpmath arithmetic on the closed forms.
"""

import mpmath as mp

mp.mp.dps = 40


def qlog(x, q, a):
    x, q, a = mp.mpf(x), mp.mpf(q), mp.mpf(a)
    if q == 1:
        return mp.log(x) / mp.log(a)
    return (x ** (1 - q) - 1) / (a ** (1 - q) - 1)


def qlog_negative(x, q, a):
    # real branch: (-1)**(1-q) for integer q
    x, a = mp.mpf(x), mp.mpf(a)
    q = int(q)
    return ((-1) ** (1 - q) * x ** (1 - q) - 1) / (a ** (1 - q) - 1)


def qexp(x, q, a):
    x, q, a = mp.mpf(x), mp.mpf(q), mp.mpf(a)
    if q == 1:
        return a ** x
    return (1 + (a ** (1 - q) - 1) * x) ** (1 / (1 - q))


def entropy(probs, q, a, k=1):
    q, a = mp.mpf(q), mp.mpf(a)
    s = mp.fsum(mp.mpf(p) ** q for p in probs if p > 0)
    return k * (1 - s) / (1 - a ** (1 - q))


def shannon(probs, k=1):
    return -k * mp.fsum(mp.mpf(p) * mp.log(p) for p in probs if p > 0)


def expm1(u):
    return mp.exp(mp.mpf(u)) - 1
