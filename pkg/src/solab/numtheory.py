"""Euler's totient, batch sieves and the distribution of m/phi(m)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import exp, log

import numpy as np

EULER_GAMMA = 0.57721566490153286061


def factorize(m: int) -> dict[int, int]:
    if m < 1:
        raise ValueError("m must be positive")
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def totient(m: int) -> int:
    if m < 1:
        raise ValueError("totient is defined for m >= 1")
    result = m
    for p in factorize(m):
        result -= result // p
    return result


@lru_cache(maxsize=4)
def totient_sieve(limit: int) -> np.ndarray:
    """``phi[m]`` for ``0 <= m <= limit`` (``phi[0] = 0``), read-only."""
    phi = np.arange(limit + 1, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    for p in np.flatnonzero(is_prime):
        phi[p::p] -= phi[p::p] // p
    phi.setflags(write=False)
    return phi


def _exact(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


def totient_ratio_count(n: int, delta1: float, delta2: float) -> int:
    """Number of m in [ceil(delta1*n), n] with phi(m) >= delta2*m."""
    d1, d2 = _exact(delta1), _exact(delta2)
    if not (0 < d1 < 1 and 0 < d2 < 1):
        raise ValueError("delta1 and delta2 must lie in (0, 1)")
    if n < 2:
        raise ValueError("need n >= 2")
    lo = -((-d1.numerator * n) // d1.denominator)
    phi = totient_sieve(n)[lo:]
    m = np.arange(lo, n + 1, dtype=np.int64)
    return int(np.count_nonzero(phi * d2.denominator >= m * d2.numerator))


def b_empirical(t: float, limit: int) -> Fraction:
    """Fraction of n <= limit with n/phi(n) >= t."""
    t = _exact(t)
    if t < 1:
        raise ValueError("t must be at least 1 (B(t) = 1 trivially below)")
    if limit < 1000:
        raise ValueError("limit must be at least 1000")
    phi = totient_sieve(limit)[1:]
    n = np.arange(1, limit + 1, dtype=np.int64)
    # n * den >= num * phi, done in Python ints if it could overflow int64
    if t.numerator * limit < 2**62 and t.denominator * limit < 2**62:
        hits = int(np.count_nonzero(n * t.denominator >= phi * t.numerator))
    else:
        hits = sum(1 for a, b in zip(n.tolist(), phi.tolist()) if a * t.denominator >= b * t.numerator)
    return Fraction(hits, limit)


def erdos_prediction(epsilon: float) -> float:
    """Leading term e^-gamma / log(1/epsilon), for 0 < epsilon < 1."""
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    return exp(-EULER_GAMMA) / log(1 / epsilon)


def erdos_comparison(epsilon: float, limit: int) -> dict:
    """Observed density of n with n/phi(n) < 1 + epsilon against the leading term.

    The asymptotic e^-gamma / log(1/epsilon) describes ``1 - B(1 + epsilon)``,
    the thin set of n whose prime factors are all large, so that is the
    quantity compared.  Only a sanity check: convergence is logarithmic.
    """
    eps = _exact(epsilon)
    observed = 1 - b_empirical(1 + eps, limit)
    predicted = erdos_prediction(float(eps))
    return {
        "epsilon": float(eps),
        "limit": limit,
        "observed": float(observed),
        "predicted": predicted,
        "ratio": float(observed) / predicted,
    }
