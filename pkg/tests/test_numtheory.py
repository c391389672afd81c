import random
import warnings
from fractions import Fraction
from math import gcd

import numpy as np
import pytest
from sympy import primerange
from sympy import totient as sympy_totient

from oracles import totient_naive
from solab.numtheory import (
    b_empirical,
    erdos_comparison,
    erdos_prediction,
    factorize,
    totient,
    totient_ratio_count,
    totient_sieve,
)


def test_totient_examples():
    assert totient(1) == 1
    assert totient(12) == 4
    for p in (2, 3, 97, 7919):
        assert totient(p) == p - 1
    with pytest.raises(ValueError):
        totient(0)


def test_totient_matches_naive():
    for m in range(1, 400):
        assert totient(m) == totient_naive(m)


def test_factorize_round_trip():
    for m in range(1, 3000):
        prod = 1
        for p, e in factorize(m).items():
            prod *= p**e
        assert prod == m


def test_totient_multiplicative():
    rng = random.Random(5)
    pairs = 0
    while pairs < 500:
        a, b = rng.randint(1, 1000), rng.randint(1, 1000)
        if gcd(a, b) != 1:
            continue
        pairs += 1
        assert totient(a * b) == totient(a) * totient(b)


def test_sieve_agrees_with_factorization():
    limit = 10**5
    phi = totient_sieve(limit)
    assert phi[0] == 0 and phi[1] == 1
    for m in range(1, limit + 1):
        assert phi[m] == totient(m)
    assert not phi.flags.writeable


def test_sieve_agrees_with_sympy_sample():
    phi = totient_sieve(10**6)
    rng = np.random.default_rng(0)
    for m in rng.integers(1, 10**6, size=300):
        assert phi[m] == int(sympy_totient(int(m)))


def test_ratio_count_vacuous_threshold():
    for n in (10, 101, 1000):
        lo = -(-n // 2)
        assert totient_ratio_count(n, 0.5, 0.01) == n - lo + 1


def test_ratio_count_includes_primes():
    n = 100
    primes = list(primerange(50, 101))
    count = totient_ratio_count(n, 0.5, 0.9)
    assert count >= len(primes)
    phi = totient_sieve(n)
    brute = sum(1 for m in range(50, 101) if phi[m] >= Fraction(9, 10) * m)
    assert count == brute


def test_ratio_count_exact_endpoints():
    # ceil(delta1 * n) is included; 0.3 * 10 is exactly 3
    phi = totient_sieve(10)
    brute = sum(1 for m in range(3, 11) if phi[m] * 2 >= m)
    assert totient_ratio_count(10, 0.3, 0.5) == brute


def test_ratio_count_errors():
    for d1, d2 in ((0, 0.5), (0.5, 1), (1.2, 0.3), (0.5, -0.1)):
        with pytest.raises(ValueError):
            totient_ratio_count(100, d1, d2)
    with pytest.raises(ValueError):
        totient_ratio_count(1, 0.5, 0.5)


def test_ratio_count_stable_across_scales():
    small = totient_ratio_count(10**5, 0.5, 0.3) / 10**5
    large = totient_ratio_count(10**6, 0.5, 0.3) / 10**6
    assert abs(small - large) <= 0.1 * large


def test_b_empirical_examples():
    assert b_empirical(1, 10**4) == 1
    assert b_empirical(100, 10**6) == 0
    # n/phi(n) >= 2 holds exactly for even n among small cases, plus some odd n
    phi = totient_sieve(1000)
    brute = sum(1 for n in range(1, 1001) if n >= 2 * phi[n])
    assert b_empirical(2, 1000) == Fraction(brute, 1000)
    with pytest.raises(ValueError):
        b_empirical(0.5, 10**4)
    with pytest.raises(ValueError):
        b_empirical(2, 10)


def test_b_empirical_monotone():
    grid = [1, 1.05, 1.1, 1.25, 1.5, 2, 2.5, 3, 4, 5, 6]
    values = [b_empirical(t, 10**5) for t in grid]
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_erdos_sanity_is_a_warning_only():
    with pytest.raises(ValueError):
        erdos_prediction(1.5)
    for eps in (0.1, 0.01):
        row = erdos_comparison(eps, 10**6)
        assert 0 < row["observed"] < 1
        if not 0.5 <= row["ratio"] <= 2:
            warnings.warn(f"asymptotic sanity check off by more than 2x at eps={eps}: {row}")
