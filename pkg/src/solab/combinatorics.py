"""Exhaustive checks of the permutation counting lemmas.

Every count here comes from enumerating all of Sym(n) (or a coset of
Alt(n)); closed forms are computed separately and compared.  Subsets of
points are handled as bitmasks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, gcd
from typing import Iterable, Sequence

import numpy as np

from .group import _orbits
from .numtheory import totient
from .perm import Permutation, cycle_decomposition
from .stats import Estimate, chunk_rng, chunks, run_chunks, wilson_interval

EXHAUSTIVE_CEILING = 9


def _check_ceiling(n: int, ceiling: int = EXHAUSTIVE_CEILING) -> None:
    if n > ceiling:
        raise ValueError(f"exhaustive enumeration of Sym({n}) exceeds the ceiling {ceiling}")


# -- factorial identity ------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def factorial_identity_check(n: int, a: int) -> IdentityCheck:
    """Compare sum_{x=0}^{a} (n-x-1)!/(a-x)! with n!/(a!(n-a))."""
    if not 0 <= a < n:
        raise ValueError("need 0 <= a < n")
    lhs = sum(Fraction(factorial(n - x - 1), factorial(a - x)) for x in range(a + 1))
    rhs = Fraction(factorial(n), factorial(a) * (n - a))
    return IdentityCheck(lhs, rhs)


# -- invariant subsets ---------------------------------------------------------


@lru_cache(maxsize=None)
def cycle_structure_counts(n: int) -> Counter:
    """Count every permutation of ``range(n)`` by (cycle-support masks, parity).

    The masks are sorted so the key only records which point sets are
    cycles; the tally is still over all n! permutations.
    """
    _check_ceiling(n)
    counts: Counter = Counter()
    for images in permutations(range(n)):
        seen = 0
        masks = []
        for start in range(n):
            if seen >> start & 1:
                continue
            mask = 0
            x = start
            while not mask >> x & 1:
                mask |= 1 << x
                x = images[x]
            seen |= mask
            masks.append(mask)
        counts[(tuple(masks), (n - len(masks)) % 2)] += 1
    return counts


def _mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


@dataclass(frozen=True)
class IotaCount:
    total: int
    even: int
    odd: int
    omega_size: int
    a_size: int

    @property
    def formula(self) -> int:
        if self.omega_size == 0:
            return 0
        return factorial(self.omega_size - 1) * self.a_size


def iota_count(omega_size: int, a_size: int) -> IotaCount:
    """Permutations of Omega with a nonempty invariant subset inside A.

    A is the first ``a_size`` points.  Invariant subsets are unions of
    cycles, so the test is whether some cycle lies entirely inside A.
    """
    if not 0 <= a_size <= omega_size:
        raise ValueError("need 0 <= a_size <= omega_size")
    _check_ceiling(omega_size)
    a_mask = (1 << a_size) - 1
    even = odd = 0
    for (masks, par), count in cycle_structure_counts(omega_size).items():
        if any(m & ~a_mask == 0 for m in masks):
            if par:
                odd += count
            else:
                even += count
    return IotaCount(even + odd, even, odd, omega_size, a_size)


def _index_sets(omega, a, b) -> tuple[int, int, int]:
    omega = sorted(omega)
    index = {x: i for i, x in enumerate(omega)}
    a, b = set(a), set(b)
    if not b:
        raise ValueError("B must be nonempty")
    if not b <= a or not a <= set(omega):
        raise ValueError("need B <= A <= Omega")
    return len(omega), _mask(index[x] for x in a), _mask(index[x] for x in b)


def kappa_count(omega: Iterable, a: Iterable, b: Iterable) -> int:
    """Permutations fixing B setwise with no nonempty invariant subset of A minus B."""
    n, a_mask, b_mask = _index_sets(omega, a, b)
    _check_ceiling(n)
    rest = a_mask & ~b_mask
    total = 0
    for (masks, _), count in cycle_structure_counts(n).items():
        if any(m & b_mask and m & ~b_mask for m in masks):
            continue
        if rest and any(m & ~rest == 0 for m in masks):
            continue
        total += count
    return total


def kappa_closed_form(omega_size: int, a_size: int, b_size: int) -> Fraction:
    """|B|! |Omega-B|! (1 - (|A|-|B|)/(|Omega|-|B|)), reading 0/0 as 0."""
    rest = omega_size - b_size
    ratio = Fraction(a_size - b_size, rest) if rest else Fraction(0)
    return factorial(b_size) * factorial(rest) * (1 - ratio)


# -- Babai-Hayes projection ----------------------------------------------------


def project_to(perm: Permutation, r: Iterable[int]) -> Permutation:
    """First-return map of ``perm`` on ``r``; points outside ``r`` are fixed.

    Each ``i`` in ``r`` goes to ``i * perm^k`` for the least ``k >= 1``
    landing back in ``r``.
    """
    r = set(r)
    if not r:
        raise ValueError("r must be nonempty")
    images = list(range(perm.degree))
    p = perm.images
    for i in r:
        x = p[i]
        while x not in r:
            x = p[x]
        images[i] = x
    return Permutation(images, check=False)


def fact1_buckets(omega_size: int, r: Iterable[int]) -> Counter:
    """Sizes of the preimages of every projection onto ``r``."""
    _check_ceiling(omega_size, 8)
    r = sorted(set(r))
    rset = set(r)
    buckets: Counter = Counter()
    for p in permutations(range(omega_size)):
        key = []
        for i in r:
            x = p[i]
            while x not in rset:
                x = p[x]
            key.append(x)
        buckets[tuple(key)] += 1
    return buckets


def fact1_check(omega_size: int, r: Iterable[int]) -> bool:
    """Every permutation of r has exactly |Omega|!/|R|! preimages."""
    r = sorted(set(r))
    buckets = fact1_buckets(omega_size, r)
    expected = factorial(omega_size) // factorial(len(r))
    return len(buckets) == factorial(len(r)) and all(v == expected for v in buckets.values())


def fact2_check(g_gens: Sequence[Permutation], sigma: Permutation, r: Iterable[int]) -> bool:
    """Orbits of <G|_r, pr_r(sigma)> on r versus r-traces of orbits of <G, sigma>."""
    r = sorted(set(r))
    rset = set(r)
    n = sigma.degree
    restricted = []
    for g in g_gens:
        images = list(range(n))
        for i in r:
            if g.images[i] not in rset:
                raise ValueError("generators of G must preserve r")
            images[i] = g.images[i]
        restricted.append(tuple(images))
    lhs = [tuple(o) for o in _orbits(restricted + [project_to(sigma, r).images], n) if o[0] in rset]
    full = _orbits([g.images for g in g_gens] + [sigma.images], n)
    rhs = [tuple(x for x in o if x in rset) for o in full]
    rhs = [o for o in rhs if o]
    return sorted(lhs) == sorted(rhs)


# -- cycles through two given points ------------------------------------------


@lru_cache(maxsize=None)
def _first_cycle_table(n: int) -> Counter:
    """Count permutations by (length of the cycle through 0, position of 1 in it).

    Position is 1-based along the cycle starting at 0 (so 0 itself is
    position 1); it is 0 when 1 lies on another cycle.
    """
    _check_ceiling(n)
    table: Counter = Counter()
    for p in permutations(range(n)):
        length, pos, x = 1, 0, p[0]
        while x != 0:
            length += 1
            if x == 1:
                pos = length
            x = p[x]
        table[(length, pos)] += 1
    return table


@dataclass(frozen=True)
class FacileCount:
    n: int
    k: int
    exact: int
    closed_form: int
    printed_form: Fraction
    bound: Fraction

    @property
    def matches(self) -> bool:
        return self.exact == self.closed_form

    @property
    def bound_holds(self) -> bool:
        return self.exact >= self.bound


def facile_count(n: int, k: int) -> FacileCount:
    """Permutations whose k-cycle through point 1 meets point 2 at a coprime step.

    ``closed_form`` is C(n-2, k-2) (k-2)! phi(k) (n-k)! = (n-2)! phi(k);
    ``printed_form`` is the variant C(n, k-2) (k-2)! phi(k) (n-k)!, kept for
    comparison; ``bound`` is n! phi(k) / ((n+2) k).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if 2 * k < n or k > n:
        raise ValueError("need n/2 <= k <= n")
    table = _first_cycle_table(n)
    exact = sum(c for (length, pos), c in table.items() if length == k and pos and gcd(pos - 1, k) == 1)
    phi = totient(k) if k >= 2 else 0
    if k >= 2:
        closed = comb(n - 2, k - 2) * factorial(k - 2) * phi * factorial(n - k)
        printed = Fraction(comb(n, k - 2) * factorial(k - 2) * phi * factorial(n - k))
    else:
        closed, printed = 0, Fraction(0)
    bound = Fraction(factorial(n) * totient(k), (n + 2) * k)
    return FacileCount(n, k, exact, closed, printed, bound)


def _first_cycle(images: Sequence[int]) -> list[int]:
    cyc, x = [0], images[0]
    while x != 0:
        cyc.append(x)
        x = images[x]
    return cyc


def lambda_member(tau: Permutation, delta1: float, delta2: float) -> bool:
    """Does tau's cycle (x_1 = 1, ..., x_k) satisfy the length, totient and position tests?

    Points are 0-indexed, so "1" and "2" are points 0 and 1.
    """
    n = tau.degree
    if n < 2:
        raise ValueError("need degree >= 2")
    cyc = _first_cycle(tau.images)
    k = len(cyc)
    d1, d2 = Fraction(str(delta1)), Fraction(str(delta2))
    if k < d1 * n or totient(k) < d2 * k:
        return False
    return any(x == 1 and gcd(i, k) == 1 for i, x in enumerate(cyc))


def admissible_lengths(n: int, delta1: float, delta2: float) -> list[int]:
    """Cycle lengths k <= n with k >= delta1*n and phi(k) >= delta2*k."""
    d1, d2 = Fraction(str(delta1)), Fraction(str(delta2))
    return [k for k in range(1, n + 1) if k >= d1 * n and totient(k) >= d2 * k]


def lambda_fraction_exact(n: int, delta1: float, delta2: float) -> Fraction:
    """Proportion of Sym(n) in Lambda: the sum over admissible k of phi(k)/(n(n-1))."""
    return sum(
        (Fraction(totient(k), n * (n - 1)) for k in admissible_lengths(n, delta1, delta2) if k >= 2),
        Fraction(0),
    )


def _lambda_task(args):
    n, delta1, delta2, seed, chunk, count = args
    rng = chunk_rng(seed, chunk)
    perms = rng.permuted(np.tile(np.arange(n), (count, 1)), axis=1)
    hits = 0
    for row in perms:
        hits += lambda_member(Permutation(row.tolist(), check=False), delta1, delta2)
    return hits


def lambda_rate(n: int, delta1: float, delta2: float, samples: int, seed: int,
                confidence: float = 0.95, workers: int = 1) -> Estimate:
    """Monte Carlo proportion of uniform tau in Sym(n) lying in Lambda."""
    tasks = [(n, delta1, delta2, seed, c, k) for c, k in chunks(samples)]
    hits = sum(run_chunks(_lambda_task, tasks, workers))
    return wilson_interval(hits, samples, confidence)


# -- transitivity of <G, sigma> ------------------------------------------------


def _parity_of(images: Sequence[int]) -> int:
    n = len(images)
    seen = [False] * n
    cycles = 0
    for s in range(n):
        if not seen[s]:
            cycles += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = images[x]
    return (n - cycles) % 2


def _check_g(g_gens: Sequence[Permutation]) -> None:
    if not g_gens or all(g.is_identity() for g in g_gens):
        raise ValueError("G must be nontrivial")


def common_fixed_points(g_gens: Sequence[Permutation]) -> int:
    n = g_gens[0].degree
    return sum(all(g.images[i] == i for g in g_gens) for i in range(n))


def nontransitivity_bound(n: int, f: int, slack: Fraction = Fraction(3)) -> Fraction:
    """f/n + 2/(n-f) plus an explicit ``slack/(n-f)`` for the O((n-f)^-2) term."""
    return Fraction(f, n) + Fraction(2, n - f) + Fraction(slack) / (n - f)


def nontransitivity_exact(g_gens: Sequence[Permutation], rho: Permutation) -> Fraction:
    """Exact proportion of sigma in rho*Alt(n) with <G, sigma> intransitive."""
    _check_g(g_gens)
    n = rho.degree
    _check_ceiling(n)
    target = _parity_of(rho.images)
    gens = [g.images for g in g_gens]
    bad = total = 0
    for p in permutations(range(n)):
        if _parity_of(p) != target:
            continue
        total += 1
        bad += len(_orbits(gens + [p], n)) > 1
    return Fraction(bad, total)


def _nontransitivity_task(args):
    gens, target, n, seed, chunk, count = args
    rng = chunk_rng(seed, chunk)
    perms = rng.permuted(np.tile(np.arange(n), (count, 1)), axis=1)
    bad = 0
    for row in perms:
        images = row.tolist()
        if _parity_of(images) != target:
            images[0], images[1] = images[1], images[0]
        bad += len(_orbits(gens + [tuple(images)], n)) > 1
    return bad


def nontransitivity_rate(g_gens: Sequence[Permutation], rho: Permutation, samples: int, seed: int,
                         confidence: float = 0.95, workers: int = 1) -> Estimate:
    """Monte Carlo rate of intransitive <G, sigma> for uniform sigma in rho*Alt(n).

    A draw of the wrong parity is fixed by swapping the images of 0 and 1,
    which is a bijection between the two cosets.
    """
    _check_g(g_gens)
    n = rho.degree
    gens = [g.images for g in g_gens]
    target = _parity_of(rho.images)
    tasks = [(gens, target, n, seed, c, k) for c, k in chunks(samples)]
    bad = sum(run_chunks(_nontransitivity_task, tasks, workers))
    return wilson_interval(bad, samples, confidence)
