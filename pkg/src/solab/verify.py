"""Batch runs of the exhaustive counting checks, with failure lists."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .combinatorics import (
    facile_count,
    fact1_check,
    fact2_check,
    factorial_identity_check,
    iota_count,
    kappa_closed_form,
    kappa_count,
)
from .perm import Permutation
from .stats import chunk_rng

FACT2_STREAM = 1 << 41


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(label)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "failures": self.failures}


def verify_factorial_identity(n_max: int = 30) -> CheckResult:
    res = CheckResult("factorial-identity")
    for n in range(1, n_max + 1):
        for a in range(n):
            res.record(factorial_identity_check(n, a).equal, f"n={n} a={a}")
    return res


def verify_iota(omega_max: int = 8) -> list[CheckResult]:
    """Total against (|Omega|-1)!|A| for nonempty A, and the parity split when |Omega|-|A| >= 2."""
    total, split = CheckResult("iota-count"), CheckResult("iota-parity-split")
    for n in range(1, omega_max + 1):
        for a in range(0, n + 1):
            c = iota_count(n, a)
            expected = c.formula if a else 0
            total.record(c.total == expected, f"omega={n} a={a} count={c.total} formula={expected}")
            if n - a >= 2:
                split.record(c.even == c.odd, f"omega={n} a={a} even={c.even} odd={c.odd}")
    return [total, split]


def verify_kappa(omega_max: int = 7) -> list[CheckResult]:
    """Closed form for every nested pair B <= A, plus the sum over B against iota."""
    closed, union = CheckResult("kappa-closed-form"), CheckResult("kappa-sums-to-iota")
    for n in range(1, omega_max + 1):
        omega = range(n)
        for a_size in range(1, n + 1):
            a = list(range(a_size))
            subtotal = 0
            for b_size in range(1, a_size + 1):
                for b in combinations(a, b_size):
                    k = kappa_count(omega, a, b)
                    subtotal += k
                    cf = kappa_closed_form(n, a_size, b_size)
                    closed.record(k == cf, f"omega={n} a={a_size} b={sorted(b)} count={k} closed={cf}")
            it = iota_count(n, a_size).total
            union.record(subtotal == it, f"omega={n} a={a_size} sum={subtotal} iota={it}")
    return [closed, union]


def verify_facile(n_max: int = 9) -> list[CheckResult]:
    """Exhaustive count against the closed form, and against the stated lower bound."""
    closed, bound = CheckResult("facile-closed-form"), CheckResult("facile-bound")
    for n in range(2, n_max + 1):
        for k in range(max(2, (n + 1) // 2), n + 1):  # k >= 2: the cycle holds both points
            f = facile_count(n, k)
            closed.record(f.matches, f"n={n} k={k} exact={f.exact} closed={f.closed_form}")
            bound.record(f.bound_holds, f"n={n} k={k} exact={f.exact} bound={f.bound}")
    return [closed, bound]


def verify_fact1(omega_max: int = 7) -> CheckResult:
    res = CheckResult("fact1")
    for n in range(1, omega_max + 1):
        for size in range(1, n + 1):
            for r in combinations(range(n), size):
                res.record(fact1_check(n, r), f"omega={n} r={list(r)}")
    return res


def random_fact2_instance(rng, n: int) -> tuple[list[Permutation], Permutation, list[int]]:
    """Random ``(G generators, sigma, r)`` with G supported on r."""
    size = int(rng.integers(1, n + 1))
    r = sorted(rng.choice(n, size=size, replace=False).tolist())
    gens = []
    for _ in range(int(rng.integers(1, 3))):
        images = list(range(n))
        for src, dst in zip(r, rng.permutation(r).tolist()):
            images[src] = dst
        gens.append(Permutation(images, check=False))
    sigma = Permutation(rng.permutation(n).tolist(), check=False)
    return gens, sigma, r


def verify_fact2(instances: int = 200, degree: int = 7, seed: int = 0) -> CheckResult:
    res = CheckResult("fact2")
    rng = chunk_rng(seed, FACT2_STREAM)
    for i in range(instances):
        gens, sigma, r = random_fact2_instance(rng, degree)
        res.record(fact2_check(gens, sigma, r), f"instance={i} r={[x + 1 for x in r]} sigma={sigma.cycle_string()}")
    return res
