"""Binomial intervals and order-independent seeding for Monte Carlo runs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import sqrt
from statistics import NormalDist
from typing import Callable, Sequence

import numpy as np

CHUNK_SIZE = 512
SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class Estimate:
    """A binomial proportion with its Wilson score interval."""

    successes: int
    trials: int
    confidence: float
    low: float
    high: float

    @property
    def estimate(self) -> float:
        return self.successes / self.trials

    @property
    def half_width(self) -> float:
        return (self.high - self.low) / 2

    def to_json(self) -> dict:
        return {
            "estimate": self.estimate,
            "half_width": self.half_width,
            "interval": [self.low, self.high],
            "confidence": self.confidence,
            "successes": self.successes,
            "trials": self.trials,
        }


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> Estimate:
    if trials <= 0:
        raise ValueError("need at least one trial")
    if not 0 < confidence < 1:
        raise ValueError("confidence must lie in (0, 1)")
    z = NormalDist().inv_cdf(0.5 + confidence / 2)
    p = successes / trials
    denom = 1 + z * z / trials
    centre = (p + z * z / (2 * trials)) / denom
    half = z / denom * sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials))
    return Estimate(successes, trials, confidence, max(0.0, centre - half), min(1.0, centre + half))


def chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    """Generator for one chunk, a pure function of ``(seed, chunk)``."""
    return np.random.default_rng(np.random.SeedSequence([seed & SEED_MASK, chunk]))


def chunks(samples: int, size: int = CHUNK_SIZE) -> list[tuple[int, int]]:
    """``(chunk_index, count)`` pairs covering ``samples`` draws."""
    return [(i, min(size, samples - start)) for i, start in enumerate(range(0, samples, size))]


_SHARED = None


def _install_shared(obj) -> None:
    global _SHARED
    _SHARED = obj


def _call_shared(fn_task):
    fn, task = fn_task
    return fn(_SHARED, task)


def run_chunks(fn: Callable, tasks: Sequence, workers: int = 1, shared=None) -> list:
    """Map ``fn`` over tasks, optionally in a process pool; order is preserved.

    With ``shared`` the call is ``fn(shared, task)``, and each worker process
    receives ``shared`` once, so caches inside it persist across that
    worker's tasks.
    """
    if workers <= 1 or len(tasks) <= 1:
        if shared is None:
            return [fn(t) for t in tasks]
        return [fn(shared, t) for t in tasks]
    if shared is None:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, tasks))
    with ProcessPoolExecutor(max_workers=workers, initializer=_install_shared, initargs=(shared,)) as pool:
        return list(pool.map(_call_shared, [(fn, t) for t in tasks]))
