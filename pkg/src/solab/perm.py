"""Permutations of {0, ..., n-1} acting on the right.

Composition is left to right: ``p * q`` sends ``i`` to ``q(p(i))``, which is
the convention ``i^(pq) = (i^p)^q`` used throughout the package.  Points are
0-indexed internally; the text format uses 1-indexed cycles, e.g.
``"(1 2)(3 4 5)"``.
"""

from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Sequence


class Permutation:
    """An immutable bijection of ``range(degree)``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int], *, check: bool = True):
        images = tuple(images)
        if check:
            n = len(images)
            if n == 0:
                raise ValueError("degree must be positive")
            if sorted(images) != list(range(n)):
                raise ValueError(f"not a permutation of range({n}): {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    # construction helpers

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from 0-indexed cycles; unlisted points are fixed."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if not 0 <= x < degree:
                    raise ValueError(f"point {x} outside degree {degree}")
                if x in seen:
                    raise ValueError(f"point {x} appears twice")
                seen.add(x)
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images, check=False)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> Permutation:
        """Parse 1-indexed cycle notation such as ``"(1 2)(3 4 5)"``."""
        cycles = parse_cycles(text)
        top = max((max(c) for c in cycles if c), default=0) + 1
        if degree is None:
            degree = max(top, 1)
        elif top > degree:
            raise ValueError(f"{text!r} moves points beyond degree {degree}")
        return cls.from_cycles(cycles, degree)

    @classmethod
    def from_json(cls, record: dict) -> Permutation:
        cycles = [[x - 1 for x in c] for c in record["cycles"]]
        return cls.from_cycles(cycles, int(record["degree"]))

    # basic protocol

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __repr__(self):
        return f"Permutation.parse({self.cycle_string()!r}, degree={self.degree})"

    def __str__(self):
        return self.cycle_string()

    # group operations

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return invert(self) ** (-k)
        result = tuple(range(self.degree))
        base = self.images
        while k:
            if k & 1:
                result = tuple(map(base.__getitem__, result))
            base = tuple(map(base.__getitem__, base))
            k >>= 1
        return Permutation(result, check=False)

    def inverse(self) -> Permutation:
        return invert(self)

    def conjugate(self, g: Permutation) -> Permutation:
        """Return ``g^-1 * self * g``."""
        return invert(g) * self * g

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    # structure

    def cycles(self) -> list[list[int]]:
        return cycle_decomposition(self)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in cycle_decomposition(self)), reverse=True))

    def order(self) -> int:
        result = 1
        for c in cycle_decomposition(self):
            result = result * len(c) // gcd(result, len(c))
        return result

    def parity(self) -> str:
        return parity(self)

    def is_even(self) -> bool:
        return parity(self) == "even"

    def fixed_points(self) -> set[int]:
        return fixed_points(self)

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    # text / JSON

    def cycle_string(self) -> str:
        parts = [
            "(" + " ".join(str(x + 1) for x in c) + ")"
            for c in cycle_decomposition(self)
            if len(c) > 1
        ]
        return "".join(parts) or "()"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "cycles": [[x + 1 for x in c] for c in cycle_decomposition(self) if len(c) > 1],
        }


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse 1-indexed cycle text into 0-indexed point lists."""
    stripped = re.sub(r"\s+", " ", text).strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"could not parse permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = [t for t in re.split(r"[ ,]+", body.strip()) if t]
        pts = []
        for t in tokens:
            if not t.isdigit() or int(t) < 1:
                raise ValueError(f"bad point {t!r} in {text!r}")
            pts.append(int(t) - 1)
        if pts:
            cycles.append(pts)
    return cycles


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return the permutation ``i -> q(p(i))``."""
    if len(p.images) != len(q.images):
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(map(q.images.__getitem__, p.images), check=False)


def invert(p: Permutation) -> Permutation:
    inv = [0] * len(p.images)
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation(inv, check=False)


def cycle_decomposition(p: Permutation) -> list[list[int]]:
    """Cycles including fixed points, each starting at its minimum, sorted."""
    images = p.images
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = images[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = images[x]
        out.append(cyc)
    return out


def parity(p: Permutation) -> str:
    n_cycles = len(cycle_decomposition(p))
    return "even" if (p.degree - n_cycles) % 2 == 0 else "odd"


def fixed_points(p: Permutation) -> set[int]:
    return {i for i, x in enumerate(p.images) if i == x}


def cycle(points: Sequence[int], degree: int) -> Permutation:
    """A single cycle on 0-indexed points."""
    return Permutation.from_cycles([points], degree)


def transposition(i: int, j: int, degree: int) -> Permutation:
    return Permutation.from_cycles([[i, j]], degree)
