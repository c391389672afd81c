"""Permutation groups: Schreier-Sims BSGS, orbits and block systems.

Hot loops work on raw image tuples rather than :class:`Permutation` objects;
``_mul(p, q)`` is the tuple version of ``p * q`` (apply ``p`` first).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm import Permutation


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(map(q.__getitem__, p))


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _conj(p: tuple, g: tuple) -> tuple:
    """``g^-1 p g`` as tuples."""
    # i -> g^-1(i) -> p(.) -> g(.)
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[g[i]] = g[x]
    return tuple(out)


def _comm(p: tuple, q: tuple) -> tuple:
    """``p^-1 q^-1 p q``."""
    return _mul(_mul(_inv(p), _inv(q)), _mul(p, q))


class BSGS:
    """Base and strong generating set built by deterministic Schreier-Sims.

    Level ``l`` stores the strong generators fixing ``base[:l]`` and a
    transversal ``point -> u`` with ``u[base[l]] == point``.  New base points
    are always the smallest point moved by the element that forces them.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.base: list[int] = []
        self.gens: list[list[tuple]] = []
        self.trans: list[dict[int, tuple]] = []
        self.tinv: list[dict[int, tuple]] = []
        self._checked: list[set] = []

    @classmethod
    def from_generators(cls, gens: Iterable[tuple], degree: int) -> BSGS:
        chain = cls(degree)
        for g in gens:
            chain.extend(g)
        return chain

    def order(self) -> int:
        result = 1
        for t in self.trans:
            result *= len(t)
        return result

    def strip(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        base, tinv = self.base, self.tinv
        for level in range(start, len(base)):
            x = g[base[level]]
            ti = tinv[level]
            if x not in ti:
                return g, level
            if x != base[level]:
                g = tuple(map(ti[x].__getitem__, g))
        return g, len(base)

    def contains(self, g: tuple) -> bool:
        h, level = self.strip(g)
        return level == len(self.base) and h == self.identity

    def extend(self, g: tuple) -> bool:
        """Add ``g`` to the group; return False if it was already a member."""
        h, j = self.strip(g)
        if h == self.identity:
            return False
        self._add(h, 0, j)
        self._close(j)
        return True

    def _add(self, h: tuple, lo: int, j: int) -> None:
        if j == len(self.base):
            b = next(i for i, x in enumerate(h) if i != x)
            self.base.append(b)
            self.gens.append([])
            self.trans.append({b: self.identity})
            self.tinv.append({b: self.identity})
            self._checked.append(set())
        for level in range(lo, j + 1):
            self.gens[level].append(h)
            self._grow_orbit(level, h)

    def _grow_orbit(self, level: int, new: tuple) -> None:
        # existing transversal elements stay fixed, so checked Schreier
        # generators remain valid across calls
        trans, tinv, gens = self.trans[level], self.tinv[level], self.gens[level]
        queue = []
        for x, u in list(trans.items()):
            y = new[x]
            if y not in trans:
                v = _mul(u, new)
                trans[y] = v
                tinv[y] = _inv(v)
                queue.append(y)
        for x in queue:
            u = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    v = _mul(u, s)
                    trans[y] = v
                    tinv[y] = _inv(v)
                    queue.append(y)

    def _close(self, i: int) -> None:
        identity = self.identity
        while i >= 0:
            found = None
            trans, tinv, gens = self.trans[i], self.tinv[i], self.gens[i]
            checked = self._checked[i]
            for x, u in list(trans.items()):
                for k, s in enumerate(gens):
                    if (x, k) in checked:
                        continue
                    checked.add((x, k))
                    us = _mul(u, s)
                    y = s[x]
                    if us == trans[y]:
                        continue
                    h, j = self.strip(tuple(map(tinv[y].__getitem__, us)), i + 1)
                    if h != identity:
                        found = (h, j)
                        break
                if found:
                    break
            if found:
                h, j = found
                self._add(h, i + 1, j)
                i = j
            else:
                i -= 1

    def elements(self) -> Iterator[tuple]:
        """Every group element once, as ``u_{k-1} * ... * u_0``."""
        levels = [list(t.values()) for t in self.trans]

        def rec(level, acc):
            if level < 0:
                yield acc
                return
            for u in levels[level]:
                yield from rec(level - 1, tuple(map(u.__getitem__, acc)))

        yield from rec(len(levels) - 1, self.identity)

    def element_from_indices(self, idx: Sequence[int], levels=None) -> tuple:
        if levels is None:
            levels = [list(t.values()) for t in self.trans]
        acc = self.identity
        for level in range(len(levels) - 1, -1, -1):
            u = levels[level][idx[level]]
            acc = tuple(map(u.__getitem__, acc))
        return acc


class GroupHandle:
    """A permutation group given by generators, with a lazily built BSGS."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None):
        gens = list(generators)
        if not gens:
            if degree is None:
                raise ValueError("need at least one generator or a degree")
            gens = [Permutation.identity(degree)]
        degrees = {g.degree for g in gens}
        if len(degrees) != 1:
            raise ValueError(f"generators have mixed degrees {sorted(degrees)}")
        self.generators: list[Permutation] = gens
        self.degree: int = gens[0].degree
        self._bsgs: BSGS | None = None
        self._lock = threading.Lock()

    @classmethod
    def from_tuples(cls, gens: Iterable[tuple], degree: int) -> GroupHandle:
        return cls([Permutation(g, check=False) for g in gens], degree)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"GroupHandle(degree={self.degree}, gens=[{gens}])"

    @property
    def gen_tuples(self) -> list[tuple]:
        return [g.images for g in self.generators]

    @property
    def bsgs(self) -> BSGS:
        if self._bsgs is None:
            with self._lock:
                if self._bsgs is None:
                    self._bsgs = BSGS.from_generators(self.gen_tuples, self.degree)
        return self._bsgs

    def order(self) -> int:
        return self.bsgs.order()

    @property
    def base(self) -> list[int]:
        return list(self.bsgs.base)

    def strong_generators(self) -> list[Permutation]:
        seen, out = set(), []
        for level in self.bsgs.gens:
            for g in level:
                if g not in seen:
                    seen.add(g)
                    out.append(Permutation(g, check=False))
        return out

    def basic_orbit_lengths(self) -> list[int]:
        return [len(t) for t in self.bsgs.trans]

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        return self.bsgs.contains(p.images)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def elements(self) -> Iterator[Permutation]:
        for g in self.bsgs.elements():
            yield Permutation(g, check=False)

    def random_element(self, rng) -> Permutation:
        """Uniform element: one independent uniform pick per basic transversal."""
        idx = [int(rng.integers(len(t))) for t in self.bsgs.trans]
        return Permutation(self.bsgs.element_from_indices(idx), check=False)

    def is_subgroup_of(self, other: GroupHandle) -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: GroupHandle) -> bool:
        return all(
            self.contains(h.conjugate(g)) for h in self.generators for g in other.generators
        )

    def orbits(self) -> list[list[int]]:
        return orbits(self.generators)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)


def bsgs_order(group: GroupHandle) -> int:
    return group.order()


def contains(group: GroupHandle, p: Permutation) -> bool:
    return group.contains(p)


def orbits(gens: Sequence[Permutation]) -> list[list[int]]:
    """Orbit partition of ``<gens>``; each orbit sorted, orbits sorted by minimum."""
    if not gens:
        raise ValueError("empty generator list")
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValueError("generators have mixed degrees")
    return _orbits([g.images for g in gens], n)


def _orbits(gens: Sequence[tuple], n: int) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, x in enumerate(g):
            ri, rx = find(i), find(x)
            if ri != rx:
                parent[max(ri, rx)] = min(ri, rx)
    classes: dict[int, list[int]] = {}
    for i in range(n):
        classes.setdefault(find(i), []).append(i)
    return sorted(classes.values(), key=lambda c: c[0])


def is_transitive(gens: Sequence[Permutation]) -> bool:
    return len(orbits(gens)) == 1


@dataclass(frozen=True)
class BlockSystem:
    """An invariant partition of the points into equal-sized blocks."""

    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> BlockSystem:
        blocks = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        n = sum(len(b) for b in blocks)
        block_of = [-1] * n
        for j, b in enumerate(blocks):
            for x in b:
                if block_of[x] != -1:
                    raise ValueError("blocks overlap")
                block_of[x] = j
        if -1 in block_of:
            raise ValueError("blocks do not cover all points")
        if len({len(b) for b in blocks}) != 1:
            raise ValueError("blocks have unequal sizes")
        return cls(tuple(blocks), tuple(block_of))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def is_trivial(self) -> bool:
        return self.num_blocks in (1, len(self.block_of))

    def is_preserved_by(self, g: Permutation) -> bool:
        bo = self.block_of
        for b in self.blocks:
            target = bo[g.images[b[0]]]
            if any(bo[g.images[x]] != target for x in b):
                return False
        return True


def _minimal_block_classes(gens: Sequence[tuple], n: int, seed: Iterable[int]) -> list[list[int]]:
    """Finest invariant partition with ``seed`` inside one class (union-find merge)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = []

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
            pending.append((ra, rb))

    seed = list(seed)
    for x in seed[1:]:
        union(seed[0], x)
    while pending:
        a, b = pending.pop()
        for g in gens:
            union(g[a], g[b])
    classes: dict[int, list[int]] = {}
    for i in range(n):
        classes.setdefault(find(i), []).append(i)
    return list(classes.values())


def minimal_block_system(group: GroupHandle) -> BlockSystem:
    """Nontrivial block system with the fewest blocks (largest proper blocks).

    Returns the singleton system when the group is primitive.  Blocks
    containing 0 form a lattice whose join is "smallest block containing
    both"; it is generated by the minimal blocks of the pairs ``{0, i}``, so
    the search closes that set under joins and keeps the largest proper one.
    """
    n = group.degree
    gens = group.gen_tuples
    if len(_orbits(gens, n)) != 1:
        raise ValueError("group is not transitive")
    if n == 1:
        return BlockSystem.from_blocks([[0]])

    def block_of_zero(seed):
        for c in _minimal_block_classes(gens, n, seed):
            if 0 in c:
                return frozenset(c)

    atoms = set()
    for i in range(1, n):
        b = block_of_zero([0, i])
        if len(b) < n:
            atoms.add(b)
    if not atoms:
        return BlockSystem.from_blocks([[i] for i in range(n)])
    found = set(atoms)
    frontier = list(atoms)
    while frontier:
        new = []
        for b in frontier:
            for a in atoms:
                if a <= b:
                    continue
                j = block_of_zero(sorted(a | b))
                if len(j) < n and j not in found:
                    found.add(j)
                    new.append(j)
        frontier = new
    best = max(found, key=lambda b: (len(b), sorted(b)))
    return BlockSystem.from_blocks(_minimal_block_classes(gens, n, sorted(best)))


def blocks_action(group: GroupHandle, bs: BlockSystem) -> list[Permutation]:
    """Permutations of block indices induced by each generator."""
    out = []
    for g in group.generators:
        if not bs.is_preserved_by(g):
            raise ValueError(f"generator {g} does not preserve the block system")
        out.append(Permutation([bs.block_of[g.images[b[0]]] for b in bs.blocks]))
    return out
