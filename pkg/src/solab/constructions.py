"""Standard groups, wreath elements, named recipes and normal series."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .group import GroupHandle
from .perm import Permutation, cycle


def symmetric_group(n: int) -> GroupHandle:
    if n == 1:
        return GroupHandle([Permutation.identity(1)])
    if n == 2:
        return GroupHandle([cycle([0, 1], 2)])
    return GroupHandle([cycle([0, 1], n), cycle(list(range(n)), n)])


def alternating_group(n: int) -> GroupHandle:
    if n < 3:
        return GroupHandle([Permutation.identity(n)])
    long = list(range(n)) if n % 2 else list(range(1, n))
    gens = [cycle([0, 1, 2], n)]
    if n > 3:
        gens.append(cycle(long, n))
    return GroupHandle(gens)


def embed_block(p: Permutation, block: int, m: int) -> Permutation:
    """Copy of ``p`` acting on block ``block`` of ``m`` blocks of size ``p.degree``."""
    d = p.degree
    images = list(range(m * d))
    for x in range(d):
        images[block * d + x] = block * d + p.images[x]
    return Permutation(images, check=False)


def block_permutation(top: Permutation, d: int) -> Permutation:
    """Move whole blocks of size ``d`` rigidly according to ``top``."""
    m = top.degree
    return Permutation(
        [top.images[i] * d + x for i in range(m) for x in range(d)], check=False
    )


@dataclass(frozen=True)
class WreathElement:
    """``(c_1, ..., c_m) top`` in the imprimitive action on ``m*d`` points.

    Point ``(i, x)`` (index ``i*d + x``) goes to ``(top(i), c_i(x))``: the
    block component acts first, then the block moves.
    """

    components: tuple[Permutation, ...]
    top: Permutation

    def __post_init__(self):
        if len(self.components) != self.top.degree:
            raise ValueError("need one component per block")
        if len({c.degree for c in self.components}) != 1:
            raise ValueError("components have mixed degrees")

    @property
    def m(self) -> int:
        return self.top.degree

    @property
    def d(self) -> int:
        return self.components[0].degree

    def to_permutation(self) -> Permutation:
        d = self.d
        images = [0] * (self.m * d)
        for i, c in enumerate(self.components):
            ti = self.top.images[i] * d
            for x in range(d):
                images[i * d + x] = ti + c.images[x]
        return Permutation(images, check=False)

    @classmethod
    def from_permutation(cls, p: Permutation, d: int) -> WreathElement:
        m = p.degree // d
        top, comps = [], []
        for i in range(m):
            block = p.images[i * d] // d
            top.append(block)
            comps.append(Permutation([p.images[i * d + x] - block * d for x in range(d)]))
        return cls(tuple(comps), Permutation(top))

    def is_identity(self) -> bool:
        return self.top.is_identity() and all(c.is_identity() for c in self.components)

    def __mul__(self, other: WreathElement) -> WreathElement:
        return WreathElement.from_permutation(self.to_permutation() * other.to_permutation(), self.d)


def direct_power(s: GroupHandle, m: int) -> GroupHandle:
    """``S^m`` acting on ``m`` blocks of ``S.degree`` points."""
    gens = [embed_block(g, i, m) for i in range(m) for g in s.generators]
    return GroupHandle(gens)


def wreath_product(base: GroupHandle, top: GroupHandle) -> GroupHandle:
    """``base wr top`` in its imprimitive action."""
    m = top.degree
    gens = [embed_block(g, 0, m) for g in base.generators]
    gens += [block_permutation(t, base.degree) for t in top.generators]
    return GroupHandle(gens)


def cyclic_group(m: int) -> GroupHandle:
    return GroupHandle([cycle(list(range(m)), m) if m > 1 else Permutation.identity(1)])


def block_swap(n: int, m: int) -> Permutation:
    """Exchange blocks 0 and 1 of ``m`` blocks of size ``n``."""
    return block_permutation(cycle([0, 1], m), n)


@dataclass
class NormalChain:
    """``N_0 = ambient >= N_1 >= ... >= N_t = 1``, supplied rather than discovered."""

    ambient: GroupHandle
    subgroups: list[GroupHandle]
    step_flags: list[dict] | None = None

    def __post_init__(self):
        if not self.subgroups:
            raise ValueError("a chain needs at least one subgroup")
        if self.subgroups[-1].order() != 1:
            raise ValueError("chain must end at the trivial group")

    @property
    def length(self) -> int:
        return len(self.subgroups) - 1

    def validate(self) -> None:
        """Raise ValueError unless each term is normal in ambient and nested."""
        if self.subgroups[0].order() != self.ambient.order() or not self.subgroups[0].is_subgroup_of(self.ambient):
            raise ValueError("N_0 must equal the ambient group")
        for i, sub in enumerate(self.subgroups):
            if not sub.is_normal_in(self.ambient):
                raise ValueError(f"N_{i} is not normal in the ambient group")
            if i and not sub.is_subgroup_of(self.subgroups[i - 1]):
                raise ValueError(f"N_{i} is not contained in N_{i - 1}")


@dataclass
class Construction:
    name: str
    group: GroupHandle
    series: NormalChain
    named_elements: dict


_RECIPE = re.compile(r"^(alt|sym)(\d+)(?:\^(\d+):swap|wrC(\d+))?$")


def construct(name: str) -> Construction:
    """Named recipes ``alt<n>``, ``sym<n>``, ``alt<n>^m:swap``, ``alt<n>wrC<m>``."""
    match = _RECIPE.match(name.strip())
    if not match:
        raise ValueError(
            f"unknown construction {name!r}; use alt<n>, sym<n>, alt<n>^m:swap or alt<n>wrC<m>"
        )
    kind, n, power, wr = match.group(1), int(match.group(2)), match.group(3), match.group(4)
    trivial = lambda deg: GroupHandle([Permutation.identity(deg)])
    if power is None and wr is None:
        if kind == "alt":
            g = alternating_group(n)
            chain = NormalChain(g, [g, trivial(n)])
        else:
            g = symmetric_group(n)
            chain = NormalChain(g, [g, alternating_group(n), trivial(n)])
        return Construction(name, g, chain, {})
    if kind != "alt":
        raise ValueError("power and wreath recipes are built on alt<n>")
    m = int(power or wr)
    if m < 2:
        raise ValueError("need m >= 2 blocks")
    base = direct_power(alternating_group(n), m)
    if power is not None:
        extra = block_swap(n, m)
        named = {"swap": extra}
    else:
        extra = block_permutation(cycle(list(range(m)), m), n)
        named = {"rotate": extra, "swap": extra}
    g = GroupHandle(base.generators + [extra])
    chain = NormalChain(g, [g, base, trivial(n * m)])
    return Construction(name, g, chain, named)


def derived_series_chain(group: GroupHandle) -> NormalChain:
    """Derived series of a soluble group as a normal chain."""
    from .analysis import derived_subgroup

    terms = [group]
    while terms[-1].order() > 1:
        nxt = derived_subgroup(terms[-1])
        if nxt.order() == terms[-1].order():
            raise ValueError("group is not soluble; derived series does not reach 1")
        terms.append(nxt)
    if len(terms) == 1:
        terms.append(GroupHandle([Permutation.identity(group.degree)]))
    return NormalChain(group, terms)


def conjugacy_class_representative(partition: Sequence[int]) -> Permutation:
    """Element of Sym(sum(partition)) whose cycles are consecutive runs."""
    n = sum(partition)
    cycles, start = [], 0
    for part in partition:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, n)


def integer_partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order, largest part first."""
    out = []

    def rec(remaining, max_part, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, max_part), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out
