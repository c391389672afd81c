"""Solubility, transitivity and alternating-group containment."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .group import BSGS, GroupHandle, _comm, _conj, _minimal_block_classes, _mul, _orbits
from .perm import Permutation, cycle_decomposition


@dataclass
class SolubilityCertificate:
    verdict: str
    derived_orders: list[int] = field(default_factory=list)
    steps: int = 0

    @property
    def soluble(self) -> bool:
        return self.verdict == "soluble"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "derived_orders": [str(o) for o in self.derived_orders],
            "steps": self.steps,
        }


def _normal_closure(sub: Sequence[tuple], gens: Sequence[tuple], n: int) -> tuple[BSGS, list[tuple]]:
    """BSGS and generators of the normal closure of ``sub`` under ``gens``.

    Candidates already in the closure-so-far are dropped, so the generator
    list only holds elements that enlarged the group.
    """
    chain = BSGS(n)
    kept = []
    queue = []
    for c in sub:
        if chain.extend(c):
            kept.append(c)
            queue.append(c)
    while queue:
        c = queue.pop()
        for g in gens:
            d = _conj(c, g)
            if chain.extend(d):
                kept.append(d)
                queue.append(d)
    return chain, kept


def _derived(gens: Sequence[tuple], n: int) -> tuple[BSGS, list[tuple]]:
    comms = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            comms.append(_comm(gens[i], gens[j]))
    return _normal_closure(comms, gens, n)


def normal_closure(sub: Sequence[Permutation], group: GroupHandle) -> GroupHandle:
    chain, kept = _normal_closure([s.images for s in sub], group.gen_tuples, group.degree)
    handle = GroupHandle.from_tuples(kept, group.degree)
    handle._bsgs = chain
    return handle


def derived_subgroup(group: GroupHandle) -> GroupHandle:
    """Normal closure in ``group`` of the commutators of its generators."""
    chain, kept = _derived(group.gen_tuples, group.degree)
    handle = GroupHandle.from_tuples(kept, group.degree)
    handle._bsgs = chain
    return handle


def _solubility(gens: list[tuple], n: int, order: int | None = None) -> SolubilityCertificate:
    if order is None:
        order = BSGS.from_generators(gens, n).order()
    orders = [order]
    steps = 0
    while order > 1:
        chain, gens = _derived(gens, n)
        steps += 1
        new = chain.order()
        orders.append(new)
        if new == order:
            return SolubilityCertificate("insoluble", orders, steps)
        order = new
    return SolubilityCertificate("soluble", orders, steps)


def is_soluble(group: GroupHandle) -> SolubilityCertificate:
    """Run the derived series until it reaches 1 or stabilises."""
    gens = [g for g in group.gen_tuples if g != tuple(range(group.degree))]
    return _solubility(gens, group.degree, group.order())


def contains_alternating(group: GroupHandle) -> bool:
    """A subgroup of Sym(n) contains Alt(n) iff its order is at least n!/2."""
    n = group.degree
    if n < 3:
        raise ValueError("contains_alternating needs degree >= 3")
    return 2 * group.order() >= factorial(n)


def is_transitive(gens: Sequence[Permutation]) -> bool:
    if not gens:
        raise ValueError("empty generator list")
    return len(_orbits([g.images for g in gens], gens[0].degree)) == 1


def is_perfect(group: GroupHandle) -> bool:
    return derived_subgroup(group).order() == group.order()


JORDAN_MIN_DEGREE = 9


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _is_primitive(gens: Sequence[tuple], n: int) -> bool:
    if len(_orbits(gens, n)) != 1:
        return False
    for i in range(1, n):
        classes = _minimal_block_classes(gens, n, (0, i))
        if len(classes) != 1:
            return False
    return True


def _word_elements(a: tuple, y: tuple) -> list[tuple]:
    ay = _mul(a, y)
    words = [a, y, ay, _mul(ay, y), _mul(a, ay), _mul(ay, ay)]
    w = ay
    for _ in range(6):
        w = _mul(_mul(w, a), _mul(y, y))
        words.append(w)
    words.append(_comm(a, y))
    words.append(_mul(_comm(a, y), a))
    words.append(_mul(_comm(a, y), y))
    return words


def jordan_certificate(gens: Sequence[tuple], n: int) -> bool:
    """True when ``<gens>`` provably contains Alt(n) by Jordan's theorem.

    Looks for an element with exactly one cycle of some prime length
    ``p <= n - 3`` and all other cycle lengths prime to ``p``; a power of it
    is then a p-cycle, and a primitive group holding one contains Alt(n).
    False means "no certificate", not "does not contain Alt(n)".
    """
    candidates = _word_elements(gens[0], gens[1]) if len(gens) == 2 else list(gens)
    has_cycle = False
    for w in candidates:
        lengths = [len(c) for c in cycle_decomposition(Permutation(w, check=False))]
        for p in set(lengths):
            if p > n - 3 or lengths.count(p) != 1 or not _is_prime(p):
                continue
            if all(length % p for length in lengths if length != p):
                has_cycle = True
                break
        if has_cycle:
            break
    return has_cycle and _is_primitive(gens, n)


def pair_verdict(a: tuple, y: tuple, n: int, alt_order: int | None = None) -> tuple[bool, bool]:
    """``(insoluble, contains_alt)`` for ``<a, y>`` in Sym(n).

    When ``alt_order`` (n!/2, n >= 5) is given, a Jordan certificate or an
    order of at least n!/2 settles both answers without the derived series.
    """
    if alt_order is not None and n >= JORDAN_MIN_DEGREE and jordan_certificate((a, y), n):
        return True, True
    chain = BSGS.from_generators((a, y), n)
    order = chain.order()
    if alt_order is not None and order >= alt_order:
        return True, True
    gens = [g for g in (a, y) if g != chain.identity]
    return not _solubility(gens, n, order).soluble, False
