"""Insolubility probabilities P_ins and Q over cosets of a simple socle.

For ``a`` and a coset ``rep * S`` inside an ambient automorphism group,
``P_ins`` is the proportion of ``y`` in the coset with ``<a, y>`` insoluble
and ``Q`` the proportion with ``<a, y>`` containing ``S`` (only evaluated
when ``S`` is the alternating group on its natural points).  Only the coset
matters: ``{b*s : s in S}`` is the same set for every representative ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .analysis import pair_verdict
from .constructions import (
    WreathElement,
    alternating_group,
    conjugacy_class_representative,
    direct_power,
    integer_partitions,
    symmetric_group,
    wreath_product,
)
from .group import GroupHandle, _conj, _inv, _mul
from .perm import Permutation, transposition
from .stats import Estimate, chunk_rng, chunks, run_chunks, wilson_interval

DEFAULT_EXACT_CEILING = 500_000
DEFAULT_ETA_CEILING = 8
CENTRALIZER_CEILING = 100_000
COLVA_BOUND = Fraction(53, 90)


@dataclass
class CosetSpec:
    """The coset ``rep * socle`` inside ``ambient``."""

    ambient: GroupHandle
    socle: GroupHandle
    rep: Permutation
    label: str = ""

    def validate(self) -> None:
        if not self.socle.is_subgroup_of(self.ambient):
            raise ValueError("socle is not contained in the ambient group")
        if not self.ambient.contains(self.rep):
            raise ValueError("coset representative is not in the ambient group")

    @property
    def degree(self) -> int:
        return self.ambient.degree

    def alternating_degree(self) -> int | None:
        """``n`` if the socle is Alt(n) on its natural n points with n >= 5."""
        n = self.socle.degree
        if n >= 5 and 2 * self.socle.order() == factorial(n):
            return n
        return None


def alt_coset(n: int, parity: str) -> CosetSpec:
    """Even or odd coset of Alt(n) inside Sym(n)."""
    if parity not in ("even", "odd"):
        raise ValueError("coset must be 'even' or 'odd'")
    rep = Permutation.identity(n) if parity == "even" else transposition(0, 1, n)
    return CosetSpec(symmetric_group(n), alternating_group(n), rep, parity)


@dataclass
class InsolubilityReport:
    kind: str
    a: Permutation
    coset_label: str
    p_ins: Fraction | Estimate
    q_value: Fraction | Estimate | None
    count_insoluble: int | None = None
    count_q: int | None = None
    socle_order: int | None = None
    samples: int | None = None
    seed: int | None = None
    witnesses: list[Permutation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        def val(v):
            if v is None:
                return None
            if isinstance(v, Fraction):
                return f"{v.numerator}/{v.denominator}"
            return v.to_json()

        out = {
            "kind": self.kind,
            "a": self.a.cycle_string(),
            "coset": self.coset_label,
            "p_ins": val(self.p_ins),
            "q_value": val(self.q_value),
            "witnesses": [w.cycle_string() for w in self.witnesses],
            "notes": list(self.notes),
        }
        if self.kind == "exact":
            out["count_insoluble"] = self.count_insoluble
            out["count_q"] = self.count_q
            out["socle_order"] = str(self.socle_order)
        else:
            out["samples"] = self.samples
            out["seed"] = self.seed
        return out


class _PairScanner:
    """Memoised verdicts for ``<a, y>`` with ``y`` in a fixed coset.

    Conjugating by an element that centralises ``a`` and fixes the coset
    maps ``<a, y>`` to a conjugate group, so one verdict covers the orbit.
    """

    def __init__(self, a: Permutation, coset: CosetSpec, reduce: bool = True):
        self.n = coset.degree
        self.a = a.images
        self.rep = coset.rep.images
        alt_n = coset.alternating_degree()
        self.track_q = alt_n is not None and alt_n == self.n
        self.alt_order = factorial(self.n) // 2 if self.track_q else None
        socle_chain = coset.socle.bsgs
        self.levels = [list(t.values()) for t in socle_chain.trans]
        self.stabiliser: list[tuple] = []
        if reduce and coset.ambient.order() <= CENTRALIZER_CEILING:
            self.stabiliser = self._coset_centraliser(coset)
        self.memo: dict[tuple, tuple[bool, bool]] = {}

    def _coset_centraliser(self, coset: CosetSpec) -> list[tuple]:
        a, rep = self.a, self.rep
        rep_inv = _inv(rep)
        socle = coset.socle.bsgs
        out = []
        for c in coset.ambient.bsgs.elements():
            if _mul(a, c) != _mul(c, a):
                continue
            if c == socle.identity or socle.contains(_mul(_conj(rep, c), rep_inv)):
                out.append(c)
        return out

    def verdict(self, y: tuple) -> tuple[bool, bool]:
        v = self.memo.get(y)
        if v is None:
            v = pair_verdict(self.a, y, self.n, self.alt_order)
            self.memo[y] = v
            for c in self.stabiliser:
                self.memo[_conj(y, c)] = v
        return v

    def sample_chunk(self, seed: int, chunk: int, count: int) -> tuple[int, int]:
        rng = chunk_rng(seed, chunk)
        idx = [rng.integers(0, len(level), size=count) for level in self.levels]
        ins = alt = 0
        rep = self.rep
        for j in range(count):
            acc = tuple(range(self.n))
            for level in range(len(self.levels) - 1, -1, -1):
                u = self.levels[level][idx[level][j]]
                acc = tuple(map(u.__getitem__, acc))
            y = tuple(map(acc.__getitem__, rep))
            i, q = self.verdict(y)
            ins += i
            alt += q
        return ins, alt


def _check_a(a: Permutation, coset: CosetSpec) -> None:
    if a.degree != coset.degree:
        raise ValueError(f"degree mismatch: a has degree {a.degree}, coset {coset.degree}")
    if a.is_identity():
        raise ValueError("a must not be the identity")
    if not coset.ambient.contains(a):
        raise ValueError("a is not in the ambient group")


def _notes(coset: CosetSpec) -> list[str]:
    if coset.alternating_degree() == 6 and coset.ambient.order() == 720:
        return ["n=6: only the Sym(6) part of Aut(Alt(6)) is covered"]
    return []


def coset_verdicts(a: Permutation, coset: CosetSpec, reduce: bool = True) -> dict[Permutation, tuple[bool, bool]]:
    """``s -> (insoluble, contains_socle)`` for every ``s`` in the socle, with ``y = rep*s``."""
    _check_a(a, coset)
    scanner = _PairScanner(a, coset, reduce)
    rep = scanner.rep
    out = {}
    for s in coset.socle.bsgs.elements():
        out[Permutation(s, check=False)] = scanner.verdict(tuple(map(s.__getitem__, rep)))
    return out


def insoluble_set(a: Permutation, coset: CosetSpec) -> frozenset[Permutation]:
    """Coset elements ``y`` with ``<a, y>`` insoluble."""
    rep = coset.rep
    return frozenset(rep * s for s, (ins, _) in coset_verdicts(a, coset).items() if ins)


def pins_exact(
    a: Permutation, coset: CosetSpec, ceiling: int = DEFAULT_EXACT_CEILING, reduce: bool = True
) -> InsolubilityReport:
    """Exact P_ins (and Q for alternating socles) by scanning the whole coset."""
    _check_a(a, coset)
    order = coset.socle.order()
    if order > ceiling:
        raise ValueError(f"|S| = {order} exceeds the exact-mode ceiling {ceiling}; use Monte Carlo")
    scanner = _PairScanner(a, coset, reduce)
    rep = scanner.rep
    ins_count = q_count = 0
    witnesses = []
    for s in coset.socle.bsgs.elements():
        ins, q = scanner.verdict(tuple(map(s.__getitem__, rep)))
        if ins:
            ins_count += 1
            if len(witnesses) < 3:
                witnesses.append(Permutation(s, check=False))
        q_count += q
    return InsolubilityReport(
        kind="exact",
        a=a,
        coset_label=coset.label or coset.rep.cycle_string(),
        p_ins=Fraction(ins_count, order),
        q_value=Fraction(q_count, order) if scanner.track_q else None,
        count_insoluble=ins_count,
        count_q=q_count if scanner.track_q else None,
        socle_order=order,
        witnesses=witnesses,
        notes=_notes(coset),
    )


def _mc_task(scanner, args):
    seed, chunk, count = args
    return scanner.sample_chunk(seed, chunk, count)


def pins_montecarlo(
    a: Permutation,
    coset: CosetSpec,
    samples: int,
    seed: int,
    confidence: float = 0.95,
    workers: int = 1,
) -> InsolubilityReport:
    """Estimate P_ins from uniform coset samples with a Wilson interval.

    Each chunk of draws has its own generator seeded from ``(seed, chunk)``,
    so the result does not depend on ``workers``.
    """
    _check_a(a, coset)
    if samples < 100:
        raise ValueError("need at least 100 samples")
    scanner = _PairScanner(a, coset)
    tasks = [(seed, c, k) for c, k in chunks(samples)]
    results = run_chunks(_mc_task, tasks, workers, shared=scanner)
    ins = sum(r[0] for r in results)
    alt = sum(r[1] for r in results)
    return InsolubilityReport(
        kind="montecarlo",
        a=a,
        coset_label=coset.label or coset.rep.cycle_string(),
        p_ins=wilson_interval(ins, samples, confidence),
        q_value=wilson_interval(alt, samples, confidence) if scanner.track_q else None,
        samples=samples,
        seed=seed,
        notes=_notes(coset),
    )


@dataclass
class EtaResult:
    n: int
    value: Fraction
    witnesses: list[tuple[Permutation, str]]
    rows: list[dict]
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "eta": f"{self.value.numerator}/{self.value.denominator}",
            "witnesses": [{"a": a.cycle_string(), "coset": c} for a, c in self.witnesses],
            "rows": self.rows,
            "notes": self.notes,
        }


def eta_exact(n: int, ceiling: int = DEFAULT_ETA_CEILING) -> EtaResult:
    """Minimum of P_ins(Alt(n), a, b) over classes of ``a != 1`` and both cosets."""
    if n < 5 or n > ceiling:
        raise ValueError(f"n must satisfy 5 <= n <= {ceiling}")
    cosets = [alt_coset(n, "even"), alt_coset(n, "odd")]
    # share one ambient/socle so their BSGS are built once
    cosets[1].ambient = cosets[0].ambient
    cosets[1].socle = cosets[0].socle
    rows, best, witnesses = [], None, []
    for part in integer_partitions(n):
        if part == (1,) * n:
            continue
        a = conjugacy_class_representative(part)
        for coset in cosets:
            rep = pins_exact(a, coset)
            rows.append({
                "class": "".join(f"{p}" if p < 10 else f"[{p}]" for p in part),
                "a": a.cycle_string(),
                "coset": coset.label,
                "p_ins": f"{rep.p_ins.numerator}/{rep.p_ins.denominator}",
                "q_value": f"{rep.q_value.numerator}/{rep.q_value.denominator}",
            })
            if best is None or rep.p_ins < best:
                best, witnesses = rep.p_ins, [(a, coset.label)]
            elif rep.p_ins == best:
                witnesses.append((a, coset.label))
    return EtaResult(n, best, witnesses, rows, _notes(cosets[0]))


def wreath_coset(b: WreathElement, s: GroupHandle) -> CosetSpec:
    """Coset ``b * S^m`` inside ``Sym(d) wr Sym(m)``."""
    ambient = wreath_product(symmetric_group(s.degree), symmetric_group(b.m))
    return CosetSpec(ambient, direct_power(s, b.m), b.to_permutation(), "b*S^m")


def wreath_pins_montecarlo(
    a: WreathElement,
    b: WreathElement,
    s: GroupHandle,
    m: int,
    samples: int,
    seed: int,
    confidence: float = 0.95,
    workers: int = 1,
) -> InsolubilityReport:
    """Estimate P_ins(S^m, a, b) in the imprimitive action on ``m*d`` points."""
    if a.m != m or b.m != m:
        raise ValueError(f"wreath elements must have {m} blocks")
    if a.d != s.degree or b.d != s.degree:
        raise ValueError("component degree must match the degree of S")
    if a.is_identity():
        raise ValueError("a must not be the identity")
    coset = wreath_coset(b, s)
    return pins_montecarlo(a.to_permutation(), coset, samples, seed, confidence, workers)


def two_coset_generation_check(x1: Permutation, x2: Permutation, n: int) -> Fraction:
    """Exact probability over ``(s1, s2)`` in Alt(n)^2 that ``<s1*x1, s2*x2>`` contains Alt(n).

    ``y1`` is reduced to a Sym(n)-class representative of its cycle type;
    conjugating the pair simultaneously keeps both cosets fixed.
    """
    if not 5 <= n <= 7:
        raise ValueError("exact two-coset check needs 5 <= n <= 7")
    if x1.degree != n or x2.degree != n:
        raise ValueError(f"x1 and x2 must have degree {n}")
    alt = alternating_group(n)
    sym = symmetric_group(n)
    alt_order = factorial(n) // 2
    elements = [s for s in alt.bsgs.elements()]
    coset1 = [tuple(map(x1.images.__getitem__, s)) for s in elements]
    coset2 = [tuple(map(x2.images.__getitem__, s)) for s in elements]
    by_type: dict[tuple, int] = {}
    for y in coset1:
        t = Permutation(y, check=False).cycle_type()
        by_type[t] = by_type.get(t, 0) + 1
    sym_elements = list(sym.bsgs.elements())
    total = 0
    for ctype, count in sorted(by_type.items()):
        r = conjugacy_class_representative(ctype).images
        centraliser = [c for c in sym_elements if _mul(r, c) == _mul(c, r)]
        memo: dict[tuple, bool] = {}
        good = 0
        for y2 in coset2:
            v = memo.get(y2)
            if v is None:
                v = pair_verdict(r, y2, n, alt_order)[1]
                for c in centraliser:
                    memo[_conj(y2, c)] = v
            good += v
        total += count * good
    return Fraction(total, alt_order * alt_order)


PAIR_STREAM = 1 << 40  # chunk index reserved for drawing pairs, far above any sample chunk


def random_wreath_pairs(d: int, m: int, count: int, seed: int) -> list[tuple[WreathElement, WreathElement, int]]:
    """``count`` seeded triples ``(a, b, sample_seed)`` in Sym(d) wr Sym(m) with ``a != 1``."""
    rng = chunk_rng(seed, PAIR_STREAM)

    def draw() -> WreathElement:
        comps = tuple(Permutation(rng.permutation(d).tolist(), check=False) for _ in range(m))
        return WreathElement(comps, Permutation(rng.permutation(m).tolist(), check=False))

    out = []
    while len(out) < count:
        a, b = draw(), draw()
        if a.is_identity():
            continue
        out.append((a, b, int(rng.integers(0, 1 << 63))))
    return out
