"""Solubilizers of elements in finite permutation groups.

``S_G(g)`` is the set of ``y`` in ``G`` with ``<g, y>`` soluble; the finite
ratio ``|S_G(g)|/|G|`` stands in for a Haar measure.  Normal series are
always supplied by the caller (see :mod:`solab.constructions`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .analysis import is_soluble, pair_verdict
from .constructions import NormalChain
from .group import GroupHandle, _comm, _conj, _mul
from .insolubility import COLVA_BOUND
from .perm import Permutation

DEFAULT_SOLUBILIZER_CEILING = 10_000


@dataclass
class SolubilizerReport:
    group_order: int
    g: Permutation
    solubilizer_size: int
    t_bound_used: int | None = None
    eta_tilde: Fraction | None = None

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.solubilizer_size, self.group_order)

    def to_json(self) -> dict:
        out = {
            "group_order": str(self.group_order),
            "g": self.g.cycle_string(),
            "solubilizer_size": self.solubilizer_size,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
        }
        if self.t_bound_used is not None:
            out["t"] = self.t_bound_used
        if self.eta_tilde is not None:
            out["eta_tilde"] = f"{self.eta_tilde.numerator}/{self.eta_tilde.denominator}"
        return out


def _check_member(group: GroupHandle, g: Permutation, name: str = "g") -> None:
    if g.degree != group.degree:
        raise ValueError(f"{name} has degree {g.degree}, group has degree {group.degree}")
    if not group.contains(g):
        raise ValueError(f"{name} is not in the group")


def solubilizer_members(
    group: GroupHandle, g: Permutation, ceiling: int = DEFAULT_SOLUBILIZER_CEILING, reduce: bool = True
) -> set[Permutation]:
    """All ``y`` in ``group`` with ``<g, y>`` soluble.

    With ``reduce``, one verdict is shared across each orbit of the
    centraliser of ``g`` acting by conjugation, since ``<g, y^c>`` is then
    conjugate to ``<g, y>``.
    """
    _check_member(group, g)
    order = group.order()
    if order > ceiling:
        raise ValueError(f"|G| = {order} exceeds the solubilizer ceiling {ceiling}")
    n = group.degree
    gt = g.images
    elements = list(group.bsgs.elements())
    centraliser = [c for c in elements if _mul(gt, c) == _mul(c, gt)] if reduce else []
    memo: dict[tuple, bool] = {}
    members = set()
    for y in elements:
        soluble = memo.get(y)
        if soluble is None:
            soluble = not pair_verdict(gt, y, n)[0]
            memo[y] = soluble
            for c in centraliser:
                memo[_conj(y, c)] = soluble
        if soluble:
            members.add(Permutation(y, check=False))
    return members


def solubilizer_set(
    group: GroupHandle, g: Permutation, ceiling: int = DEFAULT_SOLUBILIZER_CEILING, reduce: bool = True
) -> SolubilizerReport:
    members = solubilizer_members(group, g, ceiling, reduce)
    return SolubilizerReport(group.order(), g, len(members))


def _generators_in(elements, target: GroupHandle) -> bool:
    return all(target.bsgs.contains(e) for e in elements)


def _derived_condition(upper: GroupHandle, lower: GroupHandle) -> bool:
    """``[N_i, N_i] <= N_{i+1}``; generator commutators suffice as N_{i+1} is normal."""
    gens = upper.gen_tuples
    return _generators_in((_comm(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]), lower)


def _centraliser_condition(upper: GroupHandle, lower: GroupHandle, x: Permutation) -> bool:
    """``[N_i, x] <= N_{i+1}``, checked on generators of N_i."""
    return _generators_in((_comm(h, x.images) for h in upper.gen_tuples), lower)


@dataclass
class CcentResult:
    outcome: str
    failed_step: int | None
    step_flags: list[dict] = field(default_factory=list)

    @property
    def hypothesis_holds(self) -> bool:
        return self.outcome == "hypothesis_holds_and_soluble"


def step_flags(chain: NormalChain, x: Permutation) -> list[dict]:
    flags = []
    for i in range(chain.length):
        upper, lower = chain.subgroups[i], chain.subgroups[i + 1]
        flags.append({
            "derived": _derived_condition(upper, lower),
            "centralizer": _centraliser_condition(upper, lower, x),
        })
    return flags


def ccent_check(chain: NormalChain, x: Permutation, y: Permutation) -> CcentResult:
    """Check the chain condition for ``G = <x, y>``; if it holds, G must be soluble."""
    ambient = chain.ambient
    generated = GroupHandle([x, y])
    if not generated.is_subgroup_of(ambient) or generated.order() != ambient.order():
        raise ValueError("<x, y> is not the ambient group of the chain")
    chain.validate()
    flags = step_flags(chain, x)
    chain.step_flags = flags
    for i, f in enumerate(flags):
        if not (f["derived"] or f["centralizer"]):
            return CcentResult("hypothesis_fails", i, flags)
    if not is_soluble(ambient).soluble:
        raise AssertionError("chain condition holds but the group is insoluble")
    return CcentResult("hypothesis_holds_and_soluble", None, flags)


def t_centralizer_count(series: NormalChain, g: Permutation) -> int:
    """Non-abelian factors N_i/N_{i+1} of the series not centralised by ``g``."""
    _check_member(series.ambient, g)
    t = 0
    for i in range(series.length):
        upper, lower = series.subgroups[i], series.subgroups[i + 1]
        if not _derived_condition(upper, lower) and not _centraliser_condition(upper, lower, g):
            t += 1
    return t


@dataclass
class CrucialResult:
    ratio: Fraction
    bound: Fraction
    t: int
    eta_tilde: Fraction
    report: SolubilizerReport

    @property
    def holds(self) -> bool:
        return self.ratio <= self.bound

    def to_json(self) -> dict:
        return {
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "bound": f"{self.bound.numerator}/{self.bound.denominator}",
            "t": self.t,
            "eta_tilde": f"{self.eta_tilde.numerator}/{self.eta_tilde.denominator}",
            "holds": self.holds,
            "solubilizer": self.report.to_json(),
        }


def crucial_bound_check(
    group: GroupHandle,
    g: Permutation,
    series: NormalChain,
    eta: Fraction,
    ceiling: int = DEFAULT_SOLUBILIZER_CEILING,
) -> CrucialResult:
    """Compare |S_G(g)|/|G| with (1 - min(eta, 53/90))^t."""
    t = t_centralizer_count(series, g)
    eta_tilde = min(Fraction(eta), COLVA_BOUND)
    report = solubilizer_set(group, g, ceiling)
    report.t_bound_used = t
    report.eta_tilde = eta_tilde
    return CrucialResult(report.ratio, (1 - eta_tilde) ** t, t, eta_tilde, report)
