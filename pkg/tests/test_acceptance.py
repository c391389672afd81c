"""Acceptance criteria 1-14, one test each.

Each test records a ``criterion N: PASS|FAIL`` line (shown in the terminal
summary) before asserting, so a failing criterion still reports its detail.
Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import json
import time
from fractions import Fraction
from math import isqrt

from conftest import ACCEPTANCE_LINES
from oracles import pins_naive
from solab.cli import main, report_body
from solab.constructions import (
    NormalChain,
    alternating_group,
    conjugacy_class_representative,
    construct,
    integer_partitions,
)
from solab.fields import fpagl_row, prime_powers
from solab.group import GroupHandle
from solab.insolubility import (
    COLVA_BOUND,
    alt_coset,
    eta_exact,
    random_wreath_pairs,
    two_coset_generation_check,
    wreath_pins_montecarlo,
)
from solab.combinatorics import common_fixed_points, nontransitivity_bound, nontransitivity_exact, nontransitivity_rate
from solab.numtheory import b_empirical, totient_ratio_count
from solab.perm import Permutation
from solab.solubilizer import ccent_check, crucial_bound_check
from solab.verify import (
    verify_fact1,
    verify_fact2,
    verify_facile,
    verify_factorial_identity,
    verify_iota,
    verify_kappa,
)


def record(number, ok, detail, started):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  ({time.perf_counter() - started:.1f}s)  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _checks(results):
    failures = [f"{r.name}: {f}" for r in results for f in r.failures]
    return not failures, failures


def test_criterion_01_factorial_identity():
    t = time.perf_counter()
    res = verify_factorial_identity(30)
    record(1, res.passed and res.checked == 465, f"{res.checked} pairs (n, a) with 0 <= a < n <= 30", t)


def test_criterion_02_iota_count():
    t = time.perf_counter()
    ok, failures = _checks(verify_iota(8))
    record(2, ok, "all |Omega| <= 8" if ok else failures[:5], t)


def test_criterion_03_kappa_decomposition():
    t = time.perf_counter()
    ok, failures = _checks(verify_kappa(7))
    record(3, ok, "all nested (A, B), |Omega| <= 7" if ok else failures[:5], t)


def test_criterion_04_facile_count():
    t = time.perf_counter()
    closed, bound = verify_facile(9)
    ok = closed.passed and bound.passed
    detail = (f"closed form {'matches' if closed.passed else 'differs'} in {closed.checked} cases; "
              f"lower bound fails in {len(bound.failures)} of {bound.checked}: {bound.failures}")
    record(4, ok, detail, t)


def test_criterion_05_babai_hayes_facts():
    t = time.perf_counter()
    fact1 = verify_fact1(7)
    fact2 = verify_fact2(200, 7, seed=0)
    ok = fact1.passed and fact2.passed and fact2.checked == 200
    record(5, ok, f"fact 1 over {fact1.checked} (Omega, R); fact 2 on {fact2.checked} random instances", t)


def test_criterion_06_agammal_fixed_points():
    t = time.perf_counter()
    rows = [fpagl_row(q) for q in prime_powers(81)]
    bad = [r.q for r in rows if r.max_fix * r.max_fix > r.q or r.max_fix > isqrt(r.q)]
    affine = [r.q for r in rows if r.max_fix_affine > 1]
    record(6, not bad and not affine and len(rows) == 32, f"{len(rows)} prime powers q <= 81; violations {bad + affine}", t)


def test_criterion_07_eta_insolubility():
    t = time.perf_counter()
    e5, e7 = eta_exact(5), eta_exact(7)
    ok = e5.value > 0 and e7.value > 0
    # independent oracle for n = 5: no BSGS, no memo, every pair closed from scratch
    naive = []
    for part in integer_partitions(5):
        if part == (1,) * 5:
            continue
        a = conjugacy_class_representative(part).images
        for parity, rep in (("even", tuple(range(5))), ("odd", (1, 0, 2, 3, 4))):
            p_ins, q = pins_naive(a, rep, 5)
            naive.append(p_ins)
            ok &= p_ins >= q > 0
    ok &= min(naive) == e5.value
    for res in (e5, e7):
        for row in res.rows:
            ok &= Fraction(row["p_ins"]) >= Fraction(row["q_value"]) > 0
    record(7, ok, f"eta(5) = {e5.value} (oracle {min(naive)}), eta(7) = {e7.value}; P_ins >= Q > 0 on all rows", t)


def test_criterion_08_riduco_evidence():
    t = time.perf_counter()
    s = alternating_group(5)
    eta_tilde = min(eta_exact(5).value, COLVA_BOUND)
    worst = None
    ok = True
    pairs = random_wreath_pairs(5, 2, 20, seed=0)
    for a, b, sample_seed in pairs:
        assert not a.is_identity()
        est = wreath_pins_montecarlo(a, b, s, 2, 10_000, sample_seed).p_ins
        margin = est.estimate + 3 * est.half_width - float(eta_tilde)
        ok &= margin >= 0
        worst = margin if worst is None else min(worst, margin)
    record(8, ok and len(pairs) == 20, f"20 pairs x 10^4 samples; eta_tilde = {eta_tilde}; worst margin {worst:.4f}", t)


def test_criterion_09_two_coset_generation():
    t = time.perf_counter()
    parts = integer_partitions(5)
    values = {}
    for p1 in parts:
        for p2 in parts:
            values[p1, p2] = two_coset_generation_check(
                conjugacy_class_representative(p1), conjugacy_class_representative(p2), 5)
    low = min(values.values())
    record(9, len(values) == 49 and low >= COLVA_BOUND, f"minimum over 49 class pairs {low} vs 53/90", t)


def test_criterion_10_crucial():
    t = time.perf_counter()
    eta = eta_exact(5).value
    a5 = construct("alt5")
    r1 = crucial_bound_check(a5.group, Permutation.parse("(1 2 3 4 5)", 5), a5.series, eta)
    sw = construct("alt5^2:swap")
    r2 = crucial_bound_check(sw.group, sw.named_elements["swap"], sw.series, eta)
    ok = r1.holds and r2.holds and r1.t == 1 and r2.t == 1 and sw.group.order() == 7200
    record(10, ok, f"Alt(5): {r1.ratio} <= {r1.bound}; swap extension: {r2.ratio} <= {r2.bound}", t)


def test_criterion_11_ccent():
    t = time.perf_counter()
    P = Permutation.parse
    s4 = GroupHandle([P("(1 2)", 4), P("(1 2 3 4)", 4)])
    v4 = GroupHandle([P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)])
    one4, one5 = GroupHandle([Permutation.identity(4)]), GroupHandle([Permutation.identity(5)])
    r1 = ccent_check(NormalChain(s4, [s4, alternating_group(4), v4, one4]), P("(1 2)", 4), P("(1 2 3 4)", 4))
    a5 = alternating_group(5)
    r2 = ccent_check(NormalChain(a5, [a5, one5]), P("(1 2 3)", 5), P("(1 2 3 4 5)", 5))
    ok = r1.hypothesis_holds and r2.outcome == "hypothesis_fails" and r2.failed_step == 0
    record(11, ok, f"Sym(4): {r1.outcome}; Alt(5): {r2.outcome} at step {r2.failed_step}", t)


def test_criterion_12_nontransitivity():
    t = time.perf_counter()
    g50 = [Permutation.parse("(1 2)", 50)]
    f50 = common_fixed_points(g50)
    est = nontransitivity_rate(g50, Permutation.identity(50), 100_000, seed=0)
    b50 = nontransitivity_bound(50, f50)
    g6 = [Permutation.parse("(1 2)", 6)]
    b6 = nontransitivity_bound(6, common_fixed_points(g6))
    exact6 = max(nontransitivity_exact(g6, Permutation.identity(6)),
                 nontransitivity_exact(g6, Permutation.parse("(1 2)", 6)))
    ok = est.estimate <= b50 and exact6 < b6
    record(12, ok, f"n=50: {est.estimate:.5f} <= {float(b50):.3f}; n=6 exact {exact6} < {b6}", t)


def test_criterion_13_totient_distribution():
    t = time.perf_counter()
    small = totient_ratio_count(10**5, 0.5, 0.3) / 10**5
    large = totient_ratio_count(10**6, 0.5, 0.3) / 10**6
    grid = [1, 1.01, 1.1, 1.25, 1.5, 2, 2.5, 3, 4, 5, 6, 8]
    values = [b_empirical(x, 10**6) for x in grid]
    monotone = all(a >= b for a, b in zip(values, values[1:]))
    ok = abs(small - large) <= 0.1 * large and monotone
    record(13, ok, f"count/n {small:.5f} at 1e5, {large:.5f} at 1e6; B(t) non-increasing on {len(grid)} points", t)


MC_COMMANDS = [
    ["pins", "--n", "7", "--a", "(1 2 3)", "--samples", "3000", "--seed", "21"],
    ["pins", "--n", "6", "--a", "(1 2)(3 4)", "--coset", "odd", "--samples", "3000", "--seed", "22"],
    ["wreath", "--s", "alt5", "--m", "2", "--pairs", "3", "--samples", "1500", "--seed", "23",
     "--eta", "from-eta-exact:5"],
    ["lambda-rate", "--n", "40", "--delta1", "0.6", "--delta2", "0.3", "--samples", "3000", "--seed", "24"],
    ["nontransitivity", "--n", "30", "--g", "(1 2)", "--samples", "3000", "--seed", "25"],
    ["verify", "fact2", "--instances", "50", "--seed", "26"],
]


def test_criterion_14_determinism(capsys, tmp_path):
    t = time.perf_counter()
    ok = True
    for argv in MC_COMMANDS:
        main(argv + ["--workers", "1"])
        first = capsys.readouterr().out
        main(argv + ["--workers", "2"])
        second = capsys.readouterr().out
        same = json.dumps(report_body(json.loads(first))) == json.dumps(report_body(json.loads(second)))
        saved = tmp_path / "r.json"
        saved.write_text(first)
        replay_code = main(["replay", str(saved), "--check", "--workers", "2"])
        capsys.readouterr()
        ok &= same and replay_code == 0
    record(14, ok, f"{len(MC_COMMANDS)} Monte Carlo commands, workers 1 vs 2 and replay --check", t)
