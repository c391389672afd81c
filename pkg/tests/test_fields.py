from itertools import product
from math import isqrt

import pytest
from sympy import GF
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from solab.fields import (
    SemilinearMap,
    agammal_fixed_points,
    field,
    fixed_point_profile,
    fpagl_check,
    fpagl_row,
    least_irreducible,
    prime_power,
    prime_powers,
    semilinear_maps,
)

QS = prime_powers(81)


def test_prime_powers_list():
    assert QS == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47,
                  49, 53, 59, 61, 64, 67, 71, 73, 79, 81]
    assert prime_power(6) is None and prime_power(1) is None
    assert prime_power(64) == (2, 6)


def _sympy_mul(F, x, y):
    """Product via sympy's GF(p)[X] arithmetic, as an independent oracle."""
    dom = GF(F.p)
    a = list(reversed(F.coefficients(x)))
    b = list(reversed(F.coefficients(y)))
    f = list(reversed(F.modulus))
    r = gf_rem(gf_mul(a, b, F.p, dom), f, F.p, dom)
    coeffs = [int(c) % F.p for c in reversed(r)]
    return F._encode(coeffs + [0] * (F.t - len(coeffs)))


@pytest.mark.parametrize("q", [q for q in QS if prime_power(q)[1] > 1])
def test_modulus_irreducible_and_least(q):
    F = field(q)
    f = list(reversed(F.modulus))
    assert f[0] == 1 and len(f) == F.t + 1
    assert gf_irreducible_p(f, F.p, GF(F.p))
    # no smaller monic irreducible, reading coefficients as base-p digits with x^0 least significant
    for code in range(F.p**F.t):
        cand = tuple(code // F.p**i % F.p for i in range(F.t)) + (1,)
        if cand == F.modulus:
            break
        if gf_irreducible_p(list(reversed(cand)), F.p, GF(F.p)):
            assert False, f"{cand} is a smaller irreducible"


@pytest.mark.parametrize("q", QS)
def test_field_axioms(q):
    F = field(q)
    els = list(F.elements)
    for x in els:
        assert F.add(x, 0) == x and F.mul(x, 1) == x and F.mul(x, 0) == 0
        assert F.sub(x, x) == 0
        if x:
            assert F.mul(x, F.inv(x)) == 1
    for x, y in product(els, repeat=2):
        assert F.add(x, y) == F.add(y, x)
        assert F.mul(x, y) == F.mul(y, x)
    step = max(1, q // 9)
    for x, y, z in product(els[::step], repeat=3):
        assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.has_generator()
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 49])
def test_multiplication_matches_sympy(q):
    F = field(q)
    for x, y in product(F.elements, repeat=2):
        assert F.mul(x, y) == _sympy_mul(F, x, y)


@pytest.mark.parametrize("q", [8, 9, 27, 64, 81])
def test_frobenius_is_additive_automorphism(q):
    F = field(q)
    for e in range(F.t):
        images = [F.frobenius(x, e) for x in F.elements]
        assert sorted(images) == list(F.elements)
        for x, y in product(range(0, q, 3), repeat=2):
            assert F.frobenius(F.add(x, y), e) == F.add(F.frobenius(x, e), F.frobenius(y, e))
            assert F.frobenius(F.mul(x, y), e) == F.mul(F.frobenius(x, e), F.frobenius(y, e))


def test_field_errors():
    with pytest.raises(ValueError):
        field(12)
    with pytest.raises(ValueError):
        field(121)
    with pytest.raises(ValueError):
        SemilinearMap(9, 2, 1, 0)
    with pytest.raises(ValueError):
        SemilinearMap(9, 0, 0, 0)
    with pytest.raises(ValueError):
        fpagl_check(10)


def test_fixed_point_examples():
    for q in (5, 9, 16):
        for b in range(1, q):
            assert agammal_fixed_points(SemilinearMap(q, 0, 1, b)) == 0
        for a in range(2, q):
            assert agammal_fixed_points(SemilinearMap(q, 0, a, 0)) == 1
    nine = max(agammal_fixed_points(g) for g in semilinear_maps(9) if g.frob == 1)
    assert nine == 3
    with pytest.raises(ValueError):
        agammal_fixed_points(SemilinearMap(9, 0, 1, 0), q=4)


@pytest.mark.parametrize("q", QS)
def test_profile_matches_exhaustive_evaluation(q):
    F = field(q)
    best = {e: 0 for e in range(F.t)}
    for g in semilinear_maps(q):
        if not g.is_identity():
            best[g.frob] = max(best[g.frob], agammal_fixed_points(g))
    assert fixed_point_profile(q) == best


@pytest.mark.parametrize("q", QS)
def test_fixed_point_bound_and_affine_dichotomy(q):
    row = fpagl_row(q)
    assert row.max_fix * row.max_fix <= q
    assert row.max_fix <= isqrt(q)
    assert row.max_fix_affine == (0 if q == 2 else 1)
    assert fpagl_check(q)


def test_fpagl_named_cases():
    assert fpagl_check(4) and fpagl_check(25)
    assert len(list(semilinear_maps(4))) == 24
    for q in (3, 5, 7, 11, 13):
        assert fpagl_row(q).max_fix == 1
    # x + 1 is the only nontrivial map over GF(2), and it is fixed-point free
    assert fpagl_row(2).max_fix == 0


@pytest.mark.parametrize("q", [4, 8, 9])
def test_composition_closed_and_associative(q):
    maps = list(semilinear_maps(q))
    perms = {g: g.as_permutation() for g in maps}
    for g, h in product(maps, repeat=2):
        gh = g.then(h)
        assert perms[g] * perms[h] == gh.as_permutation()
    sample = maps[:: max(1, len(maps) // 12)]
    for f, g, h in product(sample, repeat=3):
        assert f.then(g).then(h) == f.then(g.then(h))
    ident = [g for g in maps if g.is_identity()]
    assert len(ident) == 1 and ident[0].as_permutation().is_identity()
