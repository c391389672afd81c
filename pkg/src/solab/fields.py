"""Small finite fields and the affine semilinear group AGammaL(1, q).

Elements of GF(p^t) are encoded as integers ``sum c_i p^i`` whose base-p
digits are the coefficients of a polynomial reduced modulo a fixed monic
irreducible of degree ``t``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .perm import Permutation

MAX_Q = 81


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, t)`` with ``q = p^t``, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    t = 0
    while q % p == 0:
        q //= p
        t += 1
    return (p, t) if q == 1 else None


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``f``; coefficient lists are low degree first."""
    a = a[:]
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return [x % p for x in a[:df]] + [0] * max(0, df - len(a))


def _monic_polys(p: int, t: int):
    """Monic degree-t polynomials in increasing code order."""
    for code in range(p**t):
        coeffs = [(code // p**i) % p for i in range(t)]
        yield coeffs + [1]


def _is_irreducible(f: list[int], p: int) -> bool:
    t = len(f) - 1
    for d in range(1, t // 2 + 1):
        for g in _monic_polys(p, d):
            if not any(_poly_mod(f, g, p)):
                return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, t: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree t over GF(p), low degree first."""
    for f in _monic_polys(p, t):
        if _is_irreducible(f, p):
            return tuple(f)
    raise ValueError(f"no irreducible of degree {t} over GF({p})")


class FiniteField:
    """GF(q) with full addition and multiplication tables."""

    def __init__(self, q: int):
        pt = prime_power(q)
        if pt is None:
            raise ValueError(f"{q} is not a prime power")
        if q > MAX_Q:
            raise ValueError(f"q = {q} exceeds the supported maximum {MAX_Q}")
        self.q = q
        self.p, self.t = pt
        self.modulus = least_irreducible(self.p, self.t)
        p, t = self.p, self.t
        digits = [self.coefficients(x) for x in range(q)]
        self._add = [[self._encode([(a + b) % p for a, b in zip(digits[x], digits[y])]) for y in range(q)]
                     for x in range(q)]
        self._neg = [self._encode([(-a) % p for a in digits[x]]) for x in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        f = list(self.modulus)
        for x in range(q):
            for y in range(x, q):
                prod = [0] * (2 * t - 1)
                for i, a in enumerate(digits[x]):
                    if a:
                        for j, b in enumerate(digits[y]):
                            prod[i + j] += a * b
                v = self._encode(_poly_mod(prod, f, p) if t > 1 else [prod[0] % p])
                self._mul[x][y] = self._mul[y][x] = v
        self._inv = [0] * q
        for x in range(1, q):
            self._inv[x] = self._mul[x].index(1)
        self._frob = [list(range(q))]
        for _ in range(1, t):
            prev = self._frob[-1]
            self._frob.append([self.power(prev[x], p) for x in range(q)])

    def coefficients(self, x: int) -> list[int]:
        return [(x // self.p**i) % self.p for i in range(self.t)]

    def _encode(self, coeffs) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def sub(self, x: int, y: int) -> int:
        return self._add[x][self._neg[y]]

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[x]

    def power(self, x: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._mul[result][x]
            x = self._mul[x][x]
            k >>= 1
        return result

    def frobenius(self, x: int, e: int) -> int:
        """``x^(p^e)``."""
        return self._frob[e % self.t][x]

    def multiplicative_order(self, x: int) -> int:
        k, y = 1, x
        while y != 1:
            y = self._mul[y][x]
            k += 1
        return k

    def has_generator(self) -> bool:
        """Some element has multiplicative order q - 1."""
        return any(self.multiplicative_order(x) == self.q - 1 for x in range(1, self.q))


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    return FiniteField(q)


@dataclass(frozen=True)
class SemilinearMap:
    """``x -> x^(p^frob) * mult + shift`` on GF(q)."""

    q: int
    frob: int
    mult: int
    shift: int

    def __post_init__(self):
        F = field(self.q)
        if not 0 <= self.frob < F.t:
            raise ValueError(f"frob must lie in [0, {F.t})")
        if not 0 < self.mult < self.q:
            raise ValueError("mult must be a nonzero field element")
        if not 0 <= self.shift < self.q:
            raise ValueError("shift must be a field element")

    @property
    def field(self) -> FiniteField:
        return field(self.q)

    def __call__(self, x: int) -> int:
        F = self.field
        return F.add(F.mul(F.frobenius(x, self.frob), self.mult), self.shift)

    def is_identity(self) -> bool:
        return self.frob == 0 and self.mult == 1 and self.shift == 0

    def then(self, other: SemilinearMap) -> SemilinearMap:
        """Apply ``self`` first, then ``other``."""
        if other.q != self.q:
            raise ValueError("maps live on different fields")
        F = self.field
        e2 = other.frob
        mult = F.mul(F.frobenius(self.mult, e2), other.mult)
        shift = F.add(F.mul(F.frobenius(self.shift, e2), other.mult), other.shift)
        return SemilinearMap(self.q, (self.frob + e2) % F.t, mult, shift)

    def as_permutation(self) -> Permutation:
        return Permutation([self(x) for x in range(self.q)])


def semilinear_maps(q: int):
    F = field(q)
    for e, a, b in product(range(F.t), range(1, q), range(q)):
        yield SemilinearMap(q, e, a, b)


def agammal_fixed_points(g: SemilinearMap, q: int | None = None) -> int:
    """Number of x in GF(q) with g(x) = x, by evaluating g everywhere."""
    if q is not None and q != g.q:
        raise ValueError("map is defined over a different field")
    return sum(g(x) == x for x in range(g.q))


def fixed_point_profile(q: int) -> dict[int, int]:
    """Largest fixed-point count over nontrivial maps, per Frobenius exponent.

    For fixed ``(e, a)`` the map with shift ``b`` fixes exactly the x with
    ``x - a x^(p^e) = b``, so the counts for all b are the multiplicities of
    the values of ``x - a x^(p^e)``.
    """
    F = field(q)
    best: dict[int, int] = {}
    for e in range(F.t):
        top = 0
        for a in range(1, q):
            values = Counter(F.sub(x, F.mul(a, F.frobenius(x, e))) for x in range(q))
            for b, count in values.items():
                if e == 0 and a == 1 and b == 0:
                    continue
                top = max(top, count)
        best[e] = top
    return best


@dataclass(frozen=True)
class FixedPointRow:
    q: int
    max_fix: int
    max_fix_affine: int

    @property
    def sqrt_q(self) -> float:
        return self.q**0.5

    @property
    def passed(self) -> bool:
        return self.max_fix * self.max_fix <= self.q

    def csv_row(self) -> list:
        return [self.q, self.max_fix, f"{self.sqrt_q:.6f}", "pass" if self.passed else "FAIL"]


def fpagl_row(q: int) -> FixedPointRow:
    profile = fixed_point_profile(q)
    return FixedPointRow(q, max(profile.values()), profile[0])


def fpagl_check(q: int) -> bool:
    """Every nontrivial element of AGammaL(1, q) fixes at most sqrt(q) points."""
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    return fpagl_row(q).passed


def prime_powers(limit: int = MAX_Q) -> list[int]:
    return [q for q in range(2, limit + 1) if prime_power(q) is not None]

