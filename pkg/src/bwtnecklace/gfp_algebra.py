"""Circulant matrices over GF(p), invertible necklaces and the Reutenauer group.

Invertibility (equivalently, normality of the corresponding field element)
is decided entirely through circulant determinants and ranks; no arithmetic
in GF(p^n) itself is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (DigitOutOfRange, DimensionMismatch, ModulusMismatch,
                     NotInvertible, NotPrime)
from .words import (Necklace, Word, as_necklace, check_bound, divisors, euler_phi,
                    is_prime, iter_necklace_digits)


@dataclass(frozen=True)
class GfpMatrix:
    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r % self.p for r in row) for row in self.rows))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: GfpMatrix) -> GfpMatrix:
        if self.p != other.p:
            raise ModulusMismatch(f"{self.p} != {other.p}")
        cols = list(zip(*other.rows))
        return GfpMatrix(self.p, tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                                      for r in self.rows))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(r, v)) % self.p for r in self.rows)

    def to_json(self) -> dict:
        return {"p": self.p, "rows": [list(r) for r in self.rows]}


def _shifts(digits: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(digits)
    # row i is sigma^i(w), sigma moving the last letter to the front
    return [digits[n - i:] + digits[:n - i] for i in range(n)]


def circulant(w: Word, p: int) -> GfpMatrix:
    if any(d >= p for d in w.digits):
        raise DigitOutOfRange(f"{w} has digits >= {p}")
    return GfpMatrix(p, tuple(_shifts(w.digits)))


def _rank_mod2(rows: Sequence[Sequence[int]]) -> int:
    basis: dict[int, int] = {}
    for row in rows:
        x = 0
        for bit in row:
            x = (x << 1) | (bit & 1)
        while x:
            top = x.bit_length() - 1
            if top not in basis:
                basis[top] = x
                break
            x ^= basis[top]
    return len(basis)


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    if p == 2:
        return _rank_mod2(rows)
    a = [[x % p for x in r] for r in rows]
    if not a:
        return 0
    rank, ncols = 0, len(a[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], p - 2, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def det_mod_p(m: GfpMatrix) -> int:
    """Determinant in GF(p) by elimination with Fermat inverses."""
    p = m.p
    a = [list(r) for r in m.rows]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], p - 2, p)
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv % p
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det % p


def _is_invertible_digits(digits: tuple[int, ...], p: int) -> bool:
    if p == 2:
        return _rank_mod2(_shifts(digits)) == len(digits)
    # forward elimination only, bailing out at the first missing pivot
    a = [list(r) for r in _shifts(digits)]
    n = len(a)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return False
        a[c], a[piv] = a[piv], a[c]
        top = a[c]
        inv = pow(top[c], p - 2, p)
        for r in range(c + 1, n):
            row = a[r]
            if row[c]:
                f = row[c] * inv % p
                a[r] = [(x - f * y) % p for x, y in zip(row, top)]
    return True


def is_invertible_necklace(neck: Necklace | Word, p: int) -> bool:
    neck = as_necklace(neck)
    return det_mod_p(circulant(neck.canonical, p)) != 0


@dataclass(frozen=True, order=True)
class CirculantClass:
    """An element of the Reutenauer group: the circulants of one invertible necklace."""

    p: int
    representative: Necklace

    @classmethod
    def of(cls, w: Necklace | Word | str, p: int) -> CirculantClass:
        if isinstance(w, str):
            w = Necklace.parse(w, p)
        neck = as_necklace(w)
        if neck.k != p:
            neck = Necklace.of(Word(neck.canonical.digits, p))
        if not is_invertible_necklace(neck, p):
            raise NotInvertible(f"{neck} is not invertible over GF({p})")
        return cls(p, neck)

    @classmethod
    def identity(cls, p: int, n: int) -> CirculantClass:
        return cls.of(Word((1,) + (0,) * (n - 1), p), p)

    @property
    def n(self) -> int:
        return self.representative.length

    def matrix(self) -> GfpMatrix:
        return circulant(self.representative.canonical, self.p)

    def __mul__(self, other: CirculantClass) -> CirculantClass:
        return reutenauer_mul(self, other)

    def __str__(self) -> str:
        return str(self.representative)


def _check_compatible(p1: int, n1: int, p2: int, n2: int) -> None:
    if p1 != p2:
        raise ModulusMismatch(f"GF({p1}) vs GF({p2})")
    if n1 != n2:
        raise DimensionMismatch(f"length {n1} vs length {n2}")


def reutenauer_mul(a: CirculantClass, b: CirculantClass) -> CirculantClass:
    _check_compatible(a.p, a.n, b.p, b.n)
    # first row of CM_u . CM_v is u . CM_v
    row = tuple(sum(x * y for x, y in zip(a.representative.canonical.digits, col)) % a.p
                for col in zip(*_shifts(b.representative.canonical.digits)))
    return CirculantClass(a.p, Necklace.of(Word(row, a.p)))


def reutenauer_act(a: CirculantClass, v: Necklace | Word) -> Necklace:
    """Necklace of CM_w . v^T for any representatives w, v."""
    v = as_necklace(v)
    _check_compatible(a.p, a.n, v.k, v.length)
    return Necklace.of(Word(a.matrix().apply(v.canonical.digits), a.p))


def reutenauer_inverse(a: CirculantClass) -> CirculantClass:
    """Inverse element, found as a power: a^(order-1)."""
    e = CirculantClass.identity(a.p, a.n)
    x = a
    prev = e
    while x != e:
        prev = x
        x = x * a
    return prev


def element_order(a: CirculantClass) -> int:
    e = CirculantClass.identity(a.p, a.n)
    x, k = a, 1
    while x != e:
        x = x * a
        k += 1
    return k


def trace_class(a: CirculantClass) -> int:
    return a.representative.weight % a.p


def enumerate_invertible_necklaces(p: int, n: int, bound: int | None = None) -> list[Necklace]:
    _require_prime(p)
    check_bound(p**n, bound)
    return [Necklace(Word(d, p), n) for d, per in iter_necklace_digits(p, n)
            if per == n and _is_invertible_digits(d, p)]


def invertible_classes(p: int, n: int, bound: int | None = None) -> list[CirculantClass]:
    return [CirculantClass(p, neck) for neck in enumerate_invertible_necklaces(p, n, bound)]


def multiplicative_order(a: int, m: int) -> int:
    """Least e >= 1 with a^e = 1 mod m; requires gcd(a, m) = 1."""
    if m == 1:
        return 1
    a %= m
    x, e = a, 1
    while x != 1:
        x = x * a % m
        e += 1
        if e > m:
            raise ValueError(f"{a} is not a unit modulo {m}")
    return e


def largest_power_dividing(p: int, n: int) -> int:
    q = 1
    while n % (q * p) == 0:
        q *= p
    return q


def count_normal_elements(p: int, n: int) -> int:
    """Number of normal elements of GF(p^n) over GF(p).

    With n = p^e * m, gcd(m, p) = 1, X^n - 1 = (X^m - 1)^(p^e) and the
    cyclotomic factor for d | m splits into phi(d)/ord_d(p) irreducibles of
    degree ord_d(p), ord_d(p) being the multiplicative order of p mod d.
    """
    _require_prime(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n // largest_power_dividing(p, n)
    total = p ** (n - m)
    for d in divisors(m):
        o = multiplicative_order(p, d)
        total *= (p**o - 1) ** (euler_phi(d) // o)
    return total


def is_p_rooted(q: int, p: int) -> bool:
    """True iff p generates the multiplicative group of GF(q)."""
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if p % q == 0:
        return False
    return multiplicative_order(p, q) == q - 1


def is_power_of(p: int, n: int) -> bool:
    return largest_power_dividing(p, n) == n


def dichotomy_predicted(p: int, n: int) -> bool:
    """n is a power of p (including 1) or a p-rooted prime."""
    return is_power_of(p, n) or (is_prime(n) and is_p_rooted(n, p))


@dataclass(frozen=True)
class DichotomyResult:
    p: int
    n: int
    counterexample: Necklace | None
    predicted: bool

    @property
    def all_invertible(self) -> bool:
        return self.counterexample is None

    @property
    def agrees(self) -> bool:
        return self.all_invertible == self.predicted


def verify_invertibility_dichotomy(p: int, n: int, bound: int | None = None) -> DichotomyResult:
    """Search for an aperiodic necklace of nonzero weight mod p that is singular."""
    _require_prime(p)
    check_bound(p**n, bound)
    for d, per in iter_necklace_digits(p, n):
        if per == n and sum(d) % p and not _is_invertible_digits(d, p):
            return DichotomyResult(p, n, Necklace(Word(d, p), n), dichotomy_predicted(p, n))
    return DichotomyResult(p, n, None, dichotomy_predicted(p, n))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def unique_combination_check(w: Word, p: int) -> bool:
    """Every length-n word is exactly one GF(p) combination of the shifts of w.

    Exhaustive over the p^n coefficient vectors; meant for small n only.
    """
    from itertools import product

    rows = _shifts(w.digits)
    n = len(rows)
    seen = set()
    for coeffs in product(range(p), repeat=n):
        v = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(n))
        seen.add(v)
    return len(seen) == p**n

