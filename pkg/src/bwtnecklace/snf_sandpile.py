"""Smith normal form, finite abelian groups, sandpile and Reutenauer group structure."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import factorial, gcd, prod
from typing import Iterable

from .errors import DivisibilityError, NotPrime, NotStronglyConnected
from .gdb_graph import GdbGraph, IntMatrix, laplacian
from .words import factorize, is_prime


@dataclass(frozen=True)
class SnfResult:
    invariant_factors: tuple[int, ...]

    @property
    def nonzero(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d)


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_decomposition(m: IntMatrix):
    """Return ``(D, U, V)`` with ``U @ M @ V == D``, U and V unimodular.

    Elimination with Bezout row/column operations over Python integers.
    The diagonal of D is non-negative and forms a divisibility chain with
    zeros at the end.
    """
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)

    def row_combine(i, j, p, q, r, s):
        # (row_i, row_j) <- (p*row_i + q*row_j, r*row_i + s*row_j)
        for mat in (a, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [p * x + q * y for x, y in zip(ri, rj)]
            mat[j] = [r * x + s * y for x, y in zip(ri, rj)]

    def col_combine(i, j, p, q, r, s):
        for mat in (a, v):
            for row in mat:
                x, y = row[i], row[j]
                row[i] = p * x + q * y
                row[j] = r * x + s * y

    for t in range(min(rows, cols)):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        if pi != t:
            row_combine(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_combine(t, pj, 0, 1, 1, 0)
        while True:
            changed = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    x, y = a[t][t], a[i][t]
                    g, s, r = _xgcd(x, y)
                    row_combine(t, i, s, r, -y // g, x // g)
                    changed = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    x, y = a[t][t], a[t][j]
                    g, s, r = _xgcd(x, y)
                    col_combine(t, j, s, r, -y // g, x // g)
                    changed = True
            if not changed:
                # pivot must divide the rest of the submatrix
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % a[t][t]), None)
                if bad is None:
                    break
                row_combine(t, bad[0], 1, 1, 0, 1)
        if a[t][t] < 0:
            _negate_row(a, u, t)
    return a, u, v


def _negate_row(a, u, t):
    a[t] = [-x for x in a[t]]
    u[t] = [-x for x in u[t]]


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    """g, s, r with s*x + r*y = g, where |g| = gcd(x, y).

    When x divides y this returns (x, 1, 0) so the pivot line is left alone.
    """
    if y % x == 0:
        return x, 1, 0
    s0, s1, r0, r1 = 1, 0, 0, 1
    a, b = x, y
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        r0, r1 = r1, r0 - q * r1
    if a < 0:
        a, s0, r0 = -a, -s0, -r0
    return a, s0, r0


def smith_normal_form(m: IntMatrix) -> SnfResult:
    d, _, _ = smith_normal_decomposition(m)
    return SnfResult(tuple(d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))))


# -- finite abelian groups ----------------------------------------------------

@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group as its invariant-factor chain d_1 | d_2 | ...

    Factors equal to 1 are dropped; the trivial group has no factors.
    """

    invariant_factors: tuple[int, ...] = ()

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> AbelianGroup:
        """Canonicalise a direct sum of cyclic groups via its primary decomposition."""
        by_prime: dict[int, list[int]] = {}
        for m in orders:
            if m < 1:
                raise ValueError(f"cyclic factor of order {m} is not finite")
            for q, e in factorize(m).items():
                by_prime.setdefault(q, []).append(q**e)
        for powers in by_prime.values():
            powers.sort(reverse=True)
        length = max((len(v) for v in by_prime.values()), default=0)
        chain = [prod(v[i] for v in by_prime.values() if i < len(v)) for i in range(length)]
        return cls(tuple(reversed(chain)))

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    def __add__(self, other: AbelianGroup) -> AbelianGroup:
        return AbelianGroup.from_cyclic_orders(self.invariant_factors + other.invariant_factors)

    def element_order_counts(self) -> Counter:
        """Multiset of element orders, by enumerating every element."""
        counts: Counter = Counter()
        for x in product(*(range(d) for d in self.invariant_factors)):
            o = 1
            for xi, d in zip(x, self.invariant_factors):
                ci = d // gcd(xi, d)
                o = o * ci // gcd(o, ci)
            counts[o] += 1
        return counts

    def to_json(self) -> dict:
        return {"factors": list(self.invariant_factors), "order": self.order}

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        parts = []
        for d, c in Counter(self.invariant_factors).items():
            parts.append(f"Z_{d}" if c == 1 else f"Z_{d}^{c}")
        return " + ".join(parts)


def group_order(g: AbelianGroup) -> int:
    return g.order


def groups_isomorphic(a: AbelianGroup, b: AbelianGroup) -> bool:
    return (AbelianGroup.from_cyclic_orders(a.invariant_factors)
            == AbelianGroup.from_cyclic_orders(b.invariant_factors))


def cyclic(*orders: int) -> AbelianGroup:
    return AbelianGroup.from_cyclic_orders(orders)


# -- sandpile and Reutenauer groups -------------------------------------------

def sandpile_group(g: GdbGraph) -> AbelianGroup:
    factors = smith_normal_form(laplacian(g)).invariant_factors
    zeros = factors.count(0)
    if zeros != 1:
        raise NotStronglyConnected(f"Laplacian of DB({g.k},{g.n}) has {zeros} zero invariant factors")
    return AbelianGroup.from_cyclic_orders(d for d in factors if d)


def reutenauer_group_structure(p: int, n: int) -> AbelianGroup:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return sandpile_group(GdbGraph(p, n)) + cyclic(p - 1)


def sandpile_prime_power(p: int, d: int) -> AbelianGroup:
    """Closed form for K(DB(p, p^d)), p prime, d >= 1."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if d < 1:
        raise ValueError("d must be >= 1")
    orders: list[int] = []
    for i in range(1, d):
        orders += [p**i] * (p ** (d - 1 - i) * (p - 1) ** 2)
    orders += [p**d] * (p - 2)
    return AbelianGroup.from_cyclic_orders(orders)


def levine_binary(d: int) -> list[tuple[int, int]]:
    """Terms (2^i, multiplicity 2^(d-1-i)) of K(DB(2, 2^d)) for i = 1..d-1."""
    return [(2**i, 2 ** (d - 1 - i)) for i in range(1, d)]


def count_gdb_words_prime(p: int, length: int) -> int:
    """((p-1)!)^n / (p-1) * Phi_p(n) / n with n = length / p."""
    from .gfp_algebra import count_normal_elements

    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if length % p or length < p:
        raise DivisibilityError(f"{p} does not divide {length}")
    n = length // p
    return factorial(p - 1) ** n * count_normal_elements(p, n) // ((p - 1) * n)
