"""Verification reports: each check records expected and actual values."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import BoundExceeded
from .gdb_graph import count_gdb_words, enumerate_gdb_words
from .gfp_algebra import (count_normal_elements, enumerate_invertible_necklaces, is_power_of,
                          verify_invertibility_dichotomy)
from .snf_sandpile import count_gdb_words_prime
from .words import enumerate_necklaces

# OEIS A027362, A192513 (indexed from n = 2) and A003473, A003474 (from n = 1)
KNOWN_DBW = {
    2: [1, 1, 2, 3, 4, 7, 16, 21, 48, 93],
    3: [4, 24, 64, 512, 1728, 13312, 32768, 373248, 1310720, 10903552],
}
KNOWN_PHI = {
    2: [1, 2, 3, 8, 15, 24, 49, 128, 189, 480, 1023, 1536],
    3: [1, 4, 18, 32, 160, 324, 1456, 2048, 13122, 25600, 117128, 209952],
}


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual,
                "pass": self.passed}


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, expected, actual) -> Check:
        c = Check(name, expected, actual)
        self.checks.append(c)
        return c

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "overall": self.overall}


def verify_tables(max_n: int = 12, bound: int | None = None) -> VerificationReport:
    """Known counting sequences against the formula path and, within bound, brute force."""
    rep = VerificationReport()
    for k, values in KNOWN_DBW.items():
        for n, known in zip(range(2, 12), values):
            if n > max_n:
                break
            rep.add(f"DBW_{k}({k * n}) formula", known, count_gdb_words(k, k * n))
            try:
                found = len(enumerate_gdb_words(k, k * n, bound))
            except BoundExceeded:
                continue
            rep.add(f"DBW_{k}({k * n}) enumeration", known, found)
    for p, values in KNOWN_PHI.items():
        for n, known in zip(range(1, 13), values):
            if n > max_n:
                break
            phi = count_normal_elements(p, n)
            rep.add(f"Phi_{p}({n}) formula", known, phi)
            try:
                brute = n * len(enumerate_invertible_necklaces(p, n, bound))
            except BoundExceeded:
                continue
            rep.add(f"Phi_{p}({n}) = n * invertible necklaces", phi, brute)
    return rep


def verify_bijection(p: int, n: int, bound: int | None = None) -> VerificationReport:
    """Counts of generalized de Bruijn words of length pn against invertible necklaces.

    For p = 2 the two counts are equal; when n is a power of two the
    odd-weight necklaces of length n are counted as well.
    """
    rep = VerificationReport()
    gdb = len(enumerate_gdb_words(p, p * n, bound))
    inv = len(enumerate_invertible_necklaces(p, n, bound))
    rep.add(f"gdb words of length {p * n} (enumerated) vs formula", count_gdb_words_prime(p, p * n), gdb)
    if p == 2:
        rep.add(f"gdb words of length {2 * n} = invertible necklaces of length {n}", gdb, inv)
        if is_power_of(2, n):
            odd = sum(1 for neck in enumerate_necklaces(2, n, bound=bound) if neck.weight % 2)
            rep.add(f"odd-weight necklaces of length {n} = invertible necklaces", inv, odd)
    rep.add(f"n * invertible necklaces = Phi_{p}({n})", count_normal_elements(p, n), n * inv)
    return rep


def verify_dichotomy(p: int, max_n: int, bound: int | None = None) -> VerificationReport:
    rep = VerificationReport()
    for n in range(1, max_n + 1):
        res = verify_invertibility_dichotomy(p, n, bound)
        rep.add(f"n={n}: all nonzero-weight aperiodic necklaces invertible", res.predicted,
                res.all_invertible)
    return rep
