"""Burrows-Wheeler transform of necklaces and its inversion."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import NotABwtImage, NotACycle, NotBalanced
from .words import Necklace, Word, as_necklace, divisors, is_app


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., n-1}`` stored in one-line notation."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", tuple(self.one_line))
        if sorted(self.one_line) != list(range(len(self.one_line))):
            raise ValueError(f"{self.one_line} is not a permutation")

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int | None = None) -> Permutation:
        if n is None:
            n = sum(len(c) for c in cycles)
        img = list(range(n))
        for c in cycles:
            for a, b in zip(c, list(c[1:]) + [c[0]]):
                img[a] = b
        return cls(tuple(img))

    def __len__(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.one_line)
        for i, j in enumerate(self.one_line):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles, each starting at its least element, ordered by that element."""
        seen = [False] * len(self.one_line)
        out = []
        for start in range(len(self.one_line)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.one_line[i]
            out.append(tuple(cyc))
        return out

    def is_single_cycle(self) -> bool:
        return _cycle_from_zero(self.one_line) is not None

    def cycle(self) -> tuple[int, ...]:
        """The cycle through 0, provided the permutation is a single n-cycle."""
        cyc = _cycle_from_zero(self.one_line)
        if cyc is None:
            raise NotACycle(f"permutation has {len(self.cycles())} cycles")
        return cyc

    def descents(self) -> int:
        return sum(self.one_line[i + 1] < self.one_line[i] for i in range(len(self.one_line) - 1))


def _cycle_from_zero(img: Sequence[int]) -> tuple[int, ...] | None:
    n = len(img)
    cyc = [0]
    i = img[0]
    while i != 0:
        cyc.append(i)
        if len(cyc) > n:
            return None
        i = img[i]
    return tuple(cyc) if len(cyc) == n else None


@dataclass(frozen=True)
class BwtMatrix:
    rows: tuple[Word, ...]

    @property
    def first_column(self) -> Word:
        return Word(tuple(r[0] for r in self.rows), self.rows[0].k)

    @property
    def last_column(self) -> Word:
        return Word(tuple(r[-1] for r in self.rows), self.rows[0].k)


def bwt_matrix(neck: Necklace | Word) -> BwtMatrix:
    """Rotations sorted ascending; periodic necklaces keep repeated rows."""
    neck = as_necklace(neck)
    return BwtMatrix(tuple(sorted(neck.rotations())))


def bwt(neck: Necklace | Word) -> Word:
    w = as_necklace(neck).canonical
    n = len(w)
    d = w.digits
    dd = d + d
    order = sorted(range(n), key=lambda r: dd[r:r + n])
    return Word(tuple(dd[r + n - 1] for r in order), w.k)


def inverse_standard_one_line(digits: Sequence[int]) -> list[int]:
    """Positions of 0s left to right, then positions of 1s, and so on."""
    return sorted(range(len(digits)), key=digits.__getitem__)


def standard_permutation(u: Word) -> Permutation:
    """pi_u(i) < pi_u(j) iff u_i < u_j, or u_i = u_j and i < j."""
    return Permutation(tuple(inverse_standard_one_line(u.digits))).inverse()


def inverse_standard_permutation(u: Word) -> Permutation:
    return Permutation(tuple(inverse_standard_one_line(u.digits)))


def inverse_standard_permutation_cycle(u: Word) -> tuple[int, ...]:
    cyc = _cycle_from_zero(inverse_standard_one_line(u.digits))
    if cyc is None:
        raise NotACycle(f"inverse standard permutation of {u} is not a single cycle")
    return cyc


class ImageKind(enum.Enum):
    APERIODIC = "aperiodic"
    POWER = "power"
    NONE = "none"


@dataclass(frozen=True)
class BwtImage:
    """Classification of a word as a BWT image.

    For ``POWER`` the word is ``root`` with every letter repeated ``power``
    times, and ``root`` is the BWT of an aperiodic necklace.
    """

    kind: ImageKind
    power: int = 1
    root: Word | None = None

    def __bool__(self) -> bool:
        return self.kind is not ImageKind.NONE


def is_bwt_image(u: Word) -> BwtImage:
    if _cycle_from_zero(inverse_standard_one_line(u.digits)) is not None:
        return BwtImage(ImageKind.APERIODIC, 1, u)
    n = len(u)
    d = u.digits
    for c in divisors(n)[1:]:
        blocks = [d[i:i + c] for i in range(0, n, c)]
        if any(len(set(b)) != 1 for b in blocks):
            continue
        root = Word(tuple(b[0] for b in blocks), u.k)
        if _cycle_from_zero(inverse_standard_one_line(root.digits)) is not None:
            return BwtImage(ImageKind.POWER, c, root)
    return BwtImage(ImageKind.NONE)


def _invert_aperiodic(u: Word) -> Word:
    cyc = inverse_standard_permutation_cycle(u)
    first = sorted(u.digits)
    return Word(tuple(first[i] for i in cyc), u.k)


def inverse_bwt(u: Word) -> Necklace:
    info = is_bwt_image(u)
    if info.kind is ImageKind.NONE:
        raise NotABwtImage(f"{u} is not the BWT of any necklace")
    root = _invert_aperiodic(info.root)
    return Necklace.of(Word(root.digits * info.power, u.k))


def inverse_bwt_balanced(u: Word, k: int | None = None) -> Necklace:
    """Invert via the FL cycle alone, mapping position i to i // (n/k)."""
    k = u.k if k is None else k
    n = len(u)
    counts = [0] * max(k, u.k)
    for d in u.digits:
        counts[d] += 1
    if n % k or any(c != n // k for c in counts[:k]) or any(counts[k:]):
        raise NotBalanced(f"{u} does not have a balanced Parikh vector over {k} letters")
    m = n // k
    return Necklace.of(Word(tuple(i // m for i in inverse_standard_permutation_cycle(u)), u.k))


def is_generalized_de_bruijn(neck: Necklace | Word, k: int | None = None) -> bool:
    neck = as_necklace(neck)
    return is_app(bwt(neck), neck.k if k is None else k)


# -- characterisations of alphabet-permutation powers -------------------------

def fl_within_blocks(u: Word, k: int) -> bool:
    """pi_u^{-1}(i + j*n) lies in [k*i, k*i + k - 1] for all i < n, j < k."""
    if len(u) % k:
        return False
    n = len(u) // k
    inv = inverse_standard_one_line(u.digits)
    return all(k * i <= inv[i + j * n] <= k * i + k - 1 for j in range(k) for i in range(n))


def fl_follows_graph_edges(u: Word, k: int) -> bool:
    """Every l has an edge l -> pi_u^{-1}(l) in the graph DB(k, |u|)."""
    from .gdb_graph import GdbGraph

    g = GdbGraph(k, len(u))
    inv = inverse_standard_one_line(u.digits)
    return all(inv[l] in g.successors(l) for l in range(len(u)))
