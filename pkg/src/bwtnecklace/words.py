"""Words and necklaces over the alphabet {0, ..., k-1}, plus counting formulas."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, Sequence, Union

from .errors import BoundExceeded, DigitOutOfRange

MAX_ALPHABET = 36
DEFAULT_BOUND = 2**24
SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"

ParikhVector = tuple  # tuple[int, ...] of length k


@dataclass(frozen=True, order=True)
class Word:
    """A finite word over ``{0, ..., k-1}``.

    Ordering is lexicographic on the digits, which is the order used to
    sort the rows of a BWT matrix.
    """

    digits: tuple[int, ...]
    k: int = 2

    def __post_init__(self):
        if not 2 <= self.k <= MAX_ALPHABET:
            raise DigitOutOfRange(f"alphabet size {self.k} outside [2, {MAX_ALPHABET}]")
        if not isinstance(self.digits, tuple):
            object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise ValueError("words must have length >= 1")
        for d in self.digits:
            if not 0 <= d < self.k:
                raise DigitOutOfRange(f"digit {d} not in alphabet of size {self.k}")

    @classmethod
    def parse(cls, text: str, k: int = 2) -> Word:
        try:
            digits = tuple(SYMBOLS.index(c) for c in text.strip().lower())
        except ValueError:
            raise DigitOutOfRange(f"cannot parse {text!r} as a word") from None
        return cls(digits, k)

    def __str__(self) -> str:
        return "".join(SYMBOLS[d] for d in self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, i):
        return self.digits[i]

    def rotate(self, r: int) -> Word:
        """Left rotation by ``r`` positions, ``w[r:] + w[:r]``."""
        r %= len(self.digits)
        return Word(self.digits[r:] + self.digits[:r], self.k)


WordLike = Union[Word, str]


def as_word(w: WordLike, k: int = 2) -> Word:
    return w if isinstance(w, Word) else Word.parse(w, k)


def shift(w: Word) -> Word:
    """sigma(w) = w_{n-1} w_0 ... w_{n-2}."""
    return Word(w.digits[-1:] + w.digits[:-1], w.k)


def primitive_period(digits: Sequence[int]) -> int:
    """Length of the primitive root of ``digits``."""
    n = len(digits)
    for p in divisors(n):
        if all(digits[i] == digits[i - p] for i in range(p, n)):
            return p
    return n


def is_primitive(w: Word) -> bool:
    return primitive_period(w.digits) == len(w)


def least_rotation(digits: Sequence[int]) -> tuple[int, ...]:
    # Booth's algorithm
    s = tuple(digits)
    n = len(s)
    ss = s + s
    f = [-1] * (2 * n)
    best = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = f[j - best - 1]
        while i != -1 and c != ss[best + i + 1]:
            if c < ss[best + i + 1]:
                best = j - i - 1
            i = f[i]
        if c != ss[best + i + 1]:
            if c < ss[best]:
                best = j
            f[j - best] = -1
        else:
            f[j - best] = i + 1
    return ss[best:best + n]


def canonical_rotation(w: Word) -> Word:
    return Word(least_rotation(w.digits), w.k)


def weight(w: Word) -> int:
    return sum(w.digits)


def parikh(w: Word) -> ParikhVector:
    counts = [0] * w.k
    for d in w.digits:
        counts[d] += 1
    return tuple(counts)


def is_app(w: Word, k: int | None = None) -> bool:
    """True iff ``w`` is a concatenation of permutations of the alphabet."""
    k = w.k if k is None else k
    n = len(w)
    if n % k:
        return False
    full = set(range(k))
    return all(set(w.digits[i:i + k]) == full for i in range(0, n, k))


def thue_morse(v: Word) -> Word:
    return Word(tuple(d for x in v.digits for d in (x, 1 - x)), 2)


def thue_morse_preimage(w: Word) -> Word | None:
    """Undo the substitution 0 -> 01, 1 -> 10, or return None if impossible."""
    if len(w) % 2:
        return None
    out = []
    for i in range(0, len(w), 2):
        a, b = w.digits[i], w.digits[i + 1]
        if a + b != 1:
            return None
        out.append(a)
    return Word(tuple(out), 2)


@dataclass(frozen=True, order=True)
class Necklace:
    """Conjugacy class of a word, stored as its lexicographically least rotation.

    ``period`` is the length of the primitive root, so the necklace is
    aperiodic exactly when ``period == length``.
    """

    canonical: Word
    period: int

    @classmethod
    def of(cls, w: Word) -> Necklace:
        c = least_rotation(w.digits)
        return cls(Word(c, w.k), primitive_period(c))

    @classmethod
    def parse(cls, text: str, k: int = 2) -> Necklace:
        return cls.of(Word.parse(text.strip().strip("[]"), k))

    @property
    def length(self) -> int:
        return len(self.canonical)

    @property
    def k(self) -> int:
        return self.canonical.k

    @property
    def repetitions(self) -> int:
        return self.length // self.period

    @property
    def is_aperiodic(self) -> bool:
        return self.period == self.length

    @property
    def weight(self) -> int:
        return sum(self.canonical.digits)

    def rotations(self) -> list[Word]:
        return [self.canonical.rotate(r) for r in range(self.length)]

    def __str__(self) -> str:
        return f"[{self.canonical}]"


def as_necklace(x: Necklace | Word) -> Necklace:
    return x if isinstance(x, Necklace) else Necklace.of(x)


# -- arithmetic helpers -------------------------------------------------------

def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi is defined for n >= 1")
    return prod((q - 1) * q ** (e - 1) for q, e in factorize(n).items())


def count_lyn(k: int, n: int) -> int:
    """Number of aperiodic necklaces of length n over k letters."""
    return sum(mobius(n // d) * k**d for d in divisors(n)) // n


def count_neck(k: int, n: int) -> int:
    return sum(euler_phi(n // d) * k**d for d in divisors(n)) // n


# -- enumeration --------------------------------------------------------------

def check_bound(space: int, bound: int | None, what: str = "candidate words") -> None:
    bound = DEFAULT_BOUND if bound is None else bound
    if space > bound:
        raise BoundExceeded(f"{space} {what} exceeds enumeration bound {bound}")


def iter_necklace_digits(k: int, n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(digits, period)`` for every necklace, in lexicographic order.

    Iterative FKM generation: each prenecklace is produced from its
    predecessor; those whose period divides n are necklaces.
    """
    a = [0] * n
    yield tuple(a), 1
    while True:
        j = n - 1
        while j >= 0 and a[j] == k - 1:
            j -= 1
        if j < 0:
            return
        a[j] += 1
        for m in range(j + 1, n):
            a[m] = a[m - j - 1]
        if n % (j + 1) == 0:
            yield tuple(a), j + 1


def enumerate_necklaces(k: int, n: int, aperiodic_only: bool = False,
                        bound: int | None = None) -> list[Necklace]:
    check_bound(k**n, bound)
    return [Necklace(Word(d, k), p) for d, p in iter_necklace_digits(k, n)
            if not aperiodic_only or p == n]


def all_words(k: int, n: int, bound: int | None = None) -> Iterable[Word]:
    from itertools import product

    check_bound(k**n, bound)
    return (Word(d, k) for d in product(range(k), repeat=n))
