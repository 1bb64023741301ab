"""Generalized de Bruijn graphs DB(k, n) and the words read off their cycles.

DB(k, n) has vertices 0..n-1 and, for every vertex m, one edge to
(k*m + i) mod n for each i < k.  Edge multiplicity is kept throughout, so
for k >= n the graph may carry parallel edges and several self-loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import BoundExceeded, DivisibilityError
from .words import Necklace, Word, check_bound

IntMatrix = list  # list[list[int]], exact Python integers

DEFAULT_EULER_EDGE_LIMIT = 24


@dataclass(frozen=True)
class GdbGraph:
    k: int
    n: int

    def __post_init__(self):
        if self.k < 2 or self.n < 1:
            raise ValueError(f"DB({self.k},{self.n}) needs k >= 2 and n >= 1")

    def successors(self, m: int) -> list[int]:
        if not 0 <= m < self.n:
            raise ValueError(f"vertex {m} not in DB({self.k},{self.n})")
        return [(self.k * m + i) % self.n for i in range(self.k)]

    def edges(self) -> list[tuple[int, int]]:
        """All k*n edges in (source, label) order, with multiplicity."""
        return [(m, t) for m in range(self.n) for t in self.successors(m)]

    def adjacency(self) -> IntMatrix:
        a = [[0] * self.n for _ in range(self.n)]
        for s, t in self.edges():
            a[s][t] += 1
        return a

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, t in self.edges():
            deg[t] += 1
        return deg

    def to_dot(self) -> str:
        lines = [f'digraph "DB({self.k},{self.n})" {{']
        lines += [f'  {v} [label="{v}"];' for v in range(self.n)]
        lines += [f"  {s} -> {t};" for s, t in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def successors(g: GdbGraph, m: int) -> list[int]:
    return g.successors(m)


def laplacian(g: GdbGraph) -> IntMatrix:
    """L = D - A; self-loops cancel against the out-degree on the diagonal."""
    a = g.adjacency()
    return [[(g.k if i == j else 0) - a[i][j] for j in range(g.n)] for i in range(g.n)]


def reduced_laplacian(g: GdbGraph) -> IntMatrix:
    return [row[:-1] for row in laplacian(g)[:-1]]


def bareiss_determinant(m: IntMatrix) -> int:
    """Fraction-free Gaussian elimination; every intermediate stays integral."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for c in range(n - 1):
        if a[c][c] == 0:
            for r in range(c + 1, n):
                if a[r][c]:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) // prev
        prev = a[c][c]
    return sign * a[-1][-1]


def kappa(g: GdbGraph) -> int:
    """Number of oriented spanning trees, via the reduced Laplacian."""
    return bareiss_determinant(reduced_laplacian(g))


def eulerian_cycle_count(g: GdbGraph) -> int:
    return kappa(g) * factorial(g.k - 1) ** g.n


def brute_force_eulerian_cycles(g: GdbGraph, max_edges: int = DEFAULT_EULER_EDGE_LIMIT) -> int:
    """Count Eulerian circuits by exhaustive search (test oracle).

    Parallel edges are distinct.  Every circuit passes through edge 0
    exactly once, so counting edge sequences that start there counts each
    circuit once.
    """
    edges = g.edges()
    if len(edges) > max_edges:
        raise BoundExceeded(f"{len(edges)} edges exceeds brute-force limit {max_edges}")
    out_edges: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (s, _) in enumerate(edges):
        out_edges[s].append(idx)
    used = [False] * len(edges)
    used[0] = True
    start = edges[0][0]

    def walk(v: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if v == start else 0
        total = 0
        for e in out_edges[v]:
            if not used[e]:
                used[e] = True
                total += walk(edges[e][1], remaining - 1)
                used[e] = False
        return total

    return walk(edges[0][1], len(edges) - 1)


def enumerate_hamiltonian_cycles(g: GdbGraph, bound: int | None = None) -> list[tuple[int, ...]]:
    """All Hamiltonian cycles as vertex tuples starting at 0, sorted.

    Reverse orientations are distinct cycles.  The naive search space k**n
    is checked against ``bound``.
    """
    check_bound(g.k ** g.n, bound, "branches in Hamiltonian search")
    n = g.n
    succ = [sorted(set(g.successors(v))) for v in range(n)]
    if n == 1:
        return [(0,)] if 0 in succ[0] else []

    # an unvisited vertex whose possible predecessors have all been left is unreachable
    preds: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for t in succ[v]:
            if t != v:
                preds[t].append(v)
    live_in = [len(p) for p in preds]

    visited = [False] * n
    visited[0] = True
    path = [0]
    out: list[tuple[int, ...]] = []

    def extend(v: int) -> None:
        if len(path) == n:
            if 0 in succ[v]:
                out.append(tuple(path))
            return
        # leaving v consumes v as the last possible way into its other successors
        for t in succ[v]:
            if t != v:
                live_in[t] -= 1
        forced = [t for t in succ[v] if not visited[t] and live_in[t] == 0]
        if live_in[0] > 0 and len(forced) <= 1:
            for t in forced or succ[v]:
                if not visited[t]:
                    visited[t] = True
                    path.append(t)
                    extend(t)
                    path.pop()
                    visited[t] = False
        for t in succ[v]:
            if t != v:
                live_in[t] += 1

    extend(0)
    out.sort()
    return out


def cycle_to_gdb_word(cycle, k: int, n_total: int) -> Necklace:
    """Read a Hamiltonian cycle of DB(k, n_total) as a word via i -> i // (n_total/k)."""
    if n_total % k:
        raise DivisibilityError(f"{k} does not divide {n_total}")
    m = n_total // k
    return Necklace.of(Word(tuple(i // m for i in cycle), k))


def enumerate_gdb_words(k: int, length: int, bound: int | None = None) -> list[Necklace]:
    if length % k:
        raise DivisibilityError(f"{k} does not divide {length}")
    cycles = enumerate_hamiltonian_cycles(GdbGraph(k, length), bound)
    return sorted(cycle_to_gdb_word(c, k, length) for c in cycles)


def count_gdb_words(k: int, length: int) -> int:
    if length % k or length < k:
        raise DivisibilityError(f"{k} does not divide {length}")
    n = length // k
    return factorial(k - 1) ** n * kappa(GdbGraph(k, n))


def line_graph_edge_map(g: GdbGraph) -> dict[tuple[int, int], int]:
    """Edge (m, i-th successor) of DB(k,n) -> vertex k*m + i of DB(k, k*n)."""
    return {(m, i): g.k * m + i for m in range(g.n) for i in range(g.k)}
