"""Brute-force reference implementations, kept independent of the library code paths."""

from itertools import permutations, product


def rotations(s):
    return [s[i:] + s[:i] for i in range(len(s))]


def brute_canonical(s):
    return min(rotations(s))


def brute_necklaces(k, n, aperiodic_only=False):
    out = set()
    for t in product(range(k), repeat=n):
        if brute_canonical(t) != t:
            continue
        if aperiodic_only and len(set(rotations(t))) != n:
            continue
        out.add(t)
    return sorted(out)


def brute_bwt(t):
    return tuple(r[-1] for r in sorted(rotations(tuple(t))))


def brute_bwt_images(k, n):
    """Map BWT image -> canonical necklace, over every necklace of length n."""
    return {brute_bwt(t): t for t in brute_necklaces(k, n)}


def leibniz_det_mod(m, p):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total % p


def matmul_mod(a, b, p):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) % p for j in range(len(b[0]))]
            for i in range(len(a))]


def circulant_rows(t):
    n = len(t)
    return [tuple(t[(j - i) % n] for j in range(n)) for i in range(n)]


def brute_spanning_trees(n, edges, root):
    """Oriented spanning trees towards ``root``: every other vertex picks one out-edge."""
    out = {v: [t for s, t in edges if s == v and t != v] for v in range(n)}
    others = [v for v in range(n) if v != root]
    count = 0
    for choice in product(*(out[v] for v in others)):
        parent = dict(zip(others, choice))
        ok = True
        for v in others:
            seen = set()
            while v != root:
                if v in seen:
                    ok = False
                    break
                seen.add(v)
                v = parent[v]
            if not ok:
                break
        count += ok
    return count


def brute_hamiltonian_cycles(n, succ):
    """Every cyclic ordering starting at 0 whose consecutive pairs are edges."""
    out = []
    for rest in permutations(range(1, n)):
        cyc = (0,) + rest
        if all(cyc[(i + 1) % n] in succ(cyc[i]) for i in range(n)):
            out.append(cyc)
    return sorted(out)
