from itertools import product

import pytest
import sympy
from hypothesis import given, strategies as st

from bwtnecklace.bwt import is_generalized_de_bruijn
from bwtnecklace.errors import BoundExceeded, DivisibilityError
from bwtnecklace.gdb_graph import (GdbGraph, bareiss_determinant, brute_force_eulerian_cycles,
                                   count_gdb_words, cycle_to_gdb_word, enumerate_gdb_words,
                                   enumerate_hamiltonian_cycles, eulerian_cycle_count, kappa,
                                   laplacian, line_graph_edge_map, reduced_laplacian, successors)
from bwtnecklace.words import enumerate_necklaces
from oracles import brute_hamiltonian_cycles, brute_spanning_trees

L_DB36 = [
    [2, -1, -1, 0, 0, 0],
    [0, 3, 0, -1, -1, -1],
    [-1, -1, 2, 0, 0, 0],
    [0, 0, 0, 2, -1, -1],
    [-1, -1, -1, 0, 3, 0],
    [0, 0, 0, -1, -1, 2],
]
L_DB26 = [
    [1, -1, 0, 0, 0, 0],
    [0, 2, -1, -1, 0, 0],
    [0, 0, 2, 0, -1, -1],
    [-1, -1, 0, 2, 0, 0],
    [0, 0, -1, -1, 2, 0],
    [0, 0, 0, 0, -1, 1],
]

small_graphs = [(k, n) for k in (2, 3, 4) for n in range(1, 9) if k * n <= 16]


def test_successors():
    assert successors(GdbGraph(3, 6), 1) == [3, 4, 5]
    assert successors(GdbGraph(2, 8), 2) == [4, 5]
    assert successors(GdbGraph(2, 3), 1) == [2, 0]


@pytest.mark.parametrize("k,n", small_graphs)
def test_regular_degrees(k, n):
    g = GdbGraph(k, n)
    assert g.in_degrees() == [k] * n
    assert all(len(g.successors(m)) == k for m in range(n))


def test_laplacians():
    assert laplacian(GdbGraph(3, 6)) == L_DB36
    assert laplacian(GdbGraph(2, 6)) == L_DB26
    assert laplacian(GdbGraph(2, 1)) == [[0]]
    assert reduced_laplacian(GdbGraph(2, 3)) == [[1, -1], [-1, 2]]


def test_kappa_examples():
    assert kappa(GdbGraph(3, 6)) == 27
    assert kappa(GdbGraph(2, 6)) == 4
    assert kappa(GdbGraph(2, 3)) == 1
    assert eulerian_cycle_count(GdbGraph(3, 6)) == 1728


@pytest.mark.parametrize("k,n", small_graphs)
def test_kappa_counts_spanning_trees(k, n):
    g = GdbGraph(k, n)
    assert kappa(g) == brute_spanning_trees(n, g.edges(), n - 1)


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_sympy(m):
    assert bareiss_determinant(m) == sympy.Matrix(m).det()


@pytest.mark.parametrize("k,n", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (2, 6)])
def test_best_formula(k, n):
    g = GdbGraph(k, n)
    e = brute_force_eulerian_cycles(g)
    assert e == eulerian_cycle_count(g)
    assert e == len(enumerate_hamiltonian_cycles(GdbGraph(k, k * n)))


def test_euler_brute_force_guard():
    with pytest.raises(BoundExceeded):
        brute_force_eulerian_cycles(GdbGraph(2, 20), max_edges=16)


def test_hamiltonian_examples():
    assert enumerate_hamiltonian_cycles(GdbGraph(3, 6)) == [
        (0, 1, 3, 5, 4, 2), (0, 1, 5, 3, 4, 2), (0, 2, 1, 3, 5, 4), (0, 2, 1, 5, 3, 4)]
    cycles = enumerate_hamiltonian_cycles(GdbGraph(2, 8))
    assert len(cycles) == 2 and (0, 1, 2, 5, 3, 7, 6, 4) in cycles
    assert enumerate_hamiltonian_cycles(GdbGraph(2, 2)) == [(0, 1)]


@pytest.mark.parametrize("k,n", [(k, n) for k in (2, 3, 4) for n in range(1, 10) if n <= 9 and k**n <= 3**8])
def test_hamiltonian_matches_brute_force(k, n):
    g = GdbGraph(k, n)
    assert enumerate_hamiltonian_cycles(g) == brute_hamiltonian_cycles(n, lambda v: g.successors(v))


def test_hamiltonian_bound():
    with pytest.raises(BoundExceeded):
        enumerate_hamiltonian_cycles(GdbGraph(2, 40), bound=2**20)


def test_cycle_to_word():
    assert str(cycle_to_gdb_word((0, 1, 3, 5, 4, 2), 3, 6)) == "[001221]"
    assert str(cycle_to_gdb_word((0, 1, 2, 5, 3, 7, 6, 4), 2, 8)) == "[00010111]"
    assert str(cycle_to_gdb_word((0, 1), 2, 2)) == "[01]"


def test_enumerate_gdb_examples():
    assert [str(w) for w in enumerate_gdb_words(3, 6)] == ["[001221]", "[002121]", "[010122]", "[010212]"]
    assert [str(w) for w in enumerate_gdb_words(2, 12)] == [
        "[000010111101]", "[000011101101]", "[000100101111]", "[000100111011]"]
    assert [str(w) for w in enumerate_gdb_words(2, 2)] == ["[01]"]
    with pytest.raises(DivisibilityError):
        enumerate_gdb_words(3, 7)
    with pytest.raises(DivisibilityError):
        count_gdb_words(2, 5)


@pytest.mark.parametrize("k,length", [(2, 2 * n) for n in range(1, 8)] + [(3, 3), (3, 6), (3, 9), (4, 4), (4, 8)])
def test_gdb_words_bijection(k, length):
    via_cycles = enumerate_gdb_words(k, length)
    direct = [x for x in enumerate_necklaces(k, length) if is_generalized_de_bruijn(x, k)]
    assert via_cycles == direct
    assert len(set(via_cycles)) == len(via_cycles) == count_gdb_words(k, length)


def test_dbw_prime_power_formula():
    # (p!)^(p^(d-1)) / p^d de Bruijn words of order d
    assert count_gdb_words(2, 8) == 2
    assert count_gdb_words(2, 16) == 16
    assert count_gdb_words(3, 9) == 6**3 // 9


@pytest.mark.parametrize("k,n", small_graphs)
def test_line_graph(k, n):
    g = GdbGraph(k, n)
    big = GdbGraph(k, k * n)
    emap = line_graph_edge_map(g)
    assert sorted(emap.values()) == list(range(k * n))
    for (m, i), v in emap.items():
        head = g.successors(m)[i]
        following = {emap[(head, j)] for j in range(k)}
        assert following == set(big.successors(v))


@pytest.mark.parametrize("k,d", [(2, 2), (2, 3), (2, 4), (3, 2)])
def test_classical_de_bruijn(k, d):
    labels = list(product(range(k), repeat=d))  # vertex m is the base-k word of m
    index = {w: m for m, w in enumerate(labels)}
    g = GdbGraph(k, k**d)
    for m, w in enumerate(labels):
        word_shift = sorted(index[w[1:] + (a,)] for a in range(k))
        assert sorted(g.successors(m)) == word_shift
        assert [t // k ** (d - 1) for t in g.successors(m)] == [labels[t][0] for t in g.successors(m)]


def test_dot_export():
    dot = GdbGraph(2, 1).to_dot()
    assert dot.count("0 -> 0;") == 2
