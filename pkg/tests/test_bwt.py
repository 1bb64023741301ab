from itertools import product

import pytest
from hypothesis import given, strategies as st

from bwtnecklace.bwt import (ImageKind, Permutation, bwt, bwt_matrix, fl_follows_graph_edges,
                             fl_within_blocks, inverse_bwt, inverse_bwt_balanced,
                             inverse_standard_permutation, inverse_standard_permutation_cycle,
                             is_bwt_image, is_generalized_de_bruijn, standard_permutation)
from bwtnecklace.errors import NotABwtImage, NotACycle, NotBalanced
from bwtnecklace.words import Necklace, Word, enumerate_necklaces, is_app
from oracles import brute_bwt, brute_bwt_images, brute_necklaces


def W(s, k=2):
    return Word.parse(s, k)


def N(s, k=2):
    return Necklace.parse(s, k)


def test_bwt_matrix():
    m = bwt_matrix(N("011"))
    assert [str(r) for r in m.rows] == ["011", "101", "110"]
    assert str(m.last_column) == "110"
    assert [str(r) for r in bwt_matrix(N("0101")).rows] == ["0101", "0101", "1010", "1010"]
    assert str(bwt_matrix(N("00010111")).last_column) == "10011010"


@pytest.mark.parametrize("neck,k,expected", [
    ("220120011", 3, "202001121"),
    ("02201331", 4, "21302031"),
    ("00000", 2, "00000"),
    ("0101", 2, "1100"),
])
def test_bwt_examples(neck, k, expected):
    assert str(bwt(N(neck, k))) == expected


def test_standard_permutation():
    u = W("10011010")
    assert inverse_standard_permutation(u).one_line == (1, 2, 5, 7, 0, 3, 4, 6)
    assert standard_permutation(W("0000")).one_line == (0, 1, 2, 3)
    assert inverse_standard_permutation_cycle(W("202001121", 3)) == (0, 1, 3, 5, 8, 7, 2, 4, 6)
    assert inverse_standard_permutation_cycle(u) == (0, 1, 2, 5, 3, 7, 6, 4)
    with pytest.raises(NotACycle):
        inverse_standard_permutation_cycle(W("01"))


def test_permutation_cycles():
    p = Permutation.from_cycles([(0, 2), (1,)], 3)
    assert p.one_line == (2, 1, 0)
    assert p.cycles() == [(0, 2), (1,)]
    assert not p.is_single_cycle()
    assert p.inverse().inverse() == p


def test_is_bwt_image():
    assert is_bwt_image(W("10011010")).kind is ImageKind.APERIODIC
    info = is_bwt_image(W("1100"))
    assert (info.kind, info.power, str(info.root)) == (ImageKind.POWER, 2, "10")
    assert not is_bwt_image(W("01"))
    images = brute_bwt_images(2, 6)
    assert bool(is_bwt_image(W("110100"))) == ((1, 1, 0, 1, 0, 0) in images)


def test_inverse_bwt_examples():
    assert str(inverse_bwt(W("202001121", 3))) == "[001122012]"
    assert str(inverse_bwt(W("10011010"))) == "[00010111]"
    assert str(inverse_bwt(W("1100"))) == "[0101]"
    with pytest.raises(NotABwtImage):
        inverse_bwt(W("01"))


def test_inverse_bwt_balanced():
    assert str(inverse_bwt_balanced(W("202001121", 3), 3)) == "[001122012]"
    assert str(inverse_bwt_balanced(W("10011010"), 2)) == "[00010111]"
    assert str(inverse_bwt_balanced(W("10"), 2)) == "[01]"
    with pytest.raises(NotBalanced):
        inverse_bwt_balanced(W("110"), 2)
    with pytest.raises(NotACycle):
        inverse_bwt_balanced(W("0011"), 2)


def test_generalized_de_bruijn_examples():
    assert is_generalized_de_bruijn(N("02201331", 4), 4)
    assert is_generalized_de_bruijn(N("00010111"), 2)
    assert is_generalized_de_bruijn(N("0011"), 2)
    assert not is_generalized_de_bruijn(N("0101"), 2)


@pytest.mark.parametrize("k,n", [(2, n) for n in range(1, 11)] + [(3, n) for n in range(1, 7)])
def test_image_classification_matches_brute_force(k, n):
    images = brute_bwt_images(k, n)
    aperiodic = {brute_bwt(t) for t in brute_necklaces(k, n, True)}
    for u in product(range(k), repeat=n):
        w = Word(u, k)
        info = is_bwt_image(w)
        assert bool(info) == (u in images)
        assert (info.kind is ImageKind.APERIODIC) == (u in aperiodic)
        if info:
            assert inverse_bwt(w).canonical.digits == images[u]
        else:
            with pytest.raises(NotABwtImage):
                inverse_bwt(w)


@pytest.mark.parametrize("k,n", [(2, 8), (3, 6), (4, 4)])
def test_balanced_inverse_agrees(k, n):
    for neck in enumerate_necklaces(k, n, aperiodic_only=True):
        u = bwt(neck)
        if len(set(u.digits.count(a) for a in range(k))) == 1:
            assert inverse_bwt_balanced(u, k) == inverse_bwt(u) == neck


@pytest.mark.parametrize("k,n", [(2, 8), (2, 10), (3, 6)])
def test_app_characterisations_agree(k, n):
    for u in product(range(k), repeat=n):
        if len(set(u.count(a) for a in range(k))) != 1:
            continue
        w = Word(u, k)
        assert is_app(w, k) == fl_within_blocks(w, k) == fl_follows_graph_edges(w, k)


@pytest.mark.parametrize("k,n", [(2, 8), (3, 6), (2, 9)])
def test_periodic_necklaces_never_gdb(k, n):
    for neck in enumerate_necklaces(k, n):
        if not neck.is_aperiodic:
            assert not is_generalized_de_bruijn(neck, k)


necklaces = st.integers(2, 4).flatmap(
    lambda k: st.lists(st.integers(0, k - 1), min_size=1, max_size=16)
    .map(lambda d: Necklace.of(Word(tuple(d), k))))


@given(necklaces)
def test_round_trip(neck):
    u = bwt(neck)
    assert u.digits == brute_bwt(neck.canonical.digits)
    assert inverse_bwt(u) == neck
    assert sorted(u.digits) == sorted(neck.canonical.digits)


@given(necklaces, st.integers(2, 4))
def test_power_identity(neck, c):
    """The BWT of a c-th power repeats each letter of the BWT c times."""
    u = bwt(neck)
    power = Necklace.of(Word(neck.canonical.digits * c, neck.k))
    assert bwt(power).digits == tuple(a for a in u.digits for _ in range(c))


@given(st.integers(2, 4).flatmap(
    lambda k: st.lists(st.integers(0, k - 1), min_size=1, max_size=20).map(lambda d: Word(tuple(d), k))))
def test_descents_bounded(w):
    assert inverse_standard_permutation(w).descents() <= w.k - 1
