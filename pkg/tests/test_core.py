from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rsqsym.core import (
    as_partition,
    as_strong,
    as_weak,
    cells,
    col_order_key,
    col_order_less,
    compositions,
    contains,
    content,
    is_regular_reverse_lattice,
    is_reverse_lattice,
    knuth_k1,
    knuth_k1_inv,
    knuth_k2,
    knuth_k2_inv,
    pad_to,
    partition_of,
    partitions,
    rearrangements,
    reverse_partition,
    strong_of,
    transpose,
)


@pytest.mark.parametrize("alpha, lam", [((1, 3, 2, 2), (3, 2, 2, 1)), ((5,), (5,)), ((2, 4), (4, 2))])
def test_partition_of(alpha, lam):
    assert partition_of(alpha) == lam


@pytest.mark.parametrize("gamma, alpha", [((1, 0, 3, 0, 2), (1, 3, 2)), ((0, 0), ()), ((2, 1), (2, 1))])
def test_strong_of(gamma, alpha):
    assert strong_of(gamma) == alpha


def test_reverse_partition():
    assert reverse_partition((3, 2, 1, 1)) == (1, 1, 2, 3)
    assert reverse_partition((2,)) == (2,)
    assert reverse_partition(()) == ()


@pytest.mark.parametrize("lam, lt", [((3, 2, 1, 1), (4, 2, 1)), ((1,), (1,)), ((2, 2), (2, 2)), ((), ())])
def test_transpose(lam, lt):
    assert transpose(lam) == lt


@given(st.integers(0, 9).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert sum(transpose(lam)) == sum(lam)


def test_contains():
    assert not contains(pad_to((1, 3, 2, 2), 6), (1, 2, 3, 1, 5, 3))
    assert contains((1, 0, 3, 0, 2, 2), (1, 2, 3, 1, 5, 3))
    assert contains((), ())
    with pytest.raises(ValueError):
        contains((1,), (1, 2))


def test_pad_to_rejects_shrinking():
    assert pad_to((1, 2), 4) == (1, 2, 0, 0)
    with pytest.raises(ValueError):
        pad_to((1, 2, 3), 2)


def test_validators():
    assert as_strong([1, 2]) == (1, 2)
    with pytest.raises(ValueError):
        as_strong((1, 0))
    assert as_weak((0, 2)) == (0, 2)
    with pytest.raises(ValueError):
        as_weak((-1,))
    with pytest.raises(ValueError):
        as_partition((1, 2))


def test_content():
    assert content((4, 4, 3, 3, 4, 2, 1)) == (1, 1, 2, 3)
    assert content((1, 1, 1)) == (3,)
    assert content(()) == ()


def test_reverse_lattice_examples():
    w = (4, 4, 3, 3, 4, 2, 1)
    assert is_reverse_lattice(w) and is_regular_reverse_lattice(w)
    assert not is_reverse_lattice((1, 2))
    assert is_reverse_lattice((2, 1)) and is_regular_reverse_lattice((2, 1))
    assert is_reverse_lattice((2, 2)) and not is_regular_reverse_lattice((2, 2))
    assert is_regular_reverse_lattice(())


def _lattice_naive(word):
    top = max(word, default=0)
    return all(
        word[:p].count(i) >= word[:p].count(i - 1)
        for p in range(len(word) + 1)
        for i in range(2, top + 1)
    )


@given(st.lists(st.integers(1, 4), max_size=8))
def test_reverse_lattice_matches_prefix_definition(word):
    assert is_reverse_lattice(word) == _lattice_naive(word)


def test_col_order():
    assert col_order_less((5, 1), (1, 1))
    assert col_order_less((1, 1), (9, 2))
    assert not col_order_less((2, 3), (2, 3))


@given(st.tuples(st.integers(1, 5), st.integers(1, 5)), st.tuples(st.integers(1, 5), st.integers(1, 5)))
def test_col_order_key_agrees(a, b):
    assert col_order_less(a, b) == (col_order_key(a) < col_order_key(b))
    assert not (col_order_less(a, b) and col_order_less(b, a))


def test_cells_in_column_order():
    assert cells((1, 2)) == [(2, 1), (1, 1), (2, 2)]


def test_knuth_moves():
    assert knuth_k1((2, 3, 1), 0) == (2, 1, 3)
    assert knuth_k1_inv((2, 1, 3), 0) == (2, 3, 1)
    assert knuth_k2((1, 3, 2), 0) == (3, 1, 2)
    assert knuth_k2_inv((3, 1, 2), 0) == (1, 3, 2)
    assert knuth_k1((5, 2, 3, 1, 5), 1) == (5, 2, 1, 3, 5)
    with pytest.raises(ValueError):
        knuth_k1((1, 2, 3), 0)
    with pytest.raises(ValueError):
        knuth_k2((1, 2, 3), 1)


@given(st.lists(st.integers(1, 4), min_size=3, max_size=7), st.data())
def test_knuth_moves_invert(word, data):
    pos = data.draw(st.integers(0, len(word) - 3))
    for fwd, back in ((knuth_k1, knuth_k1_inv), (knuth_k2, knuth_k2_inv)):
        try:
            moved = fwd(word, pos)
        except ValueError:
            continue
        assert back(moved, pos) == tuple(word)
        assert sorted(moved) == sorted(word)


def test_compositions_count():
    for n in range(8):
        comps = list(compositions(n))
        assert len(comps) == max(1, 2 ** (n - 1))
        assert len(set(comps)) == len(comps)
        assert all(sum(c) == n and min(c, default=1) >= 1 for c in comps)


def test_partitions_match_brute_force():
    for n in range(8):
        brute = {
            tuple(sorted(c, reverse=True)) for c in compositions(n)
        }
        assert set(partitions(n)) == brute


def test_rearrangements():
    assert rearrangements((2, 1)) == [(1, 2), (2, 1)]
    assert rearrangements((1, 1)) == [(1, 1)]
    assert rearrangements(()) == [()]
    brute = sorted(set(p for p in product((1, 2, 2), repeat=3) if sorted(p) == [1, 2, 2]))
    assert rearrangements((2, 2, 1)) == brute
