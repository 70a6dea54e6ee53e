"""Shared fixtures data, random generators and hypothesis strategies."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from rsqsym.core import partitions, transpose
from rsqsym.qsym import enumerate_rrst
from rsqsym.rct import RCT, rct_insert_word
from rsqsym.skew import SkewFilling
from rsqsym.tableaux import RRST, TwoLineArray

# the worked example with alpha = (1,3,2,2), lambda = (3,2,1,1)
FIG_U = RCT(((1,), (4, 3, 2), (5, 4), (5, 3)))
FIG_T = RRST(((4, 3, 2, 1), (4, 3), (2,)))
FIG_ALPHA = (1, 3, 2, 2)
FIG_LAMBDA = (3, 2, 1, 1)
FIG_V = RCT(((1,), (3, 2), (4, 3, 2), (4,), (5, 4, 3, 2, 1), (5, 4, 3)))
FIG_S = SkewFilling(
    (1, 2, 3, 1, 5, 3), (1, 0, 3, 0, 2, 2), ((), (4, 3), (), (4,), (4, 2, 1), (3,))
)
FIG_UPPER = (4, 4, 4, 3, 3, 2, 1)
FIG_LOWER = (2, 4, 4, 3, 3, 2, 1)

# the single insertion example
INS_U = RCT(((1,), (3,), (4, 3, 2), (5, 4, 2), (5, 4)))
INS_V = RCT(((1,), (3,), (4, 3, 2), (4,), (5, 4, 2), (5, 4)))
INS_PATH = {(4, 1), (5, 2), (6, 2)}


def random_rct(rng: random.Random, max_cells: int, max_letter: int) -> RCT:
    """Insertion of a random word into the empty RCT."""
    word = [rng.randint(1, max_letter) for _ in range(rng.randint(0, max_cells))]
    return rct_insert_word(RCT(), word)[0]


def random_two_line_array(rng: random.Random, max_len: int, max_letter: int) -> TwoLineArray:
    """Random biword: pairs sorted by upper descending, lower ascending within ties."""
    pairs = [
        (rng.randint(1, max_letter), rng.randint(1, max_letter))
        for _ in range(rng.randint(0, max_len))
    ]
    pairs.sort(key=lambda p: (-p[0], p[1]))
    return TwoLineArray(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def random_rrst(rng: random.Random, lam: tuple[int, ...], max_entry: int) -> RRST:
    """Uniform RRST of shape transpose(lam) by listing them all (small shapes only)."""
    return RRST(rng.choice(list(enumerate_rrst(transpose(lam), max_entry))))


def random_partition(rng: random.Random, size: int) -> tuple[int, ...]:
    return rng.choice(list(partitions(size)))


letters = st.integers(min_value=1, max_value=7)
words = st.lists(letters, max_size=9)


@st.composite
def rcts(draw, max_cells: int = 9, max_letter: int = 7) -> RCT:
    word = draw(st.lists(st.integers(1, max_letter), max_size=max_cells))
    return rct_insert_word(RCT(), word)[0]


@st.composite
def two_line_arrays(draw, max_len: int = 15, max_letter: int = 6) -> TwoLineArray:
    pairs = draw(st.lists(st.tuples(st.integers(1, max_letter), st.integers(1, max_letter)),
                          max_size=max_len))
    pairs.sort(key=lambda p: (-p[0], p[1]))
    return TwoLineArray(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


@st.composite
def compositions_st(draw, max_size: int = 4, min_size: int = 0) -> tuple[int, ...]:
    n = draw(st.integers(min_size, max_size))
    parts = []
    while n:
        p = draw(st.integers(1, n))
        parts.append(p)
        n -= p
    return tuple(parts)


@st.composite
def partitions_st(draw, max_size: int = 3, min_size: int = 0) -> tuple[int, ...]:
    n = draw(st.integers(min_size, max_size))
    return draw(st.sampled_from(list(partitions(n))))
