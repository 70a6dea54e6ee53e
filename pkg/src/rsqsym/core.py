"""Compositions, partitions, cells, words and the predicates built on them.

Compositions, partitions and words are plain tuples of ints. The
``as_*`` helpers validate and normalise arbitrary sequences; everything
else in the package takes tuples and returns tuples.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations
from typing import NamedTuple

Composition = tuple[int, ...]
Partition = tuple[int, ...]
Word = tuple[int, ...]
Cell = tuple[int, int]


class Violation(NamedTuple):
    """One failed condition of a validator, with the cells involved."""

    rule: str
    cells: tuple[Cell, ...]
    detail: str = ""

    def to_json(self) -> dict:
        return {"rule": self.rule, "cells": [list(c) for c in self.cells], "detail": self.detail}


class InvalidTableauError(ValueError):
    """Raised when a filling fails validation; carries the violations found."""

    def __init__(self, kind: str, violations: Sequence[Violation]):
        self.kind = kind
        self.violations = list(violations)
        shown = "; ".join(f"{v.rule} at {list(v.cells)}" for v in self.violations[:3])
        super().__init__(f"not a valid {kind}: {shown}")


def as_strong(parts: Iterable[int]) -> Composition:
    """Return ``parts`` as a strong composition, raising if a part is < 1."""
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"strong composition parts must be positive: {parts}")
    return parts


def as_weak(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"weak composition parts must be nonnegative: {parts}")
    return parts


def as_partition(parts: Iterable[int]) -> Partition:
    parts = as_strong(parts)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def as_word(letters: Iterable[int]) -> Word:
    letters = tuple(int(x) for x in letters)
    if any(x < 1 for x in letters):
        raise ValueError(f"word letters must be positive: {letters}")
    return letters


def partition_of(alpha: Sequence[int]) -> Partition:
    """Sort the parts of ``alpha`` into weakly decreasing order."""
    return tuple(sorted(alpha, reverse=True))


def strong_of(gamma: Sequence[int]) -> Composition:
    """Drop the zero parts of a weak composition."""
    return tuple(p for p in gamma if p != 0)


def reverse_partition(lam: Sequence[int]) -> Composition:
    return tuple(reversed(lam))


def transpose(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def pad_to(gamma: Sequence[int], length: int) -> Composition:
    """Append zeros to ``gamma`` until it has ``length`` parts."""
    if len(gamma) > length:
        raise ValueError(f"cannot pad {tuple(gamma)} down to length {length}")
    return tuple(gamma) + (0,) * (length - len(gamma))


def contains(gamma: Sequence[int], beta: Sequence[int]) -> bool:
    """True iff ``gamma`` sits inside ``beta`` part by part.

    Both sequences must have the same length; use :func:`pad_to` first if
    they do not.
    """
    if len(gamma) != len(beta):
        raise ValueError(
            f"containment needs equal lengths, got {len(gamma)} and {len(beta)}"
        )
    return all(g <= b for g, b in zip(gamma, beta))


def content(word: Sequence[int]) -> Composition:
    """Occurrence counts of 1, 2, ..., max(word)."""
    if not word:
        return ()
    counts = [0] * max(word)
    for x in word:
        counts[x - 1] += 1
    return tuple(counts)


def is_reverse_lattice(word: Sequence[int]) -> bool:
    """Every prefix has at least as many i's as (i-1)'s, for 1 < i <= max."""
    if not word:
        return True
    counts = [0] * (max(word) + 1)
    for x in word:
        counts[x] += 1
        # adding an x can only break the comparison between x+1 and x
        if x + 1 < len(counts) and counts[x + 1] < counts[x]:
            return False
    return True


def is_regular_reverse_lattice(word: Sequence[int]) -> bool:
    """Reverse lattice word that contains at least one 1.

    The empty word is accepted, so that the trivial skew shape counts once.
    """
    if not word:
        return True
    return is_reverse_lattice(word) and 1 in word


def col_order_less(a: Cell, b: Cell) -> bool:
    """Column reading order: left columns first, bottom to top within a column."""
    return a[1] < b[1] or (a[1] == b[1] and a[0] > b[0])


def col_order_key(cell: Cell) -> tuple[int, int]:
    """Sort key realising :func:`col_order_less`."""
    return (cell[1], -cell[0])


def cells(shape: Sequence[int]) -> list[Cell]:
    """Cells of a diagram, in column reading order."""
    out = [(i + 1, j + 1) for i, p in enumerate(shape) for j in range(p)]
    out.sort(key=col_order_key)
    return out


# Knuth transformations on three consecutive letters starting at ``pos``.


def _triple(word: Sequence[int], pos: int) -> tuple[int, int, int]:
    if pos < 0 or pos + 3 > len(word):
        raise ValueError(f"position {pos} does not address three letters of {tuple(word)}")
    return word[pos], word[pos + 1], word[pos + 2]


def _replace(word: Sequence[int], pos: int, new: tuple[int, int, int]) -> Word:
    return tuple(word[:pos]) + new + tuple(word[pos + 3:])


def knuth_k1(word: Sequence[int], pos: int) -> Word:
    """bca -> bac when a < b <= c."""
    b, c, a = _triple(word, pos)
    if not a < b <= c:
        raise ValueError(f"K1 needs letters (b, c, a) with a < b <= c, got {(b, c, a)}")
    return _replace(word, pos, (b, a, c))


def knuth_k1_inv(word: Sequence[int], pos: int) -> Word:
    """bac -> bca when a < b <= c."""
    b, a, c = _triple(word, pos)
    if not a < b <= c:
        raise ValueError(f"K1^-1 needs letters (b, a, c) with a < b <= c, got {(b, a, c)}")
    return _replace(word, pos, (b, c, a))


def knuth_k2(word: Sequence[int], pos: int) -> Word:
    """acb -> cab when a <= b < c."""
    a, c, b = _triple(word, pos)
    if not a <= b < c:
        raise ValueError(f"K2 needs letters (a, c, b) with a <= b < c, got {(a, c, b)}")
    return _replace(word, pos, (c, a, b))


def knuth_k2_inv(word: Sequence[int], pos: int) -> Word:
    """cab -> acb when a <= b < c."""
    c, a, b = _triple(word, pos)
    if not a <= b < c:
        raise ValueError(f"K2^-1 needs letters (c, a, b) with a <= b < c, got {(c, a, b)}")
    return _replace(word, pos, (a, c, b))


# Generators used by enumeration, oracles and the CLI.


def compositions(n: int) -> Iterator[Composition]:
    """All strong compositions of ``n``; the empty one when n == 0."""
    if n == 0:
        yield ()
        return
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(k + 1))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def rearrangements(parts: Sequence[int]) -> list[Composition]:
    """Distinct orderings of ``parts``, sorted."""
    out: set[Composition] = set()

    def build(prefix: tuple[int, ...], remaining: list[int]) -> None:
        if not remaining:
            out.add(prefix)
            return
        for v in set(remaining):
            rest = list(remaining)
            rest.remove(v)
            build(prefix + (v,), rest)

    build((), list(parts))
    return sorted(out)
