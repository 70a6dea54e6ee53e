"""Skew fillings, Type A/B triples and Littlewood-Richardson skew RCTs.

A skew filling of beta/gamma stores only the entries of the non-skewed
boxes. Skewed boxes and the extra 0th column read as infinity. Two
infinities in one row decrease left to right and two in one column are
equal, so an infinity is modelled by its column: the further left, the
larger. Ordinary integers sit below every infinity.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations, product

from .core import (
    Cell,
    Composition,
    Partition,
    Violation,
    Word,
    as_partition,
    as_strong,
    as_weak,
    col_order_key,
    content,
    is_regular_reverse_lattice,
    reverse_partition,
    strong_of,
)


@total_ordering
class Inf:
    """The virtual infinity of a skewed box or 0th-column box in column ``col``."""

    __slots__ = ("col",)

    def __init__(self, col: int):
        self.col = col

    def _key(self):
        return (1, -self.col)

    @staticmethod
    def key(x) -> tuple[int, int]:
        return x._key() if isinstance(x, Inf) else (0, x)

    def __eq__(self, other):
        if isinstance(other, Inf):
            return self.col == other.col
        if isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(("inf", self.col))

    def __lt__(self, other):
        if isinstance(other, (Inf, int)):
            return self._key() < Inf.key(other)
        return NotImplemented

    def __repr__(self):
        return f"Inf({self.col})"


@dataclass(frozen=True)
class SkewFilling:
    """Filling of the skew diagram beta/gamma.

    ``rows[i]`` holds the entries of the non-skewed boxes of row i, left to
    right, so ``len(rows[i]) == beta[i] - gamma[i]``.
    """

    beta: Composition
    gamma: Composition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        beta, gamma = as_strong(self.beta), as_weak(self.gamma)
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "rows", rows)
        if not len(beta) == len(gamma) == len(rows):
            raise ValueError("beta, gamma and rows must have the same length")
        for i, (b, g, r) in enumerate(zip(beta, gamma, rows), start=1):
            if g > b:
                raise ValueError(f"gamma is not contained in beta at row {i}")
            if len(r) != b - g:
                raise ValueError(f"row {i} needs {b - g} entries, got {len(r)}")
            if any(x < 1 for x in r):
                raise ValueError(f"row {i} has a non-positive entry")

    @property
    def alpha(self) -> Composition:
        return strong_of(self.gamma)

    def entry(self, i: int, j: int) -> int | Inf:
        """Entry at (i, j); infinity in the 0th column and skewed boxes."""
        g = self.gamma[i - 1]
        if j <= g:
            return Inf(j)
        return self.rows[i - 1][j - g - 1]

    def filled_cells(self) -> list[Cell]:
        """Non-skewed boxes in column reading order."""
        out = [
            (i, j)
            for i, (b, g) in enumerate(zip(self.beta, self.gamma), start=1)
            for j in range(g + 1, b + 1)
        ]
        out.sort(key=col_order_key)
        return out

    def to_json(self) -> dict:
        return {
            "beta": list(self.beta),
            "gamma": list(self.gamma),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> SkewFilling:
        return cls(tuple(data["beta"]), tuple(data["gamma"]), tuple(map(tuple, data["rows"])))

    def __str__(self) -> str:
        lines = []
        for i, b in enumerate(self.beta, start=1):
            lines.append(" ".join(
                "." if j <= self.gamma[i - 1] else str(self.entry(i, j))
                for j in range(1, b + 1)
            ))
        return "\n".join(lines) or "(empty)"


def empty_skew(alpha: Sequence[int]) -> SkewFilling:
    """The filling of alpha/alpha, which has no entries."""
    alpha = as_strong(alpha)
    return SkewFilling(alpha, alpha, tuple(() for _ in alpha))


@dataclass(frozen=True)
class Triple:
    """Three boxes (and their values) tested by the inversion condition."""

    kind: str  # "A" or "B"
    a: int | Inf
    b: int | Inf
    c: int | Inf
    cells: tuple[Cell, Cell, Cell]  # cells of a, b, c in that order


def triple_cells(beta: Sequence[int]) -> Iterator[tuple[str, Cell, Cell, Cell]]:
    """Index data of every Type A and Type B triple of a shape.

    Yields ``(kind, cell_a, cell_b, cell_c)``. Type A uses rows i1 < i2 with
    beta[i1] >= beta[i2]: c=(i1, j-1), a=(i1, j), b=(i2, j) for 1 <= j <= beta[i2].
    Type B uses beta[i1] < beta[i2]: b=(i1, j), c=(i2, j), a=(i2, j+1) for
    0 <= j <= beta[i1].
    """
    k = len(beta)
    for i1 in range(1, k + 1):
        for i2 in range(i1 + 1, k + 1):
            if beta[i1 - 1] >= beta[i2 - 1]:
                for j in range(1, beta[i2 - 1] + 1):
                    yield "A", (i1, j), (i2, j), (i1, j - 1)
            else:
                for j in range(0, beta[i1 - 1] + 1):
                    yield "B", (i2, j + 1), (i1, j), (i2, j)


def list_triples(S: SkewFilling) -> list[Triple]:
    return [
        Triple(kind, S.entry(*ca), S.entry(*cb), S.entry(*cc), (ca, cb, cc))
        for kind, ca, cb, cc in triple_cells(S.beta)
    ]


def is_inversion(t: Triple) -> bool:
    """b <= a < c  or  a < c <= b."""
    a, b, c = t.a, t.b, t.c
    return (b <= a < c) or (a < c <= b)


def column_word(S: SkewFilling) -> Word:
    return tuple(S.entry(i, j) for i, j in S.filled_cells())


def lr_skew_violations(S: SkewFilling) -> list[Violation]:
    """Every way ``S`` fails to be an LR skew RCT (empty list when it is one)."""
    out = []
    for i, row in enumerate(S.rows, start=1):
        g = S.gamma[i - 1]
        for t in range(1, len(row)):
            if not row[t] < row[t - 1]:
                out.append(Violation("row strictly decreasing", ((i, g + t), (i, g + t + 1))))
    for t in list_triples(S):
        if not is_inversion(t):
            out.append(Violation(
                f"type {t.kind} triple not an inversion triple", t.cells,
                f"a={t.a!r}, b={t.b!r}, c={t.c!r}",
            ))
    if not is_regular_reverse_lattice(column_word(S)):
        out.append(Violation("column word not a regular reverse lattice word", ()))
    return out


def column_strict_violations(S: SkewFilling) -> list[Violation]:
    """Failures of the column-strict lattice condition.

    For every value v >= 2 and column j, the number of (v-1)'s in columns
    <= j must not exceed the number of v's in columns < j. The plain lattice
    condition lets a v-1 sit above a v in the same column; this one does
    not. Fillings produced by the bijection always satisfy it.
    """
    width = max(S.beta, default=0)
    top = max((x for r in S.rows for x in r), default=0)
    per_col = [[0] * (top + 2) for _ in range(width + 1)]
    for i, j in S.filled_cells():
        per_col[j][S.entry(i, j)] += 1
    out = []
    for v in range(2, top + 1):
        left_v = 0
        upto_prev = 0
        for j in range(1, width + 1):
            upto_prev += per_col[j][v - 1]
            if upto_prev > left_v:
                out.append(Violation(
                    "column-strict lattice", (),
                    f"{upto_prev} entries {v - 1} in columns <= {j} but {left_v} entries {v} left of column {j}",
                ))
                break
            left_v += per_col[j][v]
    return out


def validate_lr_skew(S: SkewFilling, column_strict: bool = False) -> list[Violation]:
    """Violations of the LR skew conditions; ``column_strict`` adds :func:`column_strict_violations`."""
    out = lr_skew_violations(S)
    if column_strict:
        out += column_strict_violations(S)
    return out


def is_lr_skew(S: SkewFilling, column_strict: bool = False) -> bool:
    return not validate_lr_skew(S, column_strict)


def gammas(beta: Sequence[int], alpha: Sequence[int]) -> Iterator[Composition]:
    """Weak compositions gamma of length len(beta), inside beta, with strong part alpha."""
    k, a = len(beta), len(alpha)
    for slots in combinations(range(k), a):
        gamma = [0] * k
        for s, p in zip(slots, alpha):
            gamma[s] = p
        if all(g <= b for g, b in zip(gamma, beta)):
            yield tuple(gamma)


def enumerate_lr_skew(
    beta: Sequence[int], alpha: Sequence[int], lam: Sequence[int], column_strict: bool = False
) -> Iterator[SkewFilling]:
    """All LR skew RCTs of shape beta/alpha with content reverse(lam).

    With ``column_strict`` only fillings that also pass
    :func:`column_strict_violations` are produced.

    For each admissible gamma the non-skewed boxes are filled in column
    reading order. Partial fillings are cut as soon as a row stops
    decreasing, the column-word prefix stops being a reverse lattice word, a
    value is used more often than the content allows, or a triple whose
    boxes are all known fails.
    """
    beta, alpha, lam = as_strong(beta), as_strong(alpha), as_partition(lam)
    if sum(beta) != sum(alpha) + sum(lam):
        return
    target = reverse_partition(lam)
    top = len(target)
    for gamma in gammas(beta, alpha):
        for S in _fill_skew(beta, gamma, target, top):
            if not column_strict or not column_strict_violations(S):
                yield S


def _fill_skew(beta, gamma, target, top) -> Iterator[SkewFilling]:
    k = len(beta)
    order = sorted(
        ((i, j) for i in range(1, k + 1) for j in range(gamma[i - 1] + 1, beta[i - 1] + 1)),
        key=col_order_key,
    )
    rank = {c: n for n, c in enumerate(order)}
    grid: dict[Cell, int] = {}

    def val(cell: Cell):
        return grid[cell] if cell in rank else Inf(cell[1])

    # attach each triple to the filled box that completes it; all-infinite
    # triples are decided now
    pending: dict[int, list[tuple[Cell, Cell, Cell]]] = {}
    for _, ca, cb, cc in triple_cells(beta):
        known = [rank[c] for c in (ca, cb, cc) if c in rank]
        if not known:
            a, b, c = Inf(ca[1]), Inf(cb[1]), Inf(cc[1])
            if not ((b <= a < c) or (a < c <= b)):
                return
            continue
        pending.setdefault(max(known), []).append((ca, cb, cc))

    counts = [0] * (top + 2)

    def fill(pos: int) -> Iterator[SkewFilling]:
        if pos == len(order):
            rows = tuple(
                tuple(grid[(i, j)] for j in range(gamma[i - 1] + 1, beta[i - 1] + 1))
                for i in range(1, k + 1)
            )
            yield SkewFilling(beta, gamma, rows)
            return
        i, j = order[pos]
        left = (i, j - 1)
        hi = top if left not in rank else min(top, grid[left] - 1)
        for v in range(1, hi + 1):
            if counts[v] == target[v - 1]:
                continue
            # reverse lattice prefix: one more v must not outnumber the v+1's
            if v < top and counts[v + 1] < counts[v] + 1:
                continue
            grid[(i, j)] = v
            good = True
            for ca, cb, cc in pending.get(pos, ()):
                a, b, c = val(ca), val(cb), val(cc)
                if not ((b <= a < c) or (a < c <= b)):
                    good = False
                    break
            if good:
                counts[v] += 1
                yield from fill(pos + 1)
                counts[v] -= 1
        grid.pop((i, j), None)

    yield from fill(0)


def enumerate_lr_skew_naive(
    beta: Sequence[int], alpha: Sequence[int], lam: Sequence[int], column_strict: bool = False
) -> set[SkewFilling]:
    """Brute-force oracle: every gamma, every filling with entries <= len(lam)."""
    beta, alpha, lam = as_strong(beta), as_strong(alpha), as_partition(lam)
    if sum(beta) != sum(alpha) + sum(lam):
        return set()
    target = reverse_partition(lam)
    n = sum(lam)
    out = set()
    for gamma in gammas(beta, alpha):
        for vals in product(range(1, len(lam) + 1), repeat=n):
            if content(vals) != target:
                continue
            it = iter(vals)
            rows = tuple(tuple(next(it) for _ in range(b - g)) for b, g in zip(beta, gamma))
            S = SkewFilling(beta, gamma, rows)
            if is_lr_skew(S, column_strict):
                out.add(S)
    return out


def lr_content(S: SkewFilling) -> Partition:
    """The partition lam with content(column word) == reverse(lam)."""
    return reverse_partition(content(column_word(S)))
