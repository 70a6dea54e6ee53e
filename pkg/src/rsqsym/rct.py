"""Row-strict composition tableaux (RCT) and their insertion algorithm.

An RCT of strong composition shape alpha is a filling with

1. the first column weakly increasing top to bottom,
2. every row strictly decreasing left to right,
3. the triple rule: pad every row with zeros to a k x m rectangle; for rows
   i1 < i2 and columns j >= 2, if b = U(i2, j) is nonzero and b > a = U(i1, j)
   then b >= c = U(i1, j - 1).

Insertion ``U <- b`` scans the columns right to left, each column top to
bottom, starting one column right of the longest row. The value in hand
either drops into an empty cell at the end of a row of length j - 1 (when it
is smaller than that row's last entry), or bumps an entry ``x <= hand`` whose
left neighbour is larger than the hand. A value that survives to column 1
starts a new row just below the last first-column entry that is <= it.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import product

from .core import (
    Cell,
    Composition,
    InvalidTableauError,
    Violation,
    Word,
    as_strong,
    as_word,
    col_order_key,
)


def rct_violations(rows: Sequence[Sequence[int]]) -> list[Violation]:
    """List every failed RCT condition of ``rows`` (empty when valid)."""
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if any(len(r) == 0 for r in rows):
        raise ValueError("RCT rows must be nonempty")
    out = []
    k = len(rows)
    m = max((len(r) for r in rows), default=0)
    for i, row in enumerate(rows, start=1):
        for j, x in enumerate(row, start=1):
            if x < 1:
                out.append(Violation("positive entries", ((i, j),)))
            if j > 1 and not x < row[j - 2]:
                out.append(Violation("row strictly decreasing", ((i, j - 1), (i, j))))
    for i in range(1, k):
        if rows[i - 1][0] > rows[i][0]:
            out.append(Violation("first column weakly increasing", ((i, 1), (i + 1, 1))))

    def padded(i: int, j: int) -> int:
        row = rows[i - 1]
        return row[j - 1] if j <= len(row) else 0

    for j in range(2, m + 1):
        for i2 in range(2, k + 1):
            b = padded(i2, j)
            if b == 0:
                continue
            for i1 in range(1, i2):
                if b > padded(i1, j) and b < padded(i1, j - 1):
                    out.append(
                        Violation(
                            "triple rule", ((i1, j - 1), (i1, j), (i2, j)),
                            f"b={b} > a={padded(i1, j)} but b < c={padded(i1, j - 1)}",
                        )
                    )
    return out


def validate_rct(rows: Sequence[Sequence[int]]) -> list[Violation]:
    return rct_violations(rows)


@dataclass(frozen=True)
class RCT:
    """A row-strict composition tableau; construction validates."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        bad = rct_violations(rows)
        if bad:
            raise InvalidTableauError("RCT", bad)

    @classmethod
    def _trusted(cls, rows) -> RCT:
        # skips validation; only for rows produced by insertion/un-insertion
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", tuple(tuple(r) for r in rows))
        return obj

    @property
    def shape(self) -> Composition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def column_word(self) -> Word:
        m = max(self.shape, default=0)
        return tuple(
            self.rows[i][j]
            for j in range(m)
            for i in reversed(range(len(self.rows)))
            if len(self.rows[i]) > j
        )

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> RCT:
        rct = cls(data["rows"])
        if "shape" in data and tuple(data["shape"]) != rct.shape:
            raise ValueError(f"declared shape {data['shape']} does not match rows")
        return rct

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows) or "(empty)"


@dataclass(frozen=True)
class ScanTrace:
    """Values in hand during one insertion, indexed by the scanned cell.

    ``value(i, j)`` is the value in hand when the scan reaches row ``i`` of
    column ``j`` of the tableau being inserted into. Row 0 is the value that
    starts the column and row ``k + 1`` the value that leaves it. Columns to
    the right of the starting column report the inserted letter. Cells the
    scan never reached (after the stop) return ``None``.
    """

    letter: int
    start_column: int
    nrows: int
    values: dict[Cell, int] = field(repr=False)

    def value(self, i: int, j: int) -> int | None:
        if j > self.start_column:
            return self.letter
        return self.values.get((i, j))

    def bumped(self) -> list[int]:
        """Successive values in hand along the scan, in scanning order."""
        seq = [self.letter]
        for (i, j) in sorted(self.values, key=lambda c: (-c[1], c[0])):
            v = self.values[(i, j)]
            if v != seq[-1]:
                seq.append(v)
        return seq


@dataclass(frozen=True)
class InsertionResult:
    result: RCT
    new_box: Cell
    path: tuple[Cell, ...]
    augmented_row: int
    trace: ScanTrace

    @property
    def new_row(self) -> bool:
        return self.new_box[1] == 1

    def to_json(self) -> dict:
        return {
            "rows": [list(r) for r in self.result.rows],
            "new_box": list(self.new_box),
            "path": [list(c) for c in self.path],
            "augmented_row": self.augmented_row,
        }


def rct_insert(U: RCT, b: int) -> InsertionResult:
    """Insert the positive integer ``b`` into ``U``.

    The path lists the cells of the result holding bumped (or placed)
    entries, in the order they were filled.
    """
    if b < 1:
        raise ValueError(f"can only insert positive integers, got {b}")
    rows = [list(r) for r in U.rows]
    k = len(rows)
    m = max((len(r) for r in rows), default=0)
    start = m + 1
    hand = b
    values: dict[Cell, int] = {}
    path: list[Cell] = []
    new_box: Cell | None = None

    for j in range(start, 1, -1):
        values[(0, j)] = hand
        for i in range(1, k + 1):
            values[(i, j)] = hand
            row = rows[i - 1]
            if len(row) == j - 1:
                if hand < row[-1]:
                    row.append(hand)
                    new_box = (i, j)
                    path.append(new_box)
                    break
            elif len(row) >= j:
                x = row[j - 1]
                if x <= hand < row[j - 2]:
                    row[j - 1], hand = hand, x
                    path.append((i, j))
        if new_box is not None:
            break
        values[(k + 1, j)] = hand

    if new_box is None:
        # rows whose first entry is <= hand form a prefix of the first column
        r = 0
        while r < k and rows[r][0] <= hand:
            r += 1
        rows.insert(r, [hand])
        new_box = (r + 1, 1)
        for i in range(r + 2):
            values[(i, 1)] = hand
        path = [(i + 1 if i > r else i, j) for (i, j) in path]
        path.append(new_box)

    trace = ScanTrace(b, start, k, values)
    return InsertionResult(RCT._trusted(rows), new_box, tuple(path), new_box[0], trace)


def rct_insert_word(U: RCT, word: Sequence[int]) -> tuple[RCT, list[InsertionResult]]:
    """Insert the letters of ``word`` left to right."""
    steps = []
    for b in as_word(word):
        res = rct_insert(U, b)
        steps.append(res)
        U = res.result
    return U, steps


def rct_uninsert(V: RCT, row: int) -> tuple[RCT, int]:
    """Undo the insertion that ended at the last cell of ``row``.

    ``row`` (1-based) must be the lowest row of its length in ``V``. Returns
    the smaller tableau and the letter that was inserted.
    """
    rows = [list(r) for r in V.rows]
    if not 1 <= row <= len(rows):
        raise ValueError(f"row {row} out of range for {len(rows)} rows")
    length = len(rows[row - 1])
    if any(len(r) == length for r in rows[row:]):
        raise ValueError(
            f"row {row} is not the lowest row of length {length}; cannot un-insert there"
        )
    y = rows[row - 1].pop()
    if length == 1:
        rows.pop(row - 1)
        first_col, first_rows = 2, range(len(rows), 0, -1)
    else:
        first_col, first_rows = length, range(row - 1, 0, -1)
    width = max((len(r) for r in rows), default=0)

    for j in range(first_col, width + 1):
        scan = first_rows if j == first_col else range(len(rows), 0, -1)
        for i in scan:
            r = rows[i - 1]
            if len(r) < j:
                continue
            right = r[j] if len(r) > j else 0
            if r[j - 1] >= y > right:
                r[j - 1], y = y, r[j - 1]
    return RCT._trusted(rows), y


def enumerate_rcts(alpha: Sequence[int], max_entry: int) -> Iterator[RCT]:
    """Every RCT of shape ``alpha`` with entries in 1..max_entry.

    Cells are filled in column reading order and candidate values tried in
    increasing order, so the output is lexicographic in the column word.
    """
    alpha = as_strong(alpha)
    k = len(alpha)
    order = sorted(
        ((i, j) for i in range(1, k + 1) for j in range(1, alpha[i - 1] + 1)),
        key=col_order_key,
    )
    grid = [[0] * p for p in alpha]

    # For each cell, the triple-rule checks that become decidable once it is
    # filled: pairs (i1, i2) in its column where this cell is the later one.
    checks: dict[Cell, list[tuple[int, int]]] = {}
    for (i, j) in order:
        todo = []
        if j >= 2:
            # this cell as the lower entry b against rows above that stop short of j
            todo += [(i1, i) for i1 in range(1, i) if alpha[i1 - 1] < j]
            # this cell as the upper entry a against filled rows below
            todo += [(i, i2) for i2 in range(i + 1, k + 1) if alpha[i2 - 1] >= j]
        checks[(i, j)] = todo

    def ok(i: int, j: int) -> bool:
        x = grid[i - 1][j - 1]
        if j > 1 and not x < grid[i - 1][j - 2]:
            return False
        if j == 1 and i < k and x > grid[i][0]:
            return False
        for i1, i2 in checks[(i, j)]:
            b = grid[i2 - 1][j - 1] if alpha[i2 - 1] >= j else 0
            a = grid[i1 - 1][j - 1] if alpha[i1 - 1] >= j else 0
            c = grid[i1 - 1][j - 2] if alpha[i1 - 1] >= j - 1 else 0
            if b and b > a and b < c:
                return False
        return True

    def fill(pos: int) -> Iterator[RCT]:
        if pos == len(order):
            yield RCT._trusted(grid)
            return
        i, j = order[pos]
        # strict rows: an entry in column j is at least alpha_i - j + 1
        lo = alpha[i - 1] - j + 1
        hi = max_entry if j == 1 else min(max_entry, grid[i - 1][j - 2] - 1)
        for v in range(lo, hi + 1):
            grid[i - 1][j - 1] = v
            if ok(i, j):
                yield from fill(pos + 1)
        grid[i - 1][j - 1] = 0

    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    yield from fill(0)


def enumerate_rcts_naive(alpha: Sequence[int], max_entry: int) -> set[RCT]:
    """Brute-force oracle: all fillings of ``alpha`` kept by the validator."""
    alpha = as_strong(alpha)
    out = set()
    for vals in product(range(1, max_entry + 1), repeat=sum(alpha)):
        it = iter(vals)
        rows = [[next(it) for _ in range(p)] for p in alpha]
        if not rct_violations(rows):
            out.add(RCT(rows))
    return out
