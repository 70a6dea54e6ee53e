"""Reverse row-strict tableaux and the RSK correspondence.

A reverse row-strict tableau (RRST) has partition shape, rows strictly
decreasing left to right and columns weakly decreasing top to bottom.
Schensted insertion here bumps the *largest* entry that is <= the incoming
letter, which keeps both conditions.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .core import Cell, InvalidTableauError, Partition, Violation, Word, as_word


def _rows(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in r) for r in rows)


def rrst_violations(rows: Sequence[Sequence[int]]) -> list[Violation]:
    """Every way ``rows`` fails to be an RRST; empty list when it is one.

    Raises ValueError if the row lengths do not form a partition, since then
    there is no shape to speak of.
    """
    rows = _rows(rows)
    lengths = [len(r) for r in rows]
    if any(n == 0 for n in lengths) or any(
        lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)
    ):
        raise ValueError(f"row lengths {lengths} are not a partition shape")
    out = []
    for i, row in enumerate(rows, start=1):
        for j, x in enumerate(row, start=1):
            if x < 1:
                out.append(Violation("positive entries", ((i, j),)))
            if j > 1 and not x < row[j - 2]:
                out.append(Violation("row strictly decreasing", ((i, j - 1), (i, j))))
            if i > 1 and x > rows[i - 2][j - 1]:
                out.append(Violation("column weakly decreasing", ((i - 1, j), (i, j))))
    return out


@dataclass(frozen=True)
class RRST:
    """Reverse row-strict tableau stored as a tuple of rows."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", _rows(self.rows))
        bad = rrst_violations(self.rows)
        if bad:
            raise InvalidTableauError("RRST", bad)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def column_word(self) -> Word:
        """Entries read bottom to top in each column, left to right."""
        width = len(self.rows[0]) if self.rows else 0
        return tuple(
            self.rows[i][j]
            for j in range(width)
            for i in reversed(range(len(self.rows)))
            if len(self.rows[i]) > j
        )

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> RRST:
        return cls(data["rows"])

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows) or "(empty)"


def validate_rrst(rows: Sequence[Sequence[int]]) -> list[Violation]:
    return rrst_violations(rows)


def t_lambda(mu: Sequence[int]) -> RRST:
    """Column-superstandard RRST of shape ``mu``: column j holds mu_1 + 1 - j."""
    if not mu:
        return RRST()
    m = mu[0]
    return RRST([[m + 1 - j for j in range(1, p + 1)] for p in mu])


@dataclass(frozen=True)
class TwoLineArray:
    """Biword with weakly decreasing upper row.

    Within a block of equal upper letters the lower letters weakly increase.
    """

    upper: Word = ()
    lower: Word = ()

    def __post_init__(self):
        upper, lower = as_word(self.upper), as_word(self.lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower", lower)
        if len(upper) != len(lower):
            raise ValueError("upper and lower rows differ in length")
        for r in range(len(upper) - 1):
            if upper[r] < upper[r + 1]:
                raise ValueError(f"upper row must weakly decrease: {upper}")
            if upper[r] == upper[r + 1] and lower[r] > lower[r + 1]:
                raise ValueError(
                    f"lower row must weakly increase where the upper row is constant "
                    f"(position {r})"
                )

    def __len__(self) -> int:
        return len(self.upper)

    def to_json(self) -> dict:
        return {"upper": list(self.upper), "lower": list(self.lower)}

    @classmethod
    def from_json(cls, data: dict) -> TwoLineArray:
        return cls(tuple(data["upper"]), tuple(data["lower"]))


def _insert_rows(rows: list[list[int]], b: int) -> Cell:
    """Schensted-insert ``b`` into mutable ``rows``; return the new cell."""
    for i, row in enumerate(rows):
        # rows strictly decrease, so the first entry <= b is the largest such
        for j, x in enumerate(row):
            if x <= b:
                row[j], b = b, x
                break
        else:
            row.append(b)
            return (i + 1, len(row))
    rows.append([b])
    return (len(rows), 1)


def schensted_insert(T: RRST, b: int) -> tuple[RRST, Cell]:
    """Row-insert ``b`` into ``T``; returns the new tableau and the added cell."""
    rows = [list(r) for r in T.rows]
    cell = _insert_rows(rows, b)
    return RRST(rows), cell


def rsk_forward(A: TwoLineArray) -> tuple[RRST, RRST]:
    """Insert the lower row into the empty tableau, recording the upper row."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for up, low in zip(A.upper, A.lower):
        i, j = _insert_rows(P, low)
        if i > len(Q):
            Q.append([])
        Q[i - 1].append(up)
        assert len(Q[i - 1]) == j
    return RRST(P), RRST(Q)


def _uninsert_rows(rows: list[list[int]], i: int) -> int:
    """Remove the last cell of row ``i`` (1-based) and reverse-bump to the top."""
    y = rows[i - 1].pop()
    if not rows[i - 1]:
        rows.pop(i - 1)
    for r in range(i - 2, -1, -1):
        row = rows[r]
        # the letter that bumped y is the smallest entry >= y
        for j in range(len(row) - 1, -1, -1):
            if row[j] >= y:
                row[j], y = y, row[j]
                break
        else:
            raise ValueError(f"row {r + 1} has no entry >= {y}; not an insertion tableau")
    return y


def rsk_inverse(P: RRST, Q: RRST) -> TwoLineArray:
    """Recover the two-line array whose RSK image is ``(P, Q)``.

    Cells are removed in reverse recording order: the smallest value of Q
    first, and among equal values the lowest row (equal values of an RRST
    form a vertical strip filled top to bottom).
    """
    if P.shape != Q.shape:
        raise ValueError(f"shape mismatch: {P.shape} vs {Q.shape}")
    prows = [list(r) for r in P.rows]
    qrows = [list(r) for r in Q.rows]
    upper: list[int] = []
    lower: list[int] = []
    while qrows:
        # row ends hold each row's minimum; pick the lowest row among the smallest
        low = min(row[-1] for row in qrows)
        i = max(r for r, row in enumerate(qrows, start=1) if row[-1] == low)
        if i < len(qrows) and len(qrows[i]) == len(qrows[i - 1]):
            raise ValueError(f"cell at end of row {i} of Q is not a corner")
        qrows[i - 1].pop()
        if not qrows[i - 1]:
            qrows.pop(i - 1)
        lower.append(_uninsert_rows(prows, i))
        upper.append(low)
    upper.reverse()
    lower.reverse()
    try:
        return TwoLineArray(tuple(upper), tuple(lower))
    except ValueError as exc:
        raise ValueError(f"Q is not a valid recording tableau: {exc}") from exc
