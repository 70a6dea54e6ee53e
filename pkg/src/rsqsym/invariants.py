"""Executable forms of the structural facts about RCT insertion.

Each ``check_*`` function returns a list of human-readable failures; an
empty list means the property held on that input. The test suite drives
them with random tableaux, and they are handy for exploring by hand.
"""

from __future__ import annotations

from collections.abc import Sequence

from .core import Cell, col_order_less
from .rct import RCT, InsertionResult, ScanTrace, rct_insert, rct_uninsert, rct_violations


def shift_after(cell: Cell, step: InsertionResult) -> Cell:
    """Where ``cell`` ends up after a later insertion step (rows may shift down)."""
    i, j = cell
    if step.new_row and i >= step.new_box[0]:
        return (i + 1, j)
    return cell


def final_boxes(steps: Sequence[InsertionResult]) -> list[Cell]:
    """New box of each step, expressed in the coordinates of the last tableau."""
    out = []
    for t, step in enumerate(steps):
        cell = step.new_box
        for later in steps[t + 1:]:
            cell = shift_after(cell, later)
        out.append(cell)
    return out


def check_path_rows(U: RCT, b: int) -> list[str]:
    res = rct_insert(U, b)
    rows = [i for i, _ in res.path]
    dup = {i for i in rows if rows.count(i) > 1}
    return [f"row {i} holds {rows.count(i)} path boxes" for i in sorted(dup)]


def check_last_row(U: RCT, b: int) -> list[str]:
    res = rct_insert(U, b)
    shape = res.result.shape
    i = res.augmented_row
    return [
        f"row {r} below augmented row {i} also has length {shape[i - 1]}"
        for r in range(i + 1, len(shape) + 1)
        if shape[r - 1] == shape[i - 1]
    ]


def check_bumping(U: RCT, a: int, b: int, c: int) -> list[str]:
    """New boxes and paths of c lie weakly left of b's, those of a strictly right."""
    if not a < b <= c:
        raise ValueError("need a < b <= c")
    out = []
    rb = rct_insert(U, b)
    for x, later_ok, name in ((c, lambda jx, jb: jx <= jb, "c"), (a, lambda jx, jb: jx > jb, "a")):
        rx = rct_insert(rb.result, x)
        if not later_ok(rx.new_box[1], rb.new_box[1]):
            out.append(f"new box of {name}={x} in column {rx.new_box[1]}, b's in {rb.new_box[1]}")
        bpath = {}
        for cell in rb.path:
            i, j = shift_after(cell, rx)
            bpath[i] = j
        for i, jx in rx.path:
            if i in bpath and not later_ok(jx, bpath[i]):
                out.append(f"row {i}: path of {name} in column {jx}, path of b in {bpath[i]}")
    return out


def _v(trace: ScanTrace, i: int, j: int) -> int:
    # cells past the stop read as 0, matching the convention of the lemma
    v = trace.value(i, j)
    return 0 if v is None else v


def check_scanning_values(U: RCT, a: int, b: int, c: int) -> list[str]:
    """Scanning values of b are <= those of c and > those of a (shifted one column)."""
    if not a < b <= c:
        raise ValueError("need a < b <= c")
    k = len(U.rows)
    m = max(U.shape, default=0)
    rb = rct_insert(U, b)
    ib, jb = rb.new_box
    tb = rb.trace
    tc = rct_insert(rb.result, c).trace
    ta = rct_insert(rb.result, a).trace
    out = []

    def need(ok: bool, what: str):
        if not ok:
            out.append(what)

    if jb > 1:
        cols_c = [(jb, range(ib + 1))] + [(j, range(k + 1)) for j in range(jb + 1, m + 1)]
        for j, rows in cols_c:
            for i in rows:
                need(_v(tb, i, j) <= _v(tc, i, j), f"b[{i},{j}]={_v(tb, i, j)} > c[{i},{j}]={_v(tc, i, j)}")
        cols_a = [(jb, range(ib + 1))] + [(j, range(k + 1)) for j in range(jb + 1, m + 1)]
        for j, rows in cols_a:
            for i in rows:
                need(_v(tb, i, j) > _v(ta, i, j + 1),
                     f"b[{i},{j}]={_v(tb, i, j)} <= a[{i},{j + 1}]={_v(ta, i, j + 1)}")
    else:
        for j in range(1, m + 2):
            for i in range(ib + 1):
                need(_v(tb, i, j) <= _v(tc, i, j), f"b[{i},{j}] > c[{i},{j}]")
        for j in range(2, m + 2):
            for i in range(ib, k + 2):
                need(_v(tb, i, j) <= _v(tc, i + 1, j), f"b[{i},{j}] > c[{i + 1},{j}]")
        for j in range(1, m + 1):
            for i in range(ib + 1):
                need(_v(tb, i, j) > _v(ta, i, j + 1), f"b[{i},{j}] <= a[{i},{j + 1}]")
        for j in range(2, m + 2):
            for i in range(ib, k + 2):
                need(_v(tb, i, j) > _v(ta, i + 1, j + 1), f"b[{i},{j}] <= a[{i + 1},{j + 1}]")
    return out


def check_knuth(U: RCT, a: int, b: int, c: int) -> list[str]:
    """U <- b c a equals U <- b a c, with each letter's box in the same place."""
    if not a < b <= c:
        raise ValueError("need a < b <= c")
    steps1, steps2 = [], []
    V1, V2 = U, U
    for x in (b, c, a):
        steps1.append(rct_insert(V1, x))
        V1 = steps1[-1].result
    for x in (b, a, c):
        steps2.append(rct_insert(V2, x))
        V2 = steps2[-1].result
    out = []
    if V1 != V2:
        out.append(f"results differ: {V1.rows} vs {V2.rows}")
    f1 = dict(zip("bca", final_boxes(steps1)))
    f2 = dict(zip("bac", final_boxes(steps2)))
    for name in "abc":
        if f1[name] != f2[name]:
            out.append(f"box of {name} at {f1[name]} vs {f2[name]}")
    return out


def check_reading_order(U: RCT, word: Sequence[int]) -> list[str]:
    """For a weakly increasing word the new boxes come out in decreasing column order."""
    if any(word[t] > word[t + 1] for t in range(len(word) - 1)):
        raise ValueError("word must be weakly increasing")
    steps = []
    V = U
    for x in word:
        steps.append(rct_insert(V, x))
        V = steps[-1].result
    boxes = final_boxes(steps)
    return [
        f"B{t + 2}={boxes[t + 1]} is not before B{t + 1}={boxes[t]} in column order"
        for t in range(len(boxes) - 1)
        if not col_order_less(boxes[t + 1], boxes[t])
    ]


def check_round_trip(U: RCT, b: int) -> list[str]:
    """Un-inserting at the augmented row gives back U and b, and re-inserting agrees."""
    res = rct_insert(U, b)
    out = []
    W, k = rct_uninsert(res.result, res.augmented_row)
    if (W, k) != (U, b):
        out.append(f"un-insert gave {W.rows}, {k}; expected {U.rows}, {b}")
    again = rct_insert(W, k)
    if again.result != res.result or again.new_box != res.new_box:
        out.append("re-insertion does not reproduce the tableau and box")
    return out


def check_uninsert_round_trip(V: RCT, row: int) -> list[str]:
    """Un-insert at a valid row of V and insert the letter back."""
    W, k = rct_uninsert(V, row)
    res = rct_insert(W, k)
    out = []
    if res.result != V:
        out.append(f"{W.rows} <- {k} gave {res.result.rows}, expected {V.rows}")
    elif res.augmented_row != row:
        out.append(f"re-insertion augmented row {res.augmented_row}, expected {row}")
    return out


def uninsertable_rows(V: RCT) -> list[int]:
    """Rows that are the lowest of their length."""
    shape = V.shape
    return [i for i in range(1, len(shape) + 1) if shape[i - 1] not in shape[i:]]


def check_hand_decreasing(U: RCT, b: int) -> list[str]:
    """The value in hand never increases along the scan."""
    seq = rct_insert(U, b).trace.bumped()
    return [f"hand increased: {seq}"] if any(x < y for x, y in zip(seq, seq[1:])) else []


def check_result_valid(U: RCT, b: int) -> list[str]:
    """Insertion and un-insertion both return genuine RCTs."""
    res = rct_insert(U, b)
    out = [f"insert: {v.rule} at {v.cells}" for v in rct_violations(res.result.rows)]
    W, _ = rct_uninsert(res.result, res.augmented_row)
    out += [f"un-insert: {v.rule} at {v.cells}" for v in rct_violations(W.rows)]
    return out
