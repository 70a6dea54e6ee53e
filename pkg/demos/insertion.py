"""Insert a letter into an RCT and show the scan, the path and the un-insertion."""

from rsqsym import RCT, rct_insert, rct_uninsert

U = RCT([[1], [3], [4, 3, 2], [5, 4, 2], [5, 4]])
res = rct_insert(U, 4)

print("U          =", U.rows)
print("U <- 4     =", res.result.rows)
print("new box    =", res.new_box, "augmented row", res.augmented_row)
print("path       =", sorted(res.path))
print("bumped     =", res.trace.bumped())

W, letter = rct_uninsert(res.result, res.augmented_row)
print("un-insert  =", W.rows, "letter", letter)
assert (W, letter) == (U, 4)
