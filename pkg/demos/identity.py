"""Check the LR identity polynomially, including where the literal rule over-counts.

With |lambda| <= 3 the counting rule matches the exact expansion. At
lambda = (2, 2) one extra filling satisfies the stated conditions; adding
the column-strict lattice condition removes it.
"""

from rsqsym import verify_lr_identity
from rsqsym.core import compositions, partitions

bad = [(a, l) for s in range(4) for a in compositions(s) for t in range(4)
       for l in partitions(t) if not verify_lr_identity(a, l).ok]
print("alpha <= 3, lambda <= 3 failures:", bad)

for strict in (False, True):
    r = verify_lr_identity((), (2, 2), column_strict=strict)
    print(f"lambda=(2,2) column_strict={strict}: ok={r.ok} coefficients={r.coefficients}")
    for m in r.mismatches:
        if m["kind"] == "coefficient":
            print("   mismatch", m)
