"""LR coefficients for RS_alpha * s_lambda, with the fillings that realize them."""

import sys

from rsqsym import enumerate_lr_skew, lr_coefficients

alpha = tuple(int(x) for x in sys.argv[1].split(",")) if len(sys.argv) > 1 else (1, 2)
lam = tuple(int(x) for x in sys.argv[2].split(",")) if len(sys.argv) > 2 else (2, 1)

print(f"RS_{alpha} * s_{lam} =")
for beta, c in sorted(lr_coefficients(alpha, lam).items()):
    print(f"  {c} * RS_{beta}")
    for S in enumerate_lr_skew(beta, alpha, lam):
        print(f"      gamma={S.gamma} rows={S.rows}")
