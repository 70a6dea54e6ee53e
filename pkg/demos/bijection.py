"""The bijection (U, T) <-> (V, S) on the worked example with alpha=(1,3,2,2), lambda=(3,2,1,1)."""

from rsqsym import RCT, RRST, PairUT, rho_forward, rho_inverse
from rsqsym.skew import column_word

U = RCT([[1], [4, 3, 2], [5, 4], [5, 3]])
T = RRST([[4, 3, 2, 1], [4, 3], [2]])
pair = PairUT(U, T, (1, 3, 2, 2), (3, 2, 1, 1))

out = rho_forward(pair)
print("V            =", out.V.rows)
print("S.beta       =", out.S.beta)
print("S.gamma      =", out.S.gamma)
print("S rows       =", out.S.rows)
print("column word  =", "".join(map(str, column_word(out.S))))

back = rho_inverse(out)
print("round trip   =", back == pair)
