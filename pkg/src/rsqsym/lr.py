"""The bijection [U, T] <-> [V, S] behind RS_alpha * s_lam = sum C RS_beta.

Forward: un-RSK the pair (T, column-superstandard tableau of shape
lam^t) into a two-line array, insert its lower row into U, and write each
upper letter into the skew filling at the box the insertion created.
Backward: read S value by value (1 first, each value in column reading
order) and un-insert the matching boxes of V.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .core import (
    Composition,
    Partition,
    as_partition,
    as_strong,
    col_order_key,
    compositions,
    transpose,
)
from .qsym import InconsistentExpansion, QPolynomial, expand_in_rs_basis, rs_polynomial, schur_polynomial
from .rct import RCT, rct_insert, rct_uninsert
from .skew import SkewFilling, column_strict_violations, enumerate_lr_skew, is_lr_skew, lr_content
from .tableaux import RRST, TwoLineArray, rsk_forward, rsk_inverse, t_lambda


class InvalidPairError(ValueError):
    """The input pair is not in the domain of the bijection."""


@dataclass(frozen=True)
class PairUT:
    U: RCT
    T: RRST
    alpha: Composition
    lam: Partition

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_strong(self.alpha))
        object.__setattr__(self, "lam", as_partition(self.lam))
        if self.U.shape != self.alpha:
            raise InvalidPairError(f"U has shape {self.U.shape}, expected {self.alpha}")
        if self.T.shape != transpose(self.lam):
            raise InvalidPairError(
                f"T has shape {self.T.shape}, expected transpose of {self.lam}"
            )

    def to_json(self) -> dict:
        return {
            "U": self.U.to_json(),
            "T": self.T.to_json(),
            "alpha": list(self.alpha),
            "lambda": list(self.lam),
        }

    @classmethod
    def from_json(cls, data: dict) -> PairUT:
        return cls(RCT.from_json(data["U"]), RRST.from_json(data["T"]),
                   tuple(data["alpha"]), tuple(data["lambda"]))


@dataclass(frozen=True)
class PairVS:
    V: RCT
    S: SkewFilling

    def __post_init__(self):
        if self.V.shape != self.S.beta:
            raise InvalidPairError(f"V has shape {self.V.shape} but S has outer shape {self.S.beta}")

    def to_json(self) -> dict:
        return {"V": self.V.to_json(), "S": self.S.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> PairVS:
        return cls(RCT.from_json(data["V"]), SkewFilling.from_json(data["S"]))


def recording_tableau(lam: Sequence[int]) -> RRST:
    """The fixed recording tableau paired with T: column-superstandard of shape lam^t."""
    return t_lambda(transpose(lam))


def rho_forward(pair: PairUT) -> PairVS:
    A = rsk_inverse(pair.T, recording_tableau(pair.lam))
    V = pair.U
    gamma = list(pair.alpha)
    srows: list[list[int]] = [[] for _ in gamma]
    for up, low in zip(A.upper, A.lower):
        res = rct_insert(V, low)
        V = res.result
        i, j = res.new_box
        if j == 1:
            gamma.insert(i - 1, 0)
            srows.insert(i - 1, [up])
        else:
            srows[i - 1].append(up)
    S = SkewFilling(V.shape, tuple(gamma), tuple(map(tuple, srows)))
    return PairVS(V, S)


def rho_inverse(pair: PairVS) -> PairUT:
    """Undo :func:`rho_forward` using S to decide which box to un-insert next."""
    S = pair.S
    if not is_lr_skew(S):
        raise InvalidPairError("S is not an LR skew RCT")
    lam = lr_content(S)
    V = pair.V
    gamma = list(S.gamma)
    srows = [list(r) for r in S.rows]
    upper: list[int] = []
    lower: list[int] = []
    top = max((x for r in srows for x in r), default=0)
    for v in range(1, top + 1):
        while True:
            hits = [
                (i, gamma[i - 1] + t + 1)
                for i, r in enumerate(srows, start=1)
                for t, x in enumerate(r)
                if x == v
            ]
            if not hits:
                break
            i, j = min(hits, key=col_order_key)
            if j != gamma[i - 1] + len(srows[i - 1]):
                raise InvalidPairError(f"box {(i, j)} holding {v} is not at the end of its row")
            try:
                V, k = rct_uninsert(V, i)
            except ValueError as exc:
                raise InvalidPairError(str(exc)) from exc
            srows[i - 1].pop()
            if j == 1:
                del srows[i - 1]
                del gamma[i - 1]
            upper.append(v)
            lower.append(k)
    if V.shape != tuple(gamma):
        raise InvalidPairError(f"residual tableau has shape {V.shape}, expected {tuple(gamma)}")
    try:
        A = TwoLineArray(tuple(reversed(upper)), tuple(reversed(lower)))
    except ValueError as exc:
        raise InvalidPairError(f"un-insertion did not produce a two-line array: {exc}") from exc
    T, Q = rsk_forward(A)
    if Q != recording_tableau(lam):
        hint = "; S also fails the column-strict lattice condition" if column_strict_violations(S) else ""
        raise InvalidPairError(f"recording tableau is not column-superstandard{hint}")
    return PairUT(RCT(V.rows), T, V.shape, lam)


def lr_coefficient(
    alpha: Sequence[int], lam: Sequence[int], beta: Sequence[int], column_strict: bool = False
) -> int:
    """Number of LR skew RCTs of shape beta/alpha with content reverse(lam).

    ``column_strict`` counts only fillings that also satisfy the
    column-strict lattice condition (see :mod:`rsqsym.skew`).
    """
    alpha, lam, beta = as_strong(alpha), as_partition(lam), as_strong(beta)
    if sum(beta) != sum(alpha) + sum(lam):
        return 0
    return sum(1 for _ in enumerate_lr_skew(beta, alpha, lam, column_strict))


def lr_coefficients(
    alpha: Sequence[int], lam: Sequence[int], column_strict: bool = False
) -> dict[Composition, int]:
    """Nonzero coefficients over all beta of size |alpha| + |lam|."""
    d = sum(alpha) + sum(lam)
    out = {}
    for beta in compositions(d):
        c = lr_coefficient(alpha, lam, beta, column_strict)
        if c:
            out[beta] = c
    return out


@dataclass
class IdentityReport:
    alpha: Composition
    lam: Partition
    n: int
    equal: bool
    coefficients: dict[Composition, int]
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.equal and not self.mismatches

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "lambda": list(self.lam),
            "n": self.n,
            "equal": self.equal,
            "coefficients": [
                {"beta": list(b), "coef": c} for b, c in sorted(self.coefficients.items())
            ],
            "mismatches": self.mismatches,
        }


def product_polynomial(alpha: Sequence[int], lam: Sequence[int], n: int) -> QPolynomial:
    return rs_polynomial(alpha, n) * schur_polynomial(lam, n)


def verify_lr_identity(
    alpha: Sequence[int], lam: Sequence[int], column_strict: bool = False
) -> IdentityReport:
    """Check RS_alpha * s_lam == sum_beta C * RS_beta exactly in n = |alpha| + |lam| variables.

    Mismatches carry either differing monomials of the two sides or
    coefficients on which the counting and the linear-algebra expansion
    disagree.
    """
    alpha, lam = as_strong(alpha), as_partition(lam)
    d = sum(alpha) + sum(lam)
    n = max(d, 1)
    lhs = product_polynomial(alpha, lam, n)
    coeffs = lr_coefficients(alpha, lam, column_strict)
    rhs = QPolynomial(n)
    for beta, c in coeffs.items():
        rhs = rhs + rs_polynomial(beta, n) * c
    mismatches = []
    diff = lhs - rhs
    for e, c in diff.sorted_terms():
        mismatches.append({"kind": "monomial", "exp": list(e), "lhs": lhs.coefficient(e),
                           "rhs": rhs.coefficient(e)})
    try:
        expanded = expand_in_rs_basis(lhs, d, n)
    except InconsistentExpansion as exc:
        mismatches.append({"kind": "expansion", "detail": str(exc)})
    else:
        for beta in sorted(set(expanded) | set(coeffs)):
            if expanded.get(beta, 0) != coeffs.get(beta, 0):
                mismatches.append({"kind": "coefficient", "beta": list(beta),
                                   "count": coeffs.get(beta, 0),
                                   "expansion": expanded.get(beta, 0)})
    return IdentityReport(alpha, lam, n, diff.is_zero(), coeffs, mismatches)

