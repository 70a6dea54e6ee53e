"""Exact sparse polynomials over the integers and the RS / Schur generating functions.

A :class:`QPolynomial` in ``n`` variables maps exponent tuples of length
``n`` to nonzero Python ints. ``rs_polynomial`` and ``schur_polynomial``
are computed by enumerating tableaux, and ``expand_in_rs_basis`` solves for
coefficients with exact rational elimination, which gives an oracle that
shares no code with the skew-tableau count.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .core import (
    Composition,
    as_partition,
    as_strong,
    compositions,
    content,
    pad_to,
    rearrangements,
    transpose,
)
from .rct import enumerate_rcts

Exponent = tuple[int, ...]


class QPolynomial:
    """Immutable sparse polynomial with integer coefficients in ``n`` variables."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"exponent {exp} does not fit {n} variables")
            acc[exp] = acc.get(exp, 0) + int(coef)
        self._terms = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def one(cls, n: int) -> QPolynomial:
        return cls(n, {(0,) * n: 1})

    @classmethod
    def variable(cls, n: int, i: int) -> QPolynomial:
        """x_i, 1-based."""
        if not 1 <= i <= n:
            raise ValueError(f"no variable x_{i} among {n}")
        return cls(n, {tuple(int(k == i - 1) for k in range(n)): 1})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def _check(self, other: QPolynomial) -> None:
        if not isinstance(other, QPolynomial):
            raise TypeError(f"expected QPolynomial, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: QPolynomial) -> QPolynomial:
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return QPolynomial(self.n, out)

    def __neg__(self) -> QPolynomial:
        return QPolynomial(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        self._check(other)
        return self + (-other)

    def __mul__(self, other: QPolynomial | int) -> QPolynomial:
        if isinstance(other, int):
            return QPolynomial(self.n, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return QPolynomial(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in canonical order: exponent tuples lexicographically descending."""
        return sorted(self._terms.items(), reverse=True)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"exp": list(e), "coef": c} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: dict) -> QPolynomial:
        return cls(data["n"], [(tuple(t["exp"]), t["coef"]) for t in data["terms"]])

    def __repr__(self) -> str:
        return f"QPolynomial(n={self.n}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}" for i, p in enumerate(e) if p
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_add(p: QPolynomial, q: QPolynomial) -> QPolynomial:
    return p + q


def poly_sub(p: QPolynomial, q: QPolynomial) -> QPolynomial:
    return p - q


def poly_mul(p: QPolynomial, q: QPolynomial) -> QPolynomial:
    return p * q


def poly_eq(p: QPolynomial, q: QPolynomial) -> bool:
    p._check(q)
    return p == q


def _monomial(word: Sequence[int], n: int) -> Exponent:
    return pad_to(content(word), n)


def rs_polynomial(alpha: Sequence[int], n: int) -> QPolynomial:
    """Sum of x^U over all RCTs U of shape alpha with entries at most n."""
    return _rs_polynomial(as_strong(alpha), n)


@lru_cache(maxsize=None)
def _rs_polynomial(alpha: Composition, n: int) -> QPolynomial:
    if n < 1:
        raise ValueError("need at least one variable")
    if not alpha:
        return QPolynomial.one(n)
    acc: dict[Exponent, int] = {}
    for U in enumerate_rcts(alpha, n):
        e = _monomial(U.column_word(), n)
        acc[e] = acc.get(e, 0) + 1
    return QPolynomial(n, acc)


def enumerate_rrst(shape: Sequence[int], max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Rows of every RRST of partition ``shape`` with entries in 1..max_entry."""
    shape = as_partition(shape)
    grid = [[0] * p for p in shape]
    cellseq = [(i, j) for i, p in enumerate(shape) for j in range(p)]

    def fill(pos: int):
        if pos == len(cellseq):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cellseq[pos]
        hi = max_entry if j == 0 else grid[i][j - 1] - 1
        if i > 0:
            hi = min(hi, grid[i - 1][j])
        # strict rows: entry at column j needs room for the shape[i] - j - 1 to its right
        for v in range(shape[i] - j, hi + 1):
            grid[i][j] = v
            yield from fill(pos + 1)
        grid[i][j] = 0

    yield from fill(0)


def schur_polynomial(lam: Sequence[int], n: int) -> QPolynomial:
    """Sum of x^T over all RRSTs T of shape transpose(lam) with entries at most n."""
    return _schur_polynomial(as_partition(lam), n)


@lru_cache(maxsize=None)
def _schur_polynomial(lam: Composition, n: int) -> QPolynomial:
    if n < 1:
        raise ValueError("need at least one variable")
    acc: dict[Exponent, int] = {}
    for rows in enumerate_rrst(transpose(lam), n):
        e = _monomial([x for r in rows for x in r], n)
        acc[e] = acc.get(e, 0) + 1
    return QPolynomial(n, acc)


def schur_decomposition_check(lam: Sequence[int], n: int) -> bool:
    """s_lam == sum of RS_alpha over the rearrangements alpha of transpose(lam)."""
    lam = as_partition(lam)
    total = QPolynomial(n)
    for alpha in rearrangements(transpose(lam)):
        total = total + rs_polynomial(alpha, n)
    return total == schur_polynomial(lam, n)


def is_quasisymmetric(p: QPolynomial) -> bool:
    """Coefficient of x_{i1}^{a1}...x_{ik}^{ak} depends only on (a1, ..., ak).

    Checked exhaustively: every increasing placement of every exponent
    pattern present must carry the same coefficient.
    """
    patterns: dict[Composition, int] = {}
    for e, c in p.terms.items():
        pat = tuple(x for x in e if x)
        if patterns.setdefault(pat, c) != c:
            return False
    for pat, c in patterns.items():
        for slots in combinations(range(p.n), len(pat)):
            e = [0] * p.n
            for s, x in zip(slots, pat):
                e[s] = x
            if p.coefficient(e) != c:
                return False
    return True


def is_symmetric(p: QPolynomial) -> bool:
    return all(
        p.coefficient(perm) == c for e, c in p.terms.items() for perm in rearrangements(e)
    )


class InconsistentExpansion(ArithmeticError):
    """``p`` is not an integral combination of the RS basis in this degree."""

    def __init__(self, message: str, residual: QPolynomial | None = None):
        super().__init__(message)
        self.residual = residual


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over the rationals for a square system; None if singular."""
    size = len(matrix)
    aug = [row[:] + [r] for row, r in zip(matrix, rhs)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][size] for r in range(size)]


def expand_in_rs_basis(p: QPolynomial, degree: int, n: int | None = None) -> dict[Composition, int]:
    """Coefficients c_beta with p == sum c_beta * RS_beta over compositions of ``degree``.

    The system is solved on the monomials whose exponent vector is a
    composition padded with zeros (one equation per basis element), then the
    candidate is checked against every monomial of ``p``. Raises
    :class:`InconsistentExpansion` if there is no exact integral solution.
    """
    if n is None:
        n = p.n
    if n != p.n:
        raise ValueError(f"polynomial has {p.n} variables, not {n}")
    if p.degrees() - {degree}:
        raise ValueError(f"polynomial is not homogeneous of degree {degree}")
    if n < degree:
        raise ValueError(f"need at least {degree} variables to separate degree {degree}")
    if degree == 0:
        return {(): p.coefficient((0,) * n)} if not p.is_zero() else {}
    basis = list(compositions(degree))
    polys = [rs_polynomial(beta, n) for beta in basis]
    rows = [pad_to(beta, n) for beta in basis]
    matrix = [[Fraction(q.coefficient(r)) for q in polys] for r in rows]
    rhs = [Fraction(p.coefficient(r)) for r in rows]
    sol = _solve_exact(matrix, rhs)
    if sol is None:
        raise InconsistentExpansion("RS polynomials are not independent on the chosen monomials")
    if any(x.denominator != 1 for x in sol):
        raise InconsistentExpansion(f"non-integral solution {sol}")
    coeffs = {beta: int(x) for beta, x in zip(basis, sol) if x != 0}
    rebuilt = QPolynomial(n)
    for beta, c in coeffs.items():
        rebuilt = rebuilt + rs_polynomial(beta, n) * c
    if rebuilt != p:
        raise InconsistentExpansion("no exact expansion in the RS basis", p - rebuilt)
    return coeffs
