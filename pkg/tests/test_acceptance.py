"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` or directly with
``python3 tests/test_acceptance.py``. All randomness is seeded.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import (  # noqa: E402
    FIG_ALPHA,
    FIG_LAMBDA,
    FIG_LOWER,
    FIG_S,
    FIG_T,
    FIG_U,
    FIG_UPPER,
    FIG_V,
    INS_PATH,
    INS_U,
    INS_V,
    random_rct,
    random_two_line_array,
)
from rsqsym.core import compositions, partitions  # noqa: E402
from rsqsym.invariants import (  # noqa: E402
    check_bumping,
    check_hand_decreasing,
    check_knuth,
    check_last_row,
    check_path_rows,
    check_reading_order,
    check_result_valid,
    check_round_trip,
    check_scanning_values,
    check_uninsert_round_trip,
    uninsertable_rows,
)
from rsqsym.lr import (  # noqa: E402
    PairUT,
    PairVS,
    lr_coefficient,
    product_polynomial,
    recording_tableau,
    rho_forward,
    rho_inverse,
    verify_lr_identity,
)
from rsqsym.qsym import (  # noqa: E402
    expand_in_rs_basis,
    is_quasisymmetric,
    rs_polynomial,
    schur_decomposition_check,
)
from rsqsym.rct import enumerate_rcts, enumerate_rcts_naive, rct_insert  # noqa: E402
from rsqsym.skew import column_word, enumerate_lr_skew, enumerate_lr_skew_naive  # noqa: E402
from rsqsym.tableaux import rsk_forward, rsk_inverse  # noqa: E402

# pinned tolerances
SEED = 20240601
TIME_LIMIT_S = 1.0
N_RANDOM = 10_000
MAX_CELLS = 12
MAX_LETTER = 8
RSK_MAX_LEN = 15
RSK_MAX_LETTER = 6
ID_MAX_ALPHA = 4
ID_MAX_LAMBDA = 3
SCHUR_MAX = 5
RCT_ORACLE_MAX = 5
RCT_ORACLE_MAX_ENTRY = 5
SKEW_ORACLE_MAX = 6
QSYM_MAX = 5


def _line(num: str, name: str, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} [{num}] {name}: {detail}"


def crit_1() -> tuple[bool, str]:
    t0 = time.perf_counter()
    pair = PairUT(FIG_U, FIG_T, FIG_ALPHA, FIG_LAMBDA)
    out = rho_forward(pair)
    back = rho_inverse(out)
    A = rsk_inverse(back.T, recording_tableau(back.lam))
    dt = time.perf_counter() - t0
    word = "".join(map(str, column_word(out.S)))
    ok = (
        out.V == FIG_V
        and out.V.shape == (1, 2, 3, 1, 5, 3)
        and out.S == FIG_S
        and word == "4433421"
        and back == pair
        and (A.upper, A.lower) == (FIG_UPPER, FIG_LOWER)
        and dt < TIME_LIMIT_S
    )
    return ok, f"V shape {out.V.shape}, word {word}, inverse exact={back == pair}, {dt:.3f}s"


def crit_2() -> tuple[bool, str]:
    t0 = time.perf_counter()
    res = rct_insert(INS_U, 4)
    dt = time.perf_counter() - t0
    path = set(res.path)
    ok = res.result == INS_V and res.augmented_row == 4 and path == INS_PATH and dt < TIME_LIMIT_S
    return ok, f"augmented row {res.augmented_row}, path {sorted(path)}, {dt:.3f}s"


def crit_3() -> tuple[bool, str]:
    cases = bad = 0
    first = ""
    for a in range(ID_MAX_ALPHA + 1):
        for alpha in compositions(a):
            for size in range(ID_MAX_LAMBDA + 1):
                for lam in partitions(size):
                    cases += 1
                    report = verify_lr_identity(alpha, lam)
                    ok = report.ok
                    if ok:
                        d = a + size
                        expanded = expand_in_rs_basis(product_polynomial(alpha, lam, report.n), d)
                        ok = all(
                            lr_coefficient(alpha, lam, beta) == expanded.get(beta, 0)
                            for beta in compositions(d)
                        )
                    if not ok:
                        bad += 1
                        first = first or f"; first failure alpha={alpha} lambda={lam}"
    return bad == 0, f"{cases} (alpha, lambda) pairs, {bad} failures{first}"


def crit_4() -> tuple[bool, str]:
    rng = random.Random(SEED)
    suites = {
        "a": lambda: check_path_rows(random_rct(rng, MAX_CELLS - 1, MAX_LETTER), rng.randint(1, MAX_LETTER)),
        "b": lambda: check_last_row(random_rct(rng, MAX_CELLS - 1, MAX_LETTER), rng.randint(1, MAX_LETTER)),
        "c": lambda: check_bumping(random_rct(rng, MAX_CELLS - 2, MAX_LETTER), *_abc(rng)),
        "d": lambda: (check_scanning_values(random_rct(rng, MAX_CELLS - 2, MAX_LETTER), *_abc(rng))
                      + check_hand_decreasing(random_rct(rng, MAX_CELLS - 1, MAX_LETTER),
                                              rng.randint(1, MAX_LETTER))),
        "e": lambda: check_knuth(random_rct(rng, MAX_CELLS - 3, MAX_LETTER), *_abc(rng)),
        "f": lambda: _reading(rng),
        "g": lambda: _round_trips(rng),
    }
    failed = {}
    for key, fn in suites.items():
        n_bad = sum(1 for _ in range(N_RANDOM) if fn())
        if n_bad:
            failed[key] = n_bad
    detail = f"suites a-g x {N_RANDOM} cases, <= {MAX_CELLS} cells, failures {failed or 0}"
    return not failed, detail


def _abc(rng: random.Random) -> tuple[int, int, int]:
    while True:
        a, b, c = sorted(rng.randint(1, MAX_LETTER) for _ in range(3))
        if a < b:
            return a, b, c


def _reading(rng: random.Random) -> list[str]:
    word = sorted(rng.randint(1, MAX_LETTER) for _ in range(rng.randint(0, 4)))
    return check_reading_order(random_rct(rng, MAX_CELLS - len(word), MAX_LETTER), word)


def _round_trips(rng: random.Random) -> list[str]:
    U = random_rct(rng, MAX_CELLS - 1, MAX_LETTER)
    b = rng.randint(1, MAX_LETTER)
    out = check_round_trip(U, b) + check_result_valid(U, b)
    V = random_rct(rng, MAX_CELLS, MAX_LETTER)
    if V.rows:
        out += check_uninsert_round_trip(V, rng.choice(uninsertable_rows(V)))
    return out


def crit_5() -> tuple[bool, str]:
    rng = random.Random(SEED)
    bad = 0
    for _ in range(N_RANDOM):
        A = random_two_line_array(rng, RSK_MAX_LEN, RSK_MAX_LETTER)
        if rsk_inverse(*rsk_forward(A)) != A:
            bad += 1
    return bad == 0, f"{N_RANDOM} arrays, length <= {RSK_MAX_LEN}, letters <= {RSK_MAX_LETTER}, {bad} failures"


def crit_6() -> tuple[bool, str]:
    lams = [lam for size in range(SCHUR_MAX + 1) for lam in partitions(size)]
    bad = [lam for lam in lams if not schur_decomposition_check(lam, max(sum(lam), 1))]
    return not bad, f"{len(lams)} partitions up to size {SCHUR_MAX}, failures {bad}"


def crit_7() -> tuple[bool, str]:
    rct_cases = rct_bad = 0
    for size in range(RCT_ORACLE_MAX + 1):
        for alpha in compositions(size):
            for n in range(1, RCT_ORACLE_MAX_ENTRY + 1):
                rct_cases += 1
                fast = list(enumerate_rcts(alpha, n))
                if len(set(fast)) != len(fast) or set(fast) != enumerate_rcts_naive(alpha, n):
                    rct_bad += 1
    skew_cases = skew_bad = 0
    for size in range(SKEW_ORACLE_MAX + 1):
        for beta in compositions(size):
            for a in range(size + 1):
                for alpha in compositions(a):
                    for lam in partitions(size - a):
                        skew_cases += 1
                        fast = list(enumerate_lr_skew(beta, alpha, lam))
                        if len(set(fast)) != len(fast) or set(fast) != enumerate_lr_skew_naive(beta, alpha, lam):
                            skew_bad += 1
    ok = rct_bad == skew_bad == 0
    return ok, (f"RCT {rct_cases} cases ({rct_bad} bad), "
                f"LR skew {skew_cases} cases ({skew_bad} bad)")


def crit_8() -> tuple[bool, str]:
    cases = bad = 0
    for size in range(1, QSYM_MAX + 1):
        for beta in compositions(size):
            cases += 1
            p = rs_polynomial(beta, size)
            if not is_quasisymmetric(p) or expand_in_rs_basis(p, size) != {beta: 1}:
                bad += 1
    return bad == 0, f"{cases} compositions up to size {QSYM_MAX}, {bad} failures"


CRITERIA = [
    ("1", "rho golden example", crit_1),
    ("2", "insertion golden example", crit_2),
    ("3", "LR identity at desk scale", crit_3),
    ("4", "insertion lemma suites", crit_4),
    ("5", "RSK round trip", crit_5),
    ("6", "Schur decomposition", crit_6),
    ("7", "enumeration oracles", crit_7),
    ("8", "quasisymmetry and indicator recovery", crit_8),
]


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, name, fn in CRITERIA:
        ok, detail = fn()
        results.append(ok)
        print(_line(num, name, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
