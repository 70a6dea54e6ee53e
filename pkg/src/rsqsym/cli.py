"""Command-line interface: ``rsqsym <verb> [options] [input]``.

Verbs that take a tableau, array or pair read one JSON document from the
positional ``input`` path, or from standard input when it is omitted or
``-``. Compositions and partitions given as options are comma-separated
integers, with ``-`` for the empty one.

Exit status: 0 on success (or a true answer), 1 when a validation answer is
false or an identity fails, 2 on malformed input. Errors are written to
stderr as ``{"error": {"kind": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from typing import Any, TextIO

from .core import InvalidTableauError, as_partition, as_strong, as_word, compositions, partitions
from .lr import (
    InvalidPairError,
    PairUT,
    PairVS,
    lr_coefficient,
    lr_coefficients,
    product_polynomial,
    rho_forward,
    rho_inverse,
    verify_lr_identity,
)
from .qsym import InconsistentExpansion, expand_in_rs_basis
from .rct import RCT, enumerate_rcts, rct_insert_word, rct_uninsert, rct_violations
from .skew import SkewFilling, enumerate_lr_skew, validate_lr_skew
from .tableaux import RRST, TwoLineArray, rsk_forward, rsk_inverse

DEFAULT_MAX_CELLS = 24

OK, FALSE, MALFORMED = 0, 1, 2


class CliError(Exception):
    """Malformed input; reported on stderr with exit status 2."""

    def __init__(self, kind: str, message: str, extra: dict | None = None):
        super().__init__(message)
        self.kind = kind
        self.extra = extra or {}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("usage", message)


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_ints(text: str) -> tuple[int, ...]:
    """``"1,3,2"`` -> (1, 3, 2); ``"-"`` -> ()."""
    text = text.strip()
    if text == "-":
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers or '-', got {text!r}")


def max_cells() -> int:
    raw = os.environ.get("QSCHUR_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        cap = int(raw)
    except ValueError:
        raise CliError("config", f"QSCHUR_MAX_CELLS must be an integer, got {raw!r}")
    if cap < 0:
        raise CliError("config", "QSCHUR_MAX_CELLS must be nonnegative")
    return cap


def _cap(cells: int) -> None:
    cap = max_cells()
    if cells > cap:
        raise CliError("limit", f"{cells} cells exceeds QSCHUR_MAX_CELLS={cap}")


def _check_ints(obj: Any, where: str = "$") -> None:
    # JSON numbers must be integers; floats and booleans are rejected
    if isinstance(obj, bool) or isinstance(obj, float):
        raise CliError("schema", f"{where}: expected an integer, got {obj!r}")
    if isinstance(obj, list):
        for n, x in enumerate(obj):
            _check_ints(x, f"{where}[{n}]")
    elif isinstance(obj, dict):
        for k, x in obj.items():
            _check_ints(x, f"{where}.{k}")


def read_json(path: str | None, stdin: TextIO) -> Any:
    try:
        if path is None or path == "-":
            text = stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError("io", str(exc))
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError("json", f"malformed JSON: {exc}")
    _check_ints(data)
    return data


def _need(data: Any, *keys: str) -> dict:
    if not isinstance(data, dict):
        raise CliError("schema", f"expected a JSON object with keys {list(keys)}")
    missing = [k for k in keys if k not in data]
    if missing:
        raise CliError("schema", f"missing keys {missing}")
    return data


def _rows(data: Any) -> list:
    rows = data
    if isinstance(data, dict):
        rows = _need(data, "rows")["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise CliError("schema", "rows must be a list of lists of integers")
    return rows


def _rct(data: Any) -> RCT:
    rows = _rows(data)
    if isinstance(data, dict) and "shape" in data:
        if [len(r) for r in rows] != data["shape"]:
            raise CliError("schema", f"declared shape {data['shape']} does not match rows")
    return RCT(rows)


def _fmt_rows(rows: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(x) for x in r) for r in rows) or "(empty)"


def _fmt_comp(parts: Sequence[int]) -> str:
    return ",".join(map(str, parts)) or "-"


def _violations_text(vs) -> str:
    return "\n".join(
        f"  {v.rule}"
        + (f" at {[tuple(c) for c in v.cells]}" if v.cells else "")
        + (f" ({v.detail})" if v.detail else "")
        for v in vs
    )


# ---- verbs: each returns (exit status, json payload, human text)


def cmd_validate_rct(args, stdin):
    data = read_json(args.input, stdin)
    rows = _rows(data)
    try:
        bad = rct_violations(rows)
    except ValueError as exc:
        raise CliError("schema", str(exc))
    if isinstance(data, dict) and "shape" in data and [len(r) for r in rows] != data["shape"]:
        raise CliError("schema", f"declared shape {data['shape']} does not match rows")
    payload = {"valid": not bad, "violations": [v.to_json() for v in bad]}
    text = "valid" if not bad else "invalid\n" + _violations_text(bad)
    return (OK if not bad else FALSE), payload, text


def cmd_validate_lr_skew(args, stdin):
    data = _need(read_json(args.input, stdin), "beta", "gamma", "rows")
    S = SkewFilling.from_json(data)
    bad = validate_lr_skew(S, args.column_strict)
    payload = {"valid": not bad, "violations": [v.to_json() for v in bad]}
    text = "valid" if not bad else "invalid\n" + _violations_text(bad)
    return (OK if not bad else FALSE), payload, text


def cmd_insert(args, stdin):
    U = _rct(read_json(args.input, stdin))
    if (args.letter is None) == (args.word is None):
        raise CliError("usage", "give exactly one of --letter and --word")
    word = (args.letter,) if args.letter is not None else args.word
    word = as_word(word)
    _cap(U.size + len(word))
    V, steps = rct_insert_word(U, word)
    payload = {
        "result": V.to_json(),
        "steps": [dict(s.to_json(), letter=b) for b, s in zip(word, steps)],
    }
    lines = []
    for b, s in zip(word, steps):
        path = " ".join(f"({i},{j})" for i, j in s.path)
        lines.append(f"insert {b}: new box {s.new_box}, augmented row {s.augmented_row}, path {path}")
    lines.append(_fmt_rows(V.rows))
    return OK, payload, "\n".join(lines)


def cmd_uninsert(args, stdin):
    V = _rct(read_json(args.input, stdin))
    W, k = rct_uninsert(V, args.row)
    return OK, {"result": W.to_json(), "letter": k}, f"letter {k}\n{_fmt_rows(W.rows)}"


def cmd_rsk(args, stdin):
    data = _need(read_json(args.input, stdin), "upper", "lower")
    A = TwoLineArray.from_json(data)
    _cap(len(A.upper))
    P, Q = rsk_forward(A)
    payload = {"P": P.to_json(), "Q": Q.to_json()}
    return OK, payload, f"P:\n{_fmt_rows(P.rows)}\nQ:\n{_fmt_rows(Q.rows)}"


def cmd_rsk_inv(args, stdin):
    data = _need(read_json(args.input, stdin), "P", "Q")
    P, Q = RRST.from_json(data["P"]), RRST.from_json(data["Q"])
    A = rsk_inverse(P, Q)
    text = f"upper: {' '.join(map(str, A.upper))}\nlower: {' '.join(map(str, A.lower))}"
    return OK, A.to_json(), text


def cmd_rho(args, stdin):
    data = _need(read_json(args.input, stdin), "U", "T", "alpha", "lambda")
    pair = PairUT.from_json(data)
    _cap(pair.U.size + sum(pair.lam))
    out = rho_forward(pair)
    return OK, out.to_json(), f"V:\n{_fmt_rows(out.V.rows)}\nS:\n{out.S}"


def cmd_rho_inv(args, stdin):
    data = _need(read_json(args.input, stdin), "V", "S")
    pair = PairVS.from_json(data)
    _cap(pair.V.size)
    out = rho_inverse(pair)
    return OK, out.to_json(), f"U:\n{_fmt_rows(out.U.rows)}\nT:\n{_fmt_rows(out.T.rows)}"


def cmd_lr_coeff(args, stdin):
    alpha, lam = as_strong(args.alpha), as_partition(args.lam)
    _cap(sum(alpha) + sum(lam))
    if args.beta is not None:
        c = lr_coefficient(alpha, lam, as_strong(args.beta), args.column_strict)
        return OK, {"alpha": list(alpha), "lambda": list(lam), "beta": list(args.beta), "coef": c}, str(c)
    coeffs = lr_coefficients(alpha, lam, args.column_strict)
    payload = {
        "alpha": list(alpha),
        "lambda": list(lam),
        "coefficients": [{"beta": list(b), "coef": c} for b, c in sorted(coeffs.items())],
    }
    text = "\n".join(f"{_fmt_comp(b)}: {c}" for b, c in sorted(coeffs.items())) or "(none)"
    return OK, payload, text


def cmd_enumerate_rct(args, stdin):
    shape = as_strong(args.shape)
    _cap(sum(shape))
    found = list(enumerate_rcts(shape, args.max_entry)) if shape else [RCT()]
    payload = {"shape": list(shape), "max_entry": args.max_entry, "count": len(found),
               "rcts": [U.to_json() for U in found]}
    text = "\n\n".join(_fmt_rows(U.rows) for U in found) + f"\n\n{len(found)} RCT(s)"
    return OK, payload, text.lstrip("\n")


def cmd_enumerate_lr_skew(args, stdin):
    beta, alpha, lam = as_strong(args.beta), as_strong(args.alpha), as_partition(args.lam)
    _cap(sum(beta))
    found = list(enumerate_lr_skew(beta, alpha, lam, args.column_strict))
    payload = {"beta": list(beta), "alpha": list(alpha), "lambda": list(lam), "count": len(found),
               "fillings": [S.to_json() for S in found]}
    text = "\n\n".join(str(S) for S in found) + f"\n\n{len(found)} filling(s)"
    return OK, payload, text.lstrip("\n")


def cmd_expand_product(args, stdin):
    alpha, lam = as_strong(args.alpha), as_partition(args.lam)
    d = sum(alpha) + sum(lam)
    _cap(d)
    n = max(d, 1)
    p = product_polynomial(alpha, lam, n)
    try:
        coeffs = expand_in_rs_basis(p, d, n)
    except InconsistentExpansion as exc:
        return FALSE, {"error": str(exc)}, f"no expansion: {exc}"
    payload = {
        "alpha": list(alpha),
        "lambda": list(lam),
        "polynomial": p.to_json(),
        "expansion": [{"beta": list(b), "coef": c} for b, c in sorted(coeffs.items())],
    }
    text = " + ".join(f"{c}*RS[{_fmt_comp(b)}]" for b, c in sorted(coeffs.items())) or "0"
    return OK, payload, text


def cmd_verify_identity(args, stdin):
    if args.max_alpha < 0 or args.max_lambda < 0:
        raise CliError("usage", "bounds must be nonnegative")
    _cap(args.max_alpha + args.max_lambda)
    reports = []
    for a in range(args.max_alpha + 1):
        for alpha in compositions(a):
            for m in range(args.max_lambda + 1):
                for lam in partitions(m):
                    reports.append(verify_lr_identity(alpha, lam, args.column_strict))
    ok = all(r.ok for r in reports)
    payload = {"ok": ok, "cases": len(reports), "reports": [r.to_json() for r in reports]}
    lines = [
        f"{_fmt_comp(r.alpha)} x {_fmt_comp(r.lam)}: {'ok' if r.ok else 'FAIL'}"
        for r in reports
    ]
    lines.append(f"{sum(r.ok for r in reports)}/{len(reports)} cases pass")
    return (OK if ok else FALSE), payload, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rsqsym", description="Row-strict composition tableaux and the RS x Schur LR rule.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    ints = parse_ints

    def verb(name, func, helptext, takes_input=True):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--json", action="store_true", help="emit canonical JSON")
        if takes_input:
            sp.add_argument("input", nargs="?", default=None, help="JSON file (default: stdin)")
        sp.set_defaults(func=func)
        return sp

    def strict(sp):
        sp.add_argument("--column-strict", action="store_true",
                        help="also require the column-strict lattice condition")

    verb("validate-rct", cmd_validate_rct, "check the RCT conditions")
    sp = verb("validate-lr-skew", cmd_validate_lr_skew, "check the LR skew RCT conditions")
    strict(sp)
    sp = verb("insert", cmd_insert, "insert a letter or a word into an RCT")
    sp.add_argument("--letter", type=int)
    sp.add_argument("--word", type=ints)
    sp = verb("uninsert", cmd_uninsert, "undo an insertion ending in the given row")
    sp.add_argument("--row", type=int, required=True)
    verb("rsk", cmd_rsk, "two-line array to (P, Q)")
    verb("rsk-inv", cmd_rsk_inv, "(P, Q) to two-line array")
    verb("rho", cmd_rho, "map [U, T] to [V, S]")
    verb("rho-inv", cmd_rho_inv, "map [V, S] back to [U, T]")
    sp = verb("lr-coeff", cmd_lr_coeff, "LR coefficients C(alpha, lambda; beta)", takes_input=False)
    sp.add_argument("--alpha", type=ints, required=True)
    sp.add_argument("--lambda", dest="lam", type=ints, required=True)
    sp.add_argument("--beta", type=ints)
    strict(sp)
    sp = verb("enumerate-rct", cmd_enumerate_rct, "all RCTs of a shape", takes_input=False)
    sp.add_argument("--shape", type=ints, required=True)
    sp.add_argument("--max-entry", type=int, required=True)
    sp = verb("enumerate-lr-skew", cmd_enumerate_lr_skew, "all LR skew RCTs", takes_input=False)
    sp.add_argument("--beta", type=ints, required=True)
    sp.add_argument("--alpha", type=ints, required=True)
    sp.add_argument("--lambda", dest="lam", type=ints, required=True)
    strict(sp)
    sp = verb("expand-product", cmd_expand_product, "expand RS_alpha * s_lambda in the RS basis",
              takes_input=False)
    sp.add_argument("--alpha", type=ints, required=True)
    sp.add_argument("--lambda", dest="lam", type=ints, required=True)
    sp = verb("verify-identity", cmd_verify_identity, "check the LR rule on all small cases",
              takes_input=False)
    sp.add_argument("--max-alpha", type=int, required=True)
    sp.add_argument("--max-lambda", type=int, required=True)
    strict(sp)
    return p


def run(
    argv: Sequence[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        status, payload, text = args.func(args, stdin)
    except CliError as exc:
        err = {"kind": exc.kind, "message": str(exc), **exc.extra}
    except InvalidTableauError as exc:
        err = {"kind": "invalid-" + exc.kind.lower(), "message": str(exc),
               "violations": [v.to_json() for v in exc.violations]}
    except InvalidPairError as exc:
        err = {"kind": "invalid-pair", "message": str(exc)}
    except (ValueError, KeyError, TypeError) as exc:
        err = {"kind": "invalid-input", "message": str(exc)}
    else:
        stdout.write((dumps(payload) if args.json else text) + "\n")
        return status
    stderr.write(dumps({"error": err}) + "\n")
    return MALFORMED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
