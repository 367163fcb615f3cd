"""Command-line front end.

    ellrange range    --matrix 1,0,4,0,0,0,-1,0
    ellrange contains --matrix ... --point 0.5,0
    ellrange boundary --matrix ... --points 64 --format csv
    ellrange sample   --matrix ... --n 1000 --seed 7
    ellrange verify   --matrix ... --n 100000 --seed 1

The matrix comes from ``--matrix`` (flat list of 8 reals or JSON),
``--file`` or ``--stdin``. Results go to stdout, diagnostics to stderr.
Exit status: 0 success/inside, 1 outside or failed verification, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Any

from .core import Matrix2C, frobenius_norm
from .numrange import (
    DEGENERACY_RTOL,
    RangeShape,
    boundary_point,
    canonicalize,
    contains,
    numerical_range,
    semi_axes,
)
from .sampling import sample_range, verify_inclusion

SCHEMA = 1
INCLUSION_RTOL = 1e-9

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


class MatrixParseError(ValueError):
    """Bad matrix text; ``reason`` is one of arity, json, non-finite, number."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class MatrixInput:
    source: str  # "inline-flag" | "file-path" | "standard-input"
    payload: str


def _number(token: Any) -> float:
    if isinstance(token, bool) or not isinstance(token, (int, float, str)):
        raise MatrixParseError("number", f"not a number: {token!r}")
    try:
        x = float(token)
    except ValueError:
        raise MatrixParseError("number", f"not a number: {token!r}") from None
    if not math.isfinite(x):
        raise MatrixParseError("non-finite", f"non-finite number: {token!r}")
    return x


def _parse_json(text: str) -> Matrix2C:
    def reject_constant(name: str):
        raise MatrixParseError("non-finite", f"non-finite number: {name!r}")

    try:
        data = json.loads(text, parse_constant=reject_constant)
    except json.JSONDecodeError as exc:
        raise MatrixParseError("json", f"malformed JSON: {exc.msg} at position {exc.pos}") from None
    if not isinstance(data, list) or len(data) != 2:
        raise MatrixParseError("arity", "expected 2 rows of 2 entries")
    entries = []
    for row in data:
        if not isinstance(row, list) or len(row) != 2:
            raise MatrixParseError("arity", f"expected a row of 2 entries, got {json.dumps(row)}")
        for cell in row:
            if not isinstance(cell, dict) or set(cell) != {"re", "im"}:
                raise MatrixParseError(
                    "json", f"entry must be an object with keys re, im: {json.dumps(cell)}")
            entries.append(complex(_number(cell["re"]), _number(cell["im"])))
    return Matrix2C(*entries)


def _parse_flat(text: str) -> Matrix2C:
    tokens = [t.strip() for t in text.strip().split(",")]
    if len(tokens) != 8:
        raise MatrixParseError("arity", f"expected 8 comma-separated reals, got {len(tokens)}")
    vals = [_number(t) for t in tokens]
    return Matrix2C(*(complex(vals[i], vals[i + 1]) for i in range(0, 8, 2)))


def parse_matrix(inp: MatrixInput | str) -> Matrix2C:
    """Parse JSON ``[[{"re":..,"im":..}, ..], [..]]`` or 8 comma-separated reals."""
    text = inp.payload if isinstance(inp, MatrixInput) else inp
    if not text.strip():
        raise MatrixParseError("arity", "empty matrix input")
    if text.lstrip().startswith("["):
        return _parse_json(text)
    return _parse_flat(text)


def fmt_number(x: float) -> str:
    """17 significant digits; ``-0`` becomes ``0``."""
    x = float(x)
    if x == 0.0:
        return "0"
    return format(x, ".17g")


def to_json(obj: Any) -> str:
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_number(obj)
    if isinstance(obj, complex):
        return to_json({"re": obj.real, "im": obj.imag})
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def shape_to_dict(shape: RangeShape) -> dict:
    return {
        "schema": SCHEMA,
        "kind": shape.kind.value,
        "center": shape.center,
        "foci": [shape.focus1, shape.focus2],
        "semi_major": shape.semi_major,
        "semi_minor": shape.semi_minor,
        "orientation": shape.orientation,
    }


RANGE_CSV_HEADER = ("kind,center_re,center_im,focus1_re,focus1_im,focus2_re,focus2_im,"
                    "semi_major,semi_minor,orientation")


def _csv_row(values) -> str:
    return ",".join(v if isinstance(v, str) else fmt_number(v) for v in values)


def _error(msg: str) -> None:
    if sys.stderr.isatty() and "NO_COLOR" not in os.environ:
        prefix = "\033[31merror:\033[0m"
    else:
        prefix = "error:"
    print(f"{prefix} {msg}", file=sys.stderr)


def _read_input(args: argparse.Namespace) -> MatrixInput:
    given = [(name, getattr(args, name, None)) for name in ("matrix", "file", "stdin")]
    given = [(name, val) for name, val in given if val not in (None, False)]
    if len(given) != 1:
        raise MatrixParseError("arity", "give exactly one of --matrix, --file, --stdin")
    name, val = given[0]
    if name == "matrix":
        return MatrixInput("inline-flag", val)
    if name == "file":
        try:
            with open(val, encoding="utf-8") as fh:
                return MatrixInput("file-path", fh.read())
        except OSError as exc:
            raise MatrixParseError("json", f"cannot read {val}: {exc.strerror}") from None
    return MatrixInput("standard-input", sys.stdin.read())


def _parse_point(text: str) -> complex:
    tokens = [t.strip() for t in text.split(",")]
    if len(tokens) != 2:
        raise MatrixParseError("arity", f"--point expects re,im, got {text!r}")
    return complex(_number(tokens[0]), _number(tokens[1]))


def cmd_range(A: Matrix2C, args: argparse.Namespace) -> int:
    shape = numerical_range(A)
    if args.format == "csv":
        print(RANGE_CSV_HEADER)
        print(_csv_row([shape.kind.value, shape.center.real, shape.center.imag,
                        shape.focus1.real, shape.focus1.imag,
                        shape.focus2.real, shape.focus2.imag,
                        shape.semi_major, shape.semi_minor, shape.orientation]))
    else:
        print(to_json(shape_to_dict(shape)))
    return EXIT_OK


def cmd_contains(A: Matrix2C, args: argparse.Namespace) -> int:
    z = _parse_point(args.point)
    tol = args.tol if args.tol is not None else INCLUSION_RTOL * (1 + frobenius_norm(A))
    if not (math.isfinite(tol) and tol >= 0):
        raise MatrixParseError("number", f"--tol must be a finite nonnegative number, got {tol!r}")
    inside = contains(numerical_range(A), z, tol)
    print("inside" if inside else "outside")
    return EXIT_OK if inside else EXIT_NEGATIVE


def cmd_boundary(A: Matrix2C, args: argparse.Namespace) -> int:
    n = args.points
    if n < 1:
        raise MatrixParseError("number", f"--points must be at least 1, got {n}")
    shape = numerical_range(A)
    ts = [2 * math.pi * k / n for k in range(n)]
    pts = [boundary_point(shape, t) for t in ts]
    if args.format == "csv":
        print("t,re,im")
        for t, z in zip(ts, pts):
            print(_csv_row([t, z.real, z.imag]))
    else:
        print(to_json({"schema": SCHEMA, "points": [
            {"t": t, "re": z.real, "im": z.imag} for t, z in zip(ts, pts)]}))
    return EXIT_OK


def cmd_sample(A: Matrix2C, args: argparse.Namespace) -> int:
    if args.n < 0:
        raise MatrixParseError("number", f"--n must be nonnegative, got {args.n}")
    if args.seed < 0:
        raise MatrixParseError("number", f"--seed must be nonnegative, got {args.seed}")
    pts = sample_range(A, args.n, args.seed, workers=args.workers)
    if args.format == "csv":
        lines = [f"# schema={SCHEMA} seed={args.seed} n={args.n}", "re,im"]
        lines += [fmt_number(z.real) + "," + fmt_number(z.imag) for z in pts.tolist()]
        print("\n".join(lines))
    else:
        print(to_json({"schema": SCHEMA, "seed": args.seed, "n": args.n,
                       "points": pts.tolist()}))
    return EXIT_OK


def two_path_deltas(A: Matrix2C) -> dict:
    """Differences between the trace formula and the canonical-form route."""
    cf = canonicalize(A)
    s_plus, s_minus = semi_axes(A)
    c_plus, c_minus = cf.semi_axes
    R = cf.reconstruct()
    return {
        "semi_major_delta": abs(s_plus - c_plus),
        "semi_minor_delta": abs(s_minus - c_minus),
        "reconstruction_error": max(abs(p - q) for p, q in zip(R.entries(), A.entries())),
    }


def cmd_verify(A: Matrix2C, args: argparse.Namespace) -> int:
    if args.n < 1:
        raise MatrixParseError("number", f"--n must be at least 1, got {args.n}")
    if args.seed < 0:
        raise MatrixParseError("number", f"--seed must be nonnegative, got {args.seed}")
    scale = 1 + frobenius_norm(A)
    report = verify_inclusion(A, args.n, args.seed, workers=args.workers)
    deltas = two_path_deltas(A)
    failed = []
    if report.max_violation > INCLUSION_RTOL * scale:
        failed.append("max_violation")
    failed += [k for k, d in deltas.items() if d > DEGENERACY_RTOL * scale]
    out = {"schema": SCHEMA, **report.to_dict(), "two_path": deltas,
           "tolerances": {"inclusion": INCLUSION_RTOL * scale,
                          "two_path": DEGENERACY_RTOL * scale},
           "passed": not failed, "failed": failed}
    print(to_json(out))
    for name in failed:
        _error(f"verification failed: {name}")
    return EXIT_OK if not failed else EXIT_NEGATIVE


COMMANDS = {
    "range": cmd_range,
    "contains": cmd_contains,
    "boundary": cmd_boundary,
    "sample": cmd_sample,
    "verify": cmd_verify,
}


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    # SUPPRESS lets the flags appear before or after the subcommand.
    p.add_argument("--matrix", default=argparse.SUPPRESS,
                   help="flat a11re,a11im,a12re,...,a22im or JSON")
    p.add_argument("--file", default=argparse.SUPPRESS, help="read the matrix from a file")
    p.add_argument("--stdin", action="store_true", default=argparse.SUPPRESS,
                   help="read the matrix from standard input")
    p.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellrange", description="Numerical range of 2x2 complex matrices.")
    _add_input_flags(parser)
    common = argparse.ArgumentParser(add_help=False)
    _add_input_flags(common)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("range", parents=[common], help="closed-form range shape")

    p = sub.add_parser("contains", parents=[common], help="membership test")
    p.add_argument("--point", required=True, help="re,im")
    p.add_argument("--tol", type=float, default=None,
                   help="default 1e-9 * (1 + ||A||_F)")

    p = sub.add_parser("boundary", parents=[common], help="points on the boundary")
    p.add_argument("--points", type=int, required=True)

    for name, default_n, help_ in (("sample", 1000, "Monte-Carlo range samples"),
                                   ("verify", 100_000, "oracle and two-path check")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--n", type=int, default=default_n)
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--workers", type=int, default=1)
    return parser


def _attach_signed_values(argv: list[str]) -> list[str]:
    """Turn ``--point -1,2`` into ``--point=-1,2`` so argparse keeps the value."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--matrix", "--point"):
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and nxt[1:2] in set("0123456789."):
                out.append(f"{tok}={nxt}")
            else:
                out += [tok, nxt]
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_attach_signed_values(sys.argv[1:] if argv is None else argv))
    if not hasattr(args, "format"):
        args.format = "json"
    try:
        A = parse_matrix(_read_input(args))
        return COMMANDS[args.command](A, args)
    except MatrixParseError as exc:
        _error(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
