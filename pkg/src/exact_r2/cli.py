"""Command-line front end.

Reads two-column CSV archives, computes indicators, runs convergence
studies of the discretized R2 against the exact value, generates reference
fronts and checks the closed form against the quadrature oracle.

Exit status: 0 success, 1 usage or parse error, 2 numeric or degenerate
input, 3 oracle check failure.
"""

from __future__ import annotations

import argparse
import io
import math
import re
import sys
from dataclasses import dataclass

import numpy as np

from exact_r2.core import ORIGIN, ExactR2Error, ObjectiveVector, shift_points
from exact_r2.hypervolume import hv2d
from exact_r2.pareto import nondominated_filter
from exact_r2.r2_discrete import r2_discrete
from exact_r2.r2_exact import r2_exact
from exact_r2.reference import FrontShape, generate_cloud, generate_front, quadrature_r2

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2
EXIT_CHECK_FAILED = 3

INDICATORS = ("r2-exact", "r2-discrete", "hv")
CLOUD_SHAPE = "bisphere"


class ParseError(ExactR2Error, ValueError):
    """Malformed archive text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UsageError(ExactR2Error, ValueError):
    pass


@dataclass(frozen=True)
class ArchiveFile:
    points: np.ndarray
    header: str | None = None

    def __len__(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class ConvergenceRow:
    num_weights: int
    discrete_value: float
    exact_value: float
    abs_error: float


def _parse_float(field: str) -> float:
    value = float(field)
    if not math.isfinite(value):
        raise ValueError(f"non-finite value {field!r}")
    return value


def parse_archive(text: bytes | str) -> ArchiveFile:
    """Parse ``f1,f2`` rows; an optional header row is skipped.

    The first row is a header when its first field is not a number.
    Trailing blank lines are ignored.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8 ({exc})") from None
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    header = None
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r")
        fields = line.split(",")
        if lineno == 1:
            try:
                float(fields[0])
            except ValueError:
                header = line
                continue
        if len(fields) != 2:
            raise ParseError(f"expected 2 fields, got {len(fields)}", lineno)
        try:
            rows.append((_parse_float(fields[0]), _parse_float(fields[1])))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if not rows:
        raise ParseError("archive contains no data rows")
    return ArchiveFile(np.array(rows, dtype=np.float64), header)


def format_number(value: float, precision: int = 17) -> str:
    return format(float(value), f".{precision}g")


def format_points(points, precision: int = 17) -> str:
    out = io.StringIO()
    out.write("f1,f2\n")
    for f1, f2 in np.asarray(points).tolist():
        out.write(f"{format_number(f1, precision)},{format_number(f2, precision)}\n")
    return out.getvalue()


def run_filter(archive: ArchiveFile, utopian=ORIGIN, precision: int = 17) -> str:
    """Nondominated points of the archive, in the original coordinates."""
    shift_points(archive.points, utopian)  # only validates the utopian point
    return format_points(nondominated_filter(archive.points).as_array(), precision)


def compute_indicator(
    archive: ArchiveFile,
    indicator: str,
    utopian=ORIGIN,
    num_weights: int | None = None,
    ref=None,
) -> tuple[float, int]:
    """Value of ``indicator`` and the size of the filtered front."""
    utopian = ObjectiveVector.of(utopian)
    front = nondominated_filter(shift_points(archive.points, utopian))
    if indicator == "r2-exact":
        value = r2_exact(front)
    elif indicator == "r2-discrete":
        if num_weights is None:
            raise UsageError("--num-weights is required for r2-discrete")
        value = r2_discrete(front, num_weights)
    elif indicator == "hv":
        if ref is None:
            raise UsageError("--ref is required for hv")
        ref = ObjectiveVector.of(ref)
        value = hv2d(front, (ref.f1 - utopian.f1, ref.f2 - utopian.f2))
    else:
        raise UsageError(f"unknown indicator {indicator!r}; choose from {', '.join(INDICATORS)}")
    return value, len(front)


def run_compute(archive, indicator, utopian=ORIGIN, num_weights=None, ref=None, precision=17) -> str:
    value, size = compute_indicator(archive, indicator, utopian, num_weights, ref)
    return f"indicator,value,front_size\n{indicator},{format_number(value, precision)},{size}\n"


def run_convergence(archive: ArchiveFile, weight_counts, utopian=ORIGIN) -> list[ConvergenceRow]:
    counts = [int(c) for c in weight_counts]
    if not counts:
        raise UsageError("at least one weight count is required")
    if min(counts) < 2:
        raise UsageError("weight counts must be at least 2")
    front = nondominated_filter(shift_points(archive.points, utopian))
    exact = r2_exact(front)
    rows = []
    for n in counts:
        discrete = r2_discrete(front, n)
        rows.append(ConvergenceRow(n, discrete, exact, abs(discrete - exact)))
    return rows


def format_convergence(rows, precision: int = 17) -> str:
    lines = ["num_weights,discrete,exact,abs_error"]
    for r in rows:
        lines.append(
            ",".join(
                [str(r.num_weights)]
                + [format_number(v, precision) for v in (r.discrete_value, r.exact_value, r.abs_error)]
            )
        )
    return "\n".join(lines) + "\n"


def run_generate(shape: str, n: int, seed: int = 0, precision: int = 17) -> str:
    if shape.strip().lower() == CLOUD_SHAPE:
        points = generate_cloud(n, seed)
    else:
        points = generate_front(FrontShape.parse(shape), n, seed)
    return format_points(points, precision)


def run_check(sizes, seed: int = 0, tol: float = 1e-8, precision: int = 17) -> tuple[str, bool]:
    """Compare the closed form with the quadrature oracle on bi-sphere clouds.

    Returns the report and whether every deviation is within ``tol``.
    """
    sizes = [int(s) for s in sizes]
    if not sizes or min(sizes) < 1:
        raise UsageError("sizes must be a nonempty list of positive integers")
    if not (tol > 0 and math.isfinite(tol)):
        raise UsageError(f"tol must be positive, got {tol}")
    fmt = lambda v: format_number(v, precision)  # noqa: E731
    lines = ["size,front_size,exact,quadrature,deviation,status"]
    worst = 0.0
    ok = True
    for i, size in enumerate(sizes):
        front = nondominated_filter(generate_cloud(size, seed + i))
        exact = r2_exact(front)
        quad = quadrature_r2(front.as_array(), tol=tol / 10)
        dev = abs(exact - quad.value)
        passed = quad.converged and dev <= tol
        ok &= passed
        worst = max(worst, dev)
        status = "PASS" if passed else ("FAIL" if quad.converged else "FAIL (oracle did not converge)")
        lines.append(f"{size},{len(front)},{fmt(exact)},{fmt(quad.value)},{fmt(dev)},{status}")
    lines.append(f"max_deviation,{fmt(worst)}")
    lines.append(f"result,{'PASS' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n", ok


# argument handling


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _pair(text: str) -> ObjectiveVector:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        parts = []
    if len(parts) != 2 or not all(math.isfinite(p) for p in parts):
        raise argparse.ArgumentTypeError(f"expected F1,F2 with two finite numbers, got {text!r}")
    return ObjectiveVector(*parts)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text!r}")
    return value


def _precision(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 17:
        raise argparse.ArgumentTypeError("precision must be between 1 and 17")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="exact-r2", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_precision, default=17, help="significant digits (default 17)")
    common.add_argument("--output", default="-", help="output path (default: standard output)")
    archive = argparse.ArgumentParser(add_help=False)
    archive.add_argument("input", nargs="?", default="-", help="CSV archive (default: standard input)")
    archive.add_argument("--utopian", type=_pair, default=ORIGIN, help="utopian point F1,F2 (default 0,0)")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("filter", parents=[archive, common], help="print the nondominated front")

    p = sub.add_parser("compute", parents=[archive, common], help="compute an indicator")
    p.add_argument("--indicator", choices=INDICATORS, default="r2-exact")
    p.add_argument("--num-weights", type=int, help="weight count for r2-discrete")
    p.add_argument("--ref", type=_pair, help="reference point F1,F2 for hv")

    p = sub.add_parser("convergence", parents=[archive, common], help="discretized vs exact R2")
    p.add_argument("--weights", type=_int_list, default=[10, 100, 1000, 10000, 100000])

    p = sub.add_parser("generate", parents=[common], help="emit points of a reference front")
    p.add_argument("--shape", required=True, help=f"{', '.join(s.value for s in FrontShape)} or {CLOUD_SHAPE}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("check", parents=[common], help="closed form vs quadrature oracle")
    p.add_argument("--sizes", type=_int_list, default=[10, 100, 500])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=_positive_float, default=1e-8)
    return parser


def _read_input(path: str) -> ArchiveFile:
    if path == "-":
        return parse_archive(sys.stdin.buffer.read())
    with open(path, "rb") as fh:
        return parse_archive(fh.read())


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


_PAIR_OPTIONS = ("--utopian", "--ref")
_NEGATIVE_START = re.compile(r"-\.?\d")


def _join_pair_values(argv: list[str]) -> list[str]:
    """Glue ``--utopian -1,-2`` into ``--utopian=-1,-2``.

    argparse takes a value starting with ``-`` for an option unless it looks
    like a single negative number, which a coordinate pair does not.
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _PAIR_OPTIONS and i + 1 < len(argv) and _NEGATIVE_START.match(argv[i + 1]):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def main(argv=None) -> int:
    argv = _join_pair_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    status = EXIT_OK
    try:
        if args.command == "filter":
            text = run_filter(_read_input(args.input), args.utopian, args.precision)
        elif args.command == "compute":
            text = run_compute(
                _read_input(args.input), args.indicator, args.utopian, args.num_weights, args.ref, args.precision
            )
        elif args.command == "convergence":
            rows = run_convergence(_read_input(args.input), args.weights, args.utopian)
            text = format_convergence(rows, args.precision)
        elif args.command == "generate":
            text = run_generate(args.shape, args.n, args.seed, args.precision)
        else:
            text, ok = run_check(args.sizes, args.seed, args.tol, args.precision)
            if not ok:
                status = EXIT_CHECK_FAILED
    except (ParseError, UsageError, OSError) as exc:
        print(f"exact-r2: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExactR2Error as exc:
        print(f"exact-r2: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    _write_output(args.output, text)
    return status


if __name__ == "__main__":
    sys.exit(main())
