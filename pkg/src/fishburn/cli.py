"""Command-line front end.

Four subcommands, each a thin wrapper over the library:

    verify  re-check the counting identities for every total up to a bound
    count   print one family's refined count table as CSV or JSON
    map     apply a bijection to a matrix read from a file or stdin
    check   report family membership and statistics for a matrix

Tables and matrices go to standard output and are byte-stable across runs;
wall-clock timings go to standard error.  Exit status is 0 when every
requested check passes, 1 when a check or membership predicate fails, and
2 on unusable input (bad flags, unreadable files, malformed matrix text).
"""

import argparse
import sys
import time
from dataclasses import dataclass

from .bijections import alpha, alpha_inv, beta, beta_inv, selfdual_to_signed_rm
from .enumeration import (
    IDENTITIES,
    FamilyTag,
    count_refined,
    family_violation,
    verify_identity,
)
from .matrices import (
    MatrixConditionError,
    ParseError,
    format_matrix,
    parse_matrix,
    stats,
)

# --- run outcome ---------------------------------------------------------------


@dataclass(frozen=True)
class RunReport:
    """Outcome of one subcommand.

    ``output`` is the exact standard-output payload.  ``counterexample``
    holds the first failing matrix in text format and is set only when
    ``passed`` is False.  ``timings`` holds (label, seconds) pairs.
    """

    command: str
    passed: bool
    output: str
    counterexample: str = None
    timings: tuple = ()


# --- subcommand bodies -----------------------------------------------------------


def cmd_verify(identity, max_size):
    """Run one identity, or all of them, at every total from 1 to max_size."""
    names = IDENTITIES if identity == "all" else (identity,)
    lines = []
    timings = []
    counterexample = None
    passed = True
    for name in names:
        for n in range(1, max_size + 1):
            started = time.perf_counter()
            report = verify_identity(name, n)
            timings.append((f"{name} n={n}", time.perf_counter() - started))
            verdict = "pass" if report.passed else "FAIL"
            lines.append(f"{name} n={n}: {verdict} ({report.detail})")
            if not report.passed:
                passed = False
                if counterexample is None and report.counterexample is not None:
                    counterexample = format_matrix(report.counterexample)
    lines.append("all checks passed" if passed else "FAILURES detected")
    output = "\n".join(lines) + "\n"
    if counterexample is not None:
        output += "counterexample:\n" + counterexample
    return RunReport("verify", passed, output, counterexample, tuple(timings))


def cmd_count(family, n, output_format):
    """Print the refined count table for one family at one total."""
    table = count_refined(family, n)
    payload = table.to_csv() if output_format == "csv" else table.to_json()
    return RunReport("count", True, payload)


_BIJECTIONS = {
    "alpha": alpha,
    "alpha_inv": alpha_inv,
    "beta": beta,
    "beta_inv": beta_inv,
}


def cmd_map(bijection, input_path, trace=False):
    """Apply one bijection, or the composed chain, to a matrix from a file.

    Without --trace the output is just the image matrix, so it can be piped
    straight into another map invocation.  With --trace every labeled
    snapshot is printed instead, the image being the last one.  The chain
    appends a "flag:" line either way.
    """
    m = parse_matrix(_read_input(input_path))
    flag = None
    if bijection == "chain":
        if trace:
            signed, snapshots = selfdual_to_signed_rm(m, want_trace=True)
        else:
            signed, snapshots = selfdual_to_signed_rm(m), None
        image, flag = signed.matrix, signed.flag
    else:
        apply = _BIJECTIONS[bijection]
        if trace:
            image, snapshots = apply(m, want_trace=True)
        else:
            image, snapshots = apply(m), None
    pieces = []
    if trace:
        for label, snapshot in snapshots.steps:
            pieces.append(f"{label}:\n{format_matrix(snapshot)}\n")
    else:
        pieces.append(format_matrix(image))
    if flag is not None:
        pieces.append(f"flag: {flag}\n")
    return RunReport("map", True, "".join(pieces))


def cmd_check(family, input_path):
    """Report whether a matrix from a file belongs to a family, and its
    statistics either way.  Non-membership is a failed check (exit 1)."""
    m = parse_matrix(_read_input(input_path))
    violation = family_violation(family, m)
    lines = []
    if violation is None:
        lines.append("member: yes")
    else:
        lines.append("member: no")
        lines.append(f"reason: {violation}")
    vector = stats(m)
    lines.append(f"size: {vector.size}")
    lines.append(f"reduced_size: {vector.reduced_size}")
    lines.append(f"first_row_sum: {vector.first_row_sum}")
    lines.append(f"diag_sum: {vector.diag_sum}")
    lines.append(f"center_col_sum: {vector.center_col_sum}")
    lines.append(f"last_col_sum: {vector.last_col_sum}")
    lines.append(f"dim: {vector.dim}")
    lines.append(f"dim_parity: {vector.dim_parity.value}")
    passed = violation is None
    return RunReport("check", passed, "\n".join(lines) + "\n",
                     format_matrix(m) if not passed else None)


# --- argument plumbing -----------------------------------------------------------


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


_FAMILY_NAMES = tuple(tag.value for tag in FamilyTag)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fishburn",
        description="Verify, count, map, and check triangular-matrix families.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="re-check the counting identities up to a size bound")
    p_verify.add_argument(
        "--identity", choices=IDENTITIES + ("all",), default="all",
        help="which identity to check (default: all)")
    p_verify.add_argument(
        "--max-size", type=_positive_int, default=4, metavar="N",
        help="largest total to check (default: 4)")

    p_count = sub.add_parser(
        "count", help="print one family's refined count table")
    p_count.add_argument("--family", choices=_FAMILY_NAMES, required=True)
    p_count.add_argument("--size", type=_positive_int, required=True, metavar="N")
    p_count.add_argument("--format", choices=("csv", "json"), default="csv")

    p_map = sub.add_parser(
        "map", help="apply a bijection to a matrix read from a file")
    p_map.add_argument(
        "--bijection", required=True,
        choices=("alpha", "alpha_inv", "beta", "beta_inv", "chain"))
    p_map.add_argument(
        "--input", required=True, metavar="FILE",
        help="matrix file in the text format, or - for stdin")
    p_map.add_argument(
        "--trace", action="store_true",
        help="print every labeled intermediate snapshot")

    p_check = sub.add_parser(
        "check", help="report family membership and statistics for a matrix")
    p_check.add_argument("--family", choices=_FAMILY_NAMES, required=True)
    p_check.add_argument("--input", required=True, metavar="FILE")
    return parser


def _dispatch(args):
    if args.command == "verify":
        return cmd_verify(args.identity, args.max_size)
    if args.command == "count":
        return cmd_count(FamilyTag(args.family), args.size, args.format)
    if args.command == "map":
        return cmd_map(args.bijection, args.input, args.trace)
    return cmd_check(FamilyTag(args.family), args.input)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report = _dispatch(args)
    except (ParseError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MatrixConditionError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(report.output)
    for label, seconds in report.timings:
        print(f"{label}: {seconds:.3f}s", file=sys.stderr)
    return 0 if report.passed else 1
