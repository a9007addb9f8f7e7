"""Command-line interface.

Subcommands: compute, dnsg, partitions, dns, realize, verify.  Output goes
to stdout or, with --output, to a file.  Exit codes: 0 success, 1 failed
verification or internal arithmetic fault, 2 usage error, 3 inadmissible
degree sequence.  Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import graphs, partitions, poly, verify


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _add_common(sub: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    sub.add_argument(
        "--format",
        choices=formats,
        default="text",
        help="output format (default: text)",
    )
    sub.add_argument("--output", metavar="PATH", help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonsep",
        description=(
            "Compute the polynomial recurrence, enumerate and realize degree "
            "sequences of non-separable multigraphs, and verify the "
            "identities tying the two together."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p_compute = commands.add_parser(
        "compute", help="print the polynomial at index n"
    )
    p_compute.add_argument("--n", type=int, required=True, help="polynomial index, n >= 2")
    p_compute.add_argument(
        "--augmented",
        action="store_true",
        help="include the X_n^2 square term",
    )
    _add_common(p_compute, ("text", "json", "csv"))

    p_dnsg = commands.add_parser(
        "dnsg",
        help="degree sequences (length >= 3) of non-separable graphs with n edges",
    )
    p_dnsg.add_argument("--n", type=int, required=True, help="edge count, n >= 2")
    mode = p_dnsg.add_mutually_exclusive_group()
    mode.add_argument("--list", action="store_true", help="list the sequences (default)")
    mode.add_argument("--count", action="store_true", help="print counts instead of sequences")
    _add_common(p_dnsg, ("text", "json", "csv"))

    p_part = commands.add_parser("partitions", help="partition number p(k)")
    p_part.add_argument("--k", type=int, required=True, help="argument of p, k >= 0")
    _add_common(p_part, ("text", "json"))

    p_dns = commands.add_parser(
        "dns", help="count of non-separable degree sequences of a given degree sum"
    )
    p_dns.add_argument("--sum", type=int, required=True, help="even degree sum >= 4")
    _add_common(p_dns, ("text", "json"))

    p_realize = commands.add_parser(
        "realize", help="build a certified non-separable realization of a degree sequence"
    )
    p_realize.add_argument(
        "--seq", required=True, metavar="D1,D2,...", help="comma-separated degree sequence"
    )
    _add_common(p_realize, ("text", "json", "dot"))

    p_verify = commands.add_parser("verify", help="run the verification suite for n = 3..max_n")
    p_verify.add_argument("--max-n", type=int, required=True, help="largest index, >= 3")
    p_verify.add_argument(
        "--checks",
        metavar="NAMES",
        help=f"comma-separated subset of {','.join(verify.ALL_CHECKS)} (default: all)",
    )
    p_verify.add_argument(
        "--realize-max-n",
        type=int,
        default=verify.REALIZE_DEFAULT_MAX_N,
        help="skip the realize check above this n (default: %(default)s)",
    )
    _add_common(p_verify, ("text", "json"))

    return parser


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_compute(args, parser) -> tuple[str, int]:
    if args.n < 2:
        parser.error(f"--n must be >= 2, got {args.n}")
    p = poly.augmented_poly(args.n) if args.augmented else poly.recurrence_poly(args.n)
    if args.format == "json":
        return _json_text(p.to_json_terms()), 0
    if args.format == "csv":
        rows = [(mono.text(), str(coeff)) for mono, coeff in p.sorted_terms()]
        return _csv_text(("monomial", "coefficient"), rows), 0
    return p.to_text() + "\n", 0


def _cmd_dnsg(args, parser) -> tuple[str, int]:
    if args.n < 2:
        parser.error(f"--n must be >= 2, got {args.n}")
    seqs = partitions.nonseparable_sequences(args.n)
    if args.count:
        counts = {
            "n": args.n,
            "dnsg_count": len(seqs),
            "dns_count": partitions.dns_count(2 * args.n),
        }
        if args.format == "json":
            return _json_text(counts), 0
        if args.format == "csv":
            parser.error("--count supports text or json output")
        return f"dnsg_count: {counts['dnsg_count']}\ndns_count: {counts['dns_count']}\n", 0
    if args.format == "json":
        return _json_text({"n": args.n, "sequences": [list(s) for s in seqs]}), 0
    if args.format == "csv":
        return _csv_text(("sequence",), [(partitions.format_sequence(s),) for s in seqs]), 0
    return "".join(partitions.format_sequence(s) + "\n" for s in seqs), 0


def _cmd_partitions(args, parser) -> tuple[str, int]:
    if args.k < 0:
        parser.error(f"--k must be >= 0, got {args.k}")
    value = partitions.partition_count(args.k)
    if args.format == "json":
        return _json_text({"k": args.k, "partitions": value}), 0
    return f"{value}\n", 0


def _cmd_dns(args, parser) -> tuple[str, int]:
    if args.sum < 4 or args.sum % 2:
        parser.error(f"--sum must be even and >= 4, got {args.sum}")
    value = partitions.dns_count(args.sum)
    if args.format == "json":
        return _json_text({"degree_sum": args.sum, "dns_count": value}), 0
    return f"{value}\n", 0


def _cmd_realize(args, parser) -> tuple[str, int]:
    try:
        seq = partitions.parse_sequence(args.seq)
    except ValueError as exc:
        parser.error(str(exc))
    result = graphs.realize_nonseparable(seq)
    if not result.certified:
        print("realization failed certification", file=sys.stderr)
        return "", 1
    g = result.graph
    if args.format == "json":
        return _json_text(graphs.to_json_dict(g)), 0
    if args.format == "dot":
        return graphs.to_dot(g) + "\n", 0
    lines = [f"vertices: {g.vertex_count}"]
    lines += [f"edge: {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n", 0


def _cmd_verify(args, parser) -> tuple[str, int]:
    if args.max_n < 3:
        parser.error(f"--max-n must be >= 3, got {args.max_n}")
    checks = None
    if args.checks:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
        unknown = [c for c in checks if c not in verify.ALL_CHECKS]
        if unknown:
            parser.error(f"unknown checks: {','.join(unknown)}")
    reports = verify.run_suite(args.max_n, checks=checks, realize_max_n=args.realize_max_n)
    code = 0 if verify.suite_passed(reports) else 1
    if args.format == "json":
        return _json_text(verify.reports_to_json(reports)), code
    return verify.render_table(reports) + "\n", code


_DISPATCH = {
    "compute": _cmd_compute,
    "dnsg": _cmd_dnsg,
    "partitions": _cmd_partitions,
    "dns": _cmd_dns,
    "realize": _cmd_realize,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = _DISPATCH[args.command](args, parser)
    except graphs.InadmissibleSequenceError as exc:
        print(f"inadmissible sequence ({exc.reason}): {exc}", file=sys.stderr)
        return 3
    except poly.ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except poly.IntegralityError as exc:
        print(f"internal arithmetic fault: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
