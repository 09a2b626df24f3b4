"""Command-line surface with machine-readable JSON/CSV output.

Exit codes: 0 success, 1 input or usage error, 2 violated internal
invariant. Rationals are emitted exactly as "p/q" strings; decimal
renderings are 6 significant digits and advisory only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import admissible, oracle, packing, sieve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse parser that raises instead of calling sys.exit."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


@dataclass(frozen=True)
class CommandResult:
    command: str
    payload: dict
    exit_code: int


def _rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _decimal(value: Fraction) -> str:
    return f"{float(value):.6g}"


def _certificate_payload(command: str, cert: packing.PackingCertificate) -> dict:
    cert.validate()
    return {
        "command": command,
        "k": cert.k,
        "x": cert.x,
        "count": cert.count,
        "raw_count": cert.raw_count,
        "density": _rational(cert.density),
        "decimal": _decimal(cert.density),
        "members": [
            {"label": label, "values": list(ds.sorted_values()), "span": ds.span}
            for label, ds in cert.members
        ],
    }


def _add_format(parser: argparse.ArgumentParser, *, root: bool = False) -> None:
    # Subparsers use SUPPRESS so a --format given before the subcommand
    # is not clobbered by the subparser's default.
    parser.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        default="text" if root else argparse.SUPPRESS,
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="polignac", description=__doc__)
    _add_format(parser, root=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="guaranteed packing density lower bound for size k")
    p.add_argument("--k", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("check", help="decide admissibility of an offset pattern")
    p.add_argument("offsets", type=int, nargs="+")
    _add_format(p)

    p = sub.add_parser("diffs", help="difference set of an offset pattern")
    p.add_argument("offsets", type=int, nargs="+")
    _add_format(p)

    p = sub.add_parser("pack", help="construct a disjoint packing certificate")
    pack_sub = p.add_subparsers(dest="pack_command", required=True)
    q = pack_sub.add_parser("regular", help="first-fit greedy over regular sets")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--x", type=int, required=True)
    _add_format(q)
    q = pack_sub.add_parser("geh", help="size-3 construction from multiples of 6")
    q.add_argument("--x", type=int, required=True)
    q.add_argument(
        "--strategy", choices=("paper-literal", "extended"), default="extended"
    )
    _add_format(q)
    q = pack_sub.add_parser("exact", help="exhaustive maximum packing (k = 3)")
    q.add_argument("--x", type=int, required=True)
    _add_format(q)

    p = sub.add_parser("upper", help="packing density upper bounds")
    p.add_argument("--k", type=int)
    p.add_argument("--k3-finite", action="store_true", dest="k3_finite")
    p.add_argument("--x", type=int)
    _add_format(p)

    p = sub.add_parser("census", help="prime-pair gap census up to x")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    _add_format(p)

    return parser


def _dispatch(args: argparse.Namespace) -> dict:
    if args.command == "bound":
        bound = packing.lower_bound_density(args.k)
        return {
            "command": "bound",
            "k": args.k,
            "value": _rational(bound.value),
            "decimal": _decimal(bound.value),
        }
    if args.command == "check":
        pattern = admissible.normalize(args.offsets)
        return {
            "command": "check",
            "offsets": list(pattern.offsets),
            "admissible": admissible.is_admissible(pattern),
        }
    if args.command == "diffs":
        pattern = admissible.normalize(args.offsets)
        ds = admissible.difference_set(pattern)
        return {
            "command": "diffs",
            "offsets": list(pattern.offsets),
            "values": list(ds.sorted_values()),
            "span": ds.span,
        }
    if args.command == "pack":
        if args.pack_command == "regular":
            cert = packing.greedy_regular_packing(args.k, args.x)
            return _certificate_payload("pack regular", cert)
        if args.pack_command == "geh":
            strategy = args.strategy.replace("-", "_")
            cert = packing.geh_family(args.x, strategy)
            return _certificate_payload("pack geh", cert)
        instance = oracle.enumerate_admissible_diffsets(3, args.x)
        cert = oracle.max_disjoint_packing(instance)
        return _certificate_payload("pack exact", cert)
    if args.command == "upper":
        if args.k3_finite:
            if args.x is None:
                raise UsageError("upper --k3-finite requires --x")
            return {
                "command": "upper",
                "x": args.x,
                "count": packing.k3_finite_upper_bound(args.x),
            }
        if args.k is None:
            raise UsageError("upper requires --k or --k3-finite --x")
        bound = packing.trivial_upper_bound_density(args.k)
        return {
            "command": "upper",
            "k": args.k,
            "value": _rational(bound.value),
            "decimal": _decimal(bound.value),
        }
    if args.command == "census":
        report = sieve.prime_pair_census(args.x, args.dmax)
        return {
            "command": "census",
            "x": report.x,
            "dmax": report.dmax,
            "counts": {str(d): c for d, c in sorted(report.counts.items())},
        }
    raise UsageError(f"unknown command {args.command!r}")


def _render_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if key == "members":
            lines.append(f"members ({len(value)}):")
            for member in value:
                joined = ",".join(str(v) for v in member["values"])
                lines.append(f"  {member['label']}: {{{joined}}} span={member['span']}")
        elif key == "counts":
            for d, c in value.items():
                lines.append(f"d={d}: {c}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _render_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "members" in payload:
        writer.writerow(["label", "values", "span"])
        for member in payload["members"]:
            joined = ";".join(str(v) for v in member["values"])
            writer.writerow([member["label"], joined, member["span"]])
    elif "counts" in payload:
        writer.writerow(["d", "count"])
        for d, c in payload["counts"].items():
            writer.writerow([d, c])
    else:
        writer.writerow(["key", "value"])
        for key, value in payload.items():
            writer.writerow([key, value])
    return buf.getvalue().rstrip("\n")


def run_command(argv: list[str]) -> CommandResult:
    """Parse and execute one invocation; never raises, never exits."""
    command = " ".join(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        payload = _dispatch(args)
    except UsageError as exc:
        return CommandResult(command, {"error": str(exc)}, EXIT_USAGE)
    except ValueError as exc:
        return CommandResult(command, {"error": str(exc)}, EXIT_USAGE)
    except packing.InvariantViolation as exc:
        return CommandResult(command, {"error": str(exc)}, EXIT_INVARIANT)
    return CommandResult(command, payload, EXIT_OK)


def render(result: CommandResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.payload, indent=2, sort_keys=False)
    if fmt == "csv":
        return _render_csv(result.payload)
    return _render_text(result.payload)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "text"
    # Peek at --format so error diagnostics never pollute structured output.
    try:
        ns, _ = _build_parser().parse_known_args(argv)
        fmt = ns.format
    except UsageError:
        pass
    result = run_command(argv)
    if result.exit_code != EXIT_OK:
        print(result.payload.get("error", "error"), file=sys.stderr)
        return result.exit_code
    print(render(result, fmt))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
