"""Command-line surface: every operation, machine-readable output.

Exit codes: 0 for any completed computation, including negative mathematical
verdicts (a unitarity violation found is a successful answer); 1 when an
identity that must always hold fails (an implementation bug, not a result);
2 for invalid input.  JSON output is deterministic (sorted keys); the table
format is for humans and carries no stability promise.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .characters import char_irreducible_c1, char_irreducible_generic, verify_su21_branching
from .discrete import classify_central_charge, discrete_c, enumerate_discrete_pairs
from .fock import (
    OscillatorParams,
    oscillator_character,
    sl2_triple_check,
    verify_virasoro_bracket,
)
from .scalars import format_rational, parse_rational
from .verma import VermaParams, gram_matrix, unitarity_scan
from .wzw import full_catalog, scan_noncompact, simple_lie_data, wzw_central_charge

HARD_LEVEL_CAP = 30
ORDER_ENV_VAR = "VIRREP_ORDER"


class InputError(ValueError):
    pass


def default_order() -> int:
    raw = os.environ.get(ORDER_ENV_VAR)
    if raw is None:
        return 24
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"{ORDER_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise InputError(f"{ORDER_ENV_VAR} must be >= 0, got {value}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _check_cap(value: int, what: str, unsafe: bool) -> int:
    if value < 0:
        raise InputError(f"{what} must be >= 0, got {value}")
    if value > HARD_LEVEL_CAP and not unsafe:
        raise InputError(
            f"{what} {value} exceeds the safety cap {HARD_LEVEL_CAP}; "
            "pass --unsafe-level to override"
        )
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="virrep",
        description="Exact lowest-weight representation toolkit "
        "(Gram matrices, unitarity, characters, regime scans).",
    )
    parser.add_argument("--version", action="version", version=f"virrep {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument(
            "--unsafe-level",
            action="store_true",
            help=f"allow levels/orders beyond the cap of {HARD_LEVEL_CAP}",
        )

    p = sub.add_parser("gram", help="Gram matrix of a Verma level")
    p.add_argument("--c", required=True, help="central charge, rational p/q")
    p.add_argument("--h", required=True, help="lowest weight, rational p/q")
    p.add_argument("--level", required=True, type=int)
    add_common(p)

    p = sub.add_parser("unitarity", help="positivity scan of Gram matrices")
    p.add_argument("--c", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--max-level", required=True, type=int)
    add_common(p)

    p = sub.add_parser("discrete", help="discrete series pairs at index m")
    p.add_argument("--m", required=True, type=int)
    add_common(p)

    p = sub.add_parser("regime", help="exact central-charge regime report")
    p.add_argument("--c", required=True)
    add_common(p)

    p = sub.add_parser(
        "oscillator-verify", help="Virasoro bracket checks on Fock space"
    )
    p.add_argument("--lam", required=True, help="deformation, rational p/q")
    p.add_argument("--q", required=True, help="charge, rational p/q")
    p.add_argument("--max-level", required=True, type=int)
    p.add_argument("--nmax", type=int, default=3, help="check |n|,|m| up to this")
    add_common(p)

    p = sub.add_parser("character", help="exact characters as truncated series")
    p.add_argument("--lam", help="oscillator character: deformation")
    p.add_argument("--q", help="oscillator character: charge")
    p.add_argument("--j", type=int, help="irreducible character at (c,h)=(1,j^2)")
    p.add_argument("--c", help="generic irreducible character: central charge")
    p.add_argument("--h", help="generic irreducible character: lowest weight")
    p.add_argument("--order", type=int, default=None)
    add_common(p)

    p = sub.add_parser("branch", help="odd-multiplicity branching verification")
    p.add_argument("--jmax", required=True, type=int)
    p.add_argument("--order", type=int, default=None)
    add_common(p)

    p = sub.add_parser("wzw", help="Sugawara central charges and regime scan")
    p.add_argument("--series", choices=("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2"))
    p.add_argument("--rank", type=int)
    p.add_argument("--level", type=int)
    p.add_argument("--scan", action="store_true", help="scan a whole catalog")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--max-level", type=int, default=10)
    p.add_argument(
        "--catalog",
        help="path to a JSON list of {series, rank, level} entries ('-' for stdin)",
    )
    add_common(p)

    p = sub.add_parser("sl2-check", help="rotation/deformation triple relations")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--lam", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--max-level", required=True, type=int)
    add_common(p)

    return parser


def run(args: argparse.Namespace) -> tuple[int, dict]:
    """Dispatch a parsed request; returns (exit_status, report)."""
    unsafe = getattr(args, "unsafe_level", False)
    cmd = args.command

    if cmd == "gram":
        level = _check_cap(args.level, "level", unsafe)
        params = VermaParams(_rational(args.c), _rational(args.h))
        return 0, gram_matrix(params, level).to_json()

    if cmd == "unitarity":
        max_level = _check_cap(args.max_level, "max-level", unsafe)
        params = VermaParams(_rational(args.c), _rational(args.h))
        return 0, unitarity_scan(params, max_level).to_json()

    if cmd == "discrete":
        if args.m < 1:
            raise InputError(f"m must be >= 1, got {args.m}")
        pairs = enumerate_discrete_pairs(args.m)
        return 0, {
            "m": args.m,
            "c": format_rational(discrete_c(args.m)),
            "count": len(pairs),
            "pairs": [p.to_json() for p in pairs],
        }

    if cmd == "regime":
        return 0, classify_central_charge(_rational(args.c)).to_json()

    if cmd == "oscillator-verify":
        max_level = _check_cap(args.max_level, "max-level", unsafe)
        if args.nmax < 0:
            raise InputError("nmax must be >= 0")
        params = OscillatorParams(_rational(args.lam), _rational(args.q))
        reports = []
        failures = []
        for n in range(-args.nmax, args.nmax + 1):
            for m in range(-args.nmax, args.nmax + 1):
                rep = verify_virasoro_bracket(n, m, params, max_level)
                reports.append(
                    {"n": n, "m": m, "checked": rep["checked"], "pass": rep["pass"]}
                )
                if not rep["pass"]:
                    failures.append(rep)
        report = {
            "identity": "virasoro-bracket-grid",
            "lambda": format_rational(params.lam),
            "q": format_rational(params.q),
            "c": format_rational(params.central_charge),
            "max_level": max_level,
            "nmax": args.nmax,
            "pass": not failures,
            "brackets": reports,
            "failures": failures,
        }
        return (0 if not failures else 1), report

    if cmd == "character":
        order = args.order if args.order is not None else default_order()
        order = _check_cap(order, "order", unsafe)
        by_osc = args.lam is not None or args.q is not None
        by_j = args.j is not None
        by_ch = args.c is not None or args.h is not None
        if sum([by_osc, by_j, by_ch]) != 1:
            raise InputError(
                "choose exactly one of: --lam/--q, --j, or --c/--h"
            )
        if by_osc:
            if args.lam is None or args.q is None:
                raise InputError("oscillator character needs both --lam and --q")
            params = OscillatorParams(_rational(args.lam), _rational(args.q))
            chi = oscillator_character(params, order)
            return 0, {
                "kind": "oscillator",
                "lambda": format_rational(params.lam),
                "q": format_rational(params.q),
                "c": format_rational(params.central_charge),
                "h": format_rational(params.lowest_weight),
                "character": chi.to_json(),
            }
        if by_j:
            if args.j < 0:
                raise InputError("j must be >= 0")
            chi = char_irreducible_c1(args.j, order)
            return 0, {"kind": "c1-irreducible", "j": args.j, "character": chi.to_json()}
        if args.c is None or args.h is None:
            raise InputError("generic character needs both --c and --h")
        chi = char_irreducible_generic(_rational(args.c), _rational(args.h), order)
        return 0, {
            "kind": "generic-irreducible",
            "c": args.c,
            "h": args.h,
            "character": chi.to_json(),
        }

    if cmd == "branch":
        order = args.order if args.order is not None else default_order()
        order = _check_cap(order, "order", unsafe)
        if args.jmax < 0:
            raise InputError("jmax must be >= 0")
        if order >= (args.jmax + 1) ** 2:
            raise InputError(
                f"order must be < (jmax+1)^2 = {(args.jmax + 1) ** 2}"
            )
        report = verify_su21_branching(args.jmax, order)
        return (0 if report["pass"] else 1), report

    if cmd == "wzw":
        return 0, _run_wzw(args, unsafe)

    if cmd == "sl2-check":
        max_level = _check_cap(args.max_level, "max-level", unsafe)
        if args.n < 1:
            raise InputError("n must be >= 1")
        params = OscillatorParams(_rational(args.lam), _rational(args.q))
        report = sl2_triple_check(args.n, params, max_level)
        return (0 if report["pass"] else 1), report

    raise InputError(f"unknown subcommand {cmd!r}")


def _run_wzw(args: argparse.Namespace, unsafe: bool) -> dict:
    single = args.series is not None or args.rank is not None or args.level is not None
    modes = sum([bool(args.scan), bool(args.catalog), single])
    if modes != 1:
        raise InputError("choose one of: --series/--rank/--level, --scan, --catalog")
    if args.catalog:
        raw = sys.stdin.read() if args.catalog == "-" else _read_file(args.catalog)
        try:
            entries = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InputError(f"catalog is not valid JSON: {exc}") from exc
        if not isinstance(entries, list):
            raise InputError("catalog must be a JSON list")
        catalog = []
        for entry in entries:
            try:
                g = simple_lie_data(entry["series"], int(entry["rank"]))
                k = int(entry["level"])
            except (KeyError, TypeError, ValueError) as exc:
                raise InputError(f"bad catalog entry {entry!r}: {exc}") from exc
            if k < 1:
                raise InputError(f"bad catalog entry {entry!r}: level must be >= 1")
            catalog.append((g, k))
        return scan_noncompact(catalog)
    if args.scan:
        if args.max_rank < 1 or args.max_level < 1:
            raise InputError("--max-rank and --max-level must be >= 1")
        return scan_noncompact(full_catalog(args.max_rank, args.max_level))
    if args.series is None or args.rank is None or args.level is None:
        raise InputError("single lookup needs --series, --rank and --level")
    try:
        g = simple_lie_data(args.series, args.rank)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.level < 1:
        raise InputError("level must be >= 1")
    c = wzw_central_charge(g, args.level)
    regime = classify_central_charge(c)
    return {
        "algebra": g.to_json(),
        "level": args.level,
        "c": format_rational(c),
        "regime": regime.to_json(),
    }


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read catalog file {path}: {exc}") from exc


def emit(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    return "\n".join(_table_lines(report, ""))


def _table_lines(value, indent: str):
    if isinstance(value, dict):
        for key in value:
            inner = value[key]
            if isinstance(inner, (dict, list)):
                yield f"{indent}{key}:"
                yield from _table_lines(inner, indent + "  ")
            else:
                yield f"{indent}{key}: {inner}"
    elif isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            yield f"{indent}[{', '.join(str(x) for x in value)}]"
        else:
            for x in value:
                yield from _table_lines(x, indent + "  ")
    else:
        yield f"{indent}{value}"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, report = run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(emit(report, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
