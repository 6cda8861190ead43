"""Command-line frontend with reproducible, machine-readable output.

Exit codes: 0 success or verified, 1 verification found violations, 2 usage
or parse error, 3 search cap exceeded. Data goes to stdout, diagnostics to
stderr. Output is byte-identical for identical arguments except for the
elapsed_ms timing fields, which `strip_timing` removes for golden-file
comparisons.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from dataclasses import dataclass

from . import search, structure
from .errors import CapExceeded, ParseError, ZeroSumError
from .groups import GroupSpec, parse_group
from .sequences import parse_sequence
from .structure import VerificationReport

DEFAULT_ENUMERATION_CAP = search.ENUMERATION_CAP
DEFAULT_DAVENPORT_CAP = search.DAVENPORT_CAP
CAP_ENV_VAR = "ZEROSUM_CAP_ORDER"

_TIMING_RE = re.compile(r'("elapsed_ms":\s*)\d+')


def strip_timing(text: str) -> str:
    """Zero out elapsed_ms fields; the documented filter for golden comparisons."""
    return _TIMING_RE.sub(r"\g<1>0", text)


@dataclass(frozen=True)
class CliConfig:
    """Resolved invocation settings (defaults: caps 36/64, 1 worker, seed 0, json)."""

    group: GroupSpec | None
    enumeration_cap: int
    davenport_cap: int
    workers: int
    seed: int
    output: str


def _resolve_config(args: argparse.Namespace) -> CliConfig:
    enum_cap = DEFAULT_ENUMERATION_CAP
    env_cap = os.environ.get(CAP_ENV_VAR)
    if env_cap is not None:
        try:
            enum_cap = int(env_cap)
        except ValueError as exc:
            raise ParseError(f"{CAP_ENV_VAR} must be an integer, got {env_cap!r}") from exc
    dav_cap = DEFAULT_DAVENPORT_CAP
    cap = getattr(args, "cap", None)
    if cap is not None:
        enum_cap = cap
        dav_cap = cap
    group = None
    if getattr(args, "group", None) is not None:
        group = parse_group(args.group)
    return CliConfig(
        group=group,
        enumeration_cap=enum_cap,
        davenport_cap=dav_cap,
        workers=getattr(args, "workers", 1),
        seed=getattr(args, "seed", 0),
        output=getattr(args, "output", "json"),
    )


def _emit_json(out, payload: dict) -> None:
    out.write(json.dumps(payload) + "\n")


def _emit_csv(out, header: list[str], rows: list[list]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_report(out, report: VerificationReport, output: str) -> int:
    payload = report.to_json()
    if output == "json":
        _emit_json(out, payload)
    elif output == "csv":
        _emit_csv(
            out,
            ["check", "params", "checked", "violations", "verdict", "elapsed_ms"],
            [
                [
                    report.check,
                    json.dumps(report.params),
                    report.checked,
                    json.dumps(report.violations),
                    report.verdict,
                    report.elapsed_ms,
                ]
            ],
        )
    else:
        status = "verified" if report.verdict else "FAILED"
        out.write(
            f"{report.check} {json.dumps(report.params)}: {status}, "
            f"{report.checked} checked, {len(report.violations)} violations\n"
        )
        for v in report.violations:
            out.write(f"  violation: {v}\n")
    return 0 if report.verdict else 1


def _cmd_davenport(args, out) -> int:
    cfg = _resolve_config(args)
    result = search.davenport(cfg.group, cap=cfg.davenport_cap)
    if cfg.output == "json":
        _emit_json(out, result.to_json())
    elif cfg.output == "csv":
        _emit_csv(
            out,
            ["group", "D", "witness", "elapsed_ms", "nodes"],
            [[str(result.group), result.d, str(result.witness), result.elapsed_ms, result.nodes]],
        )
    else:
        out.write(f"D({result.group}) = {result.d}, witness {result.witness}\n")
    return 0


def _cmd_enumerate(args, out) -> int:
    cfg = _resolve_config(args)
    seqs, report = search.enumerate_with_report(
        cfg.group, workers=cfg.workers, cap=cfg.enumeration_cap
    )
    if args.canonical:
        lines = [str(s) for s in report.representatives]
    else:
        lines = [str(s) for s in seqs]
    if cfg.output == "csv":
        _emit_csv(out, ["sequence"], [[line] for line in lines])
        return 0
    for line in lines:
        out.write(line + "\n")
    if cfg.output == "json":
        _emit_json(out, report.to_json())
    else:
        out.write(
            f"total {report.total}, orbits {report.orbits}, D = {report.length}\n"
        )
    return 0


def _cmd_classify(args, out) -> int:
    cfg = _resolve_config(args)
    S = parse_sequence(cfg.group, args.sequence)
    result = structure.classify(cfg.group, S)
    payload = {"group": str(cfg.group), "sequence": str(S)}
    payload.update(result.to_json())
    if cfg.output == "json":
        _emit_json(out, payload)
    elif cfg.output == "csv":
        _emit_csv(
            out,
            ["group", "sequence", "is_type1", "type1_witnesses", "is_type2", "type2_witnesses"],
            [
                [
                    str(cfg.group),
                    str(S),
                    result.is_type1,
                    json.dumps(payload["type1_witnesses"]),
                    result.is_type2,
                    json.dumps(payload["type2_witnesses"]),
                ]
            ],
        )
    else:
        out.write(
            f"{S}: type1 = {result.is_type1} "
            f"({len(result.type1_witnesses)} witnesses), "
            f"type2 = {result.is_type2} "
            f"({len(result.type2_witnesses)} witnesses)\n"
        )
    return 0


def _cmd_verify(args, out) -> int:
    cfg = _resolve_config(args)
    target = args.target
    if target == "property-b":
        report = structure.check_property_b(args.m, cap=cfg.enumeration_cap)
    elif target == "cyclic":
        report = structure.check_cyclic_inverse(args.n, cap=cfg.enumeration_cap)
    elif target == "egz":
        report = structure.egz_property(args.n, args.trials, cfg.seed)
    elif target == "theorem":
        report = structure.check_rank_two_structure(
            cfg.group, workers=cfg.workers, cap=cfg.enumeration_cap
        )
    else:  # tm1
        report = structure.tm1_structure_check(args.m, args.t)
    return _emit_report(out, report, cfg.output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerosum",
        description=(
            "Davenport constants, exhaustive enumeration of maximal-length "
            "minimal zero-sum sequences, and structure verification for "
            "finite abelian groups of rank at most two."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, group=False, workers=False, seed=False):
        if group:
            p.add_argument(
                "--group",
                required=True,
                help="comma-separated invariant factors, e.g. 2,4",
            )
        if workers:
            p.add_argument("--workers", type=int, default=1)
        if seed:
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cap", type=int, default=None, help="override search caps")
        p.add_argument(
            "--output", choices=["json", "csv", "text"], default="json"
        )

    p = sub.add_parser("davenport", help="exact Davenport constant with witness")
    add_common(p, group=True)
    p.set_defaults(func=_cmd_davenport)

    p = sub.add_parser(
        "enumerate",
        help="stream every maximal-length minimal zero-sum sequence",
    )
    add_common(p, group=True, workers=True)
    p.add_argument(
        "--canonical",
        action="store_true",
        help="stream one representative per automorphism orbit",
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classify", help="match a sequence against both families")
    add_common(p, group=True)
    p.add_argument("--sequence", required=True, help='e.g. "[0,1]^3 [1,2] [1,3]"')
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument(
        "target", choices=["property-b", "cyclic", "egz", "theorem", "tm1"]
    )
    p.add_argument("--m", type=int, help="order parameter for property-b / tm1")
    p.add_argument("--n", type=int, help="cyclic order for cyclic / egz")
    p.add_argument("--t", type=int, help="block count for tm1")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument(
        "--group", help="comma-separated invariant factors (verify theorem)"
    )
    add_common(p, workers=True, seed=True)
    p.set_defaults(func=_cmd_verify)
    return parser


def _missing_args(args) -> str | None:
    if args.command != "verify":
        return None
    required = {
        "property-b": ["m"],
        "cyclic": ["n"],
        "egz": ["n"],
        "theorem": ["group"],
        "tm1": ["m", "t"],
    }[args.target]
    missing = [name for name in required if getattr(args, name) is None]
    if missing:
        flags = ", ".join(f"--{name}" for name in missing)
        return f"verify {args.target} requires {flags}"
    return None


def run(argv: list[str], out=None, err=None) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    problem = _missing_args(args)
    if problem is not None:
        err.write(f"error: {problem}\n")
        return 2
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        err.write(f"error: {exc}\n")
        return 3
    except ZeroSumError as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
