"""
Command-line front end.

    darboux-ladder verify    --family charlier --param mu=1 [--n-max 12] [--json]
    darboux-ladder factorize --family hahn --param alpha=0 --param beta=0 --param N=3 --n 1
    darboux-ladder ladder    --family charlier --param mu=1 --n 2 --direction up
    darboux-ladder generate  --family hahn ... --n-max 2 [--points 0..2] [--csv]

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid input.
Logs go to stderr; stdout carries only the report.
"""

import argparse
import csv
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from . import __version__
from .config import Config
from .darboux import Branch
from .manager import VerificationManager
from .models.requests import FactorizeRequest, GenerateRequest, LadderRequest, VerifyRequest
from .models.responses import FactorizationRecord, GenerateResponse, RunReport
from .utils.exceptions import (
    DarbouxError,
    DegenerateDenominatorError,
    EigenvalueCollisionError,
    InadmissibleParameterError,
    InvalidInputError,
    LadderBoundaryError,
)
from .utils.serialization import format_rational, parse_assignment, poly_from_json

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2

_USAGE_ERRORS = (InvalidInputError, InadmissibleParameterError, EigenvalueCollisionError, LadderBoundaryError)


def _emit_json(payload: Any) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _dump(model: BaseModel, **kwargs) -> Dict[str, Any]:
    return model.model_dump(mode="json", **kwargs)


def _branches(value: str) -> List[Branch]:
    if value == "both":
        return [Branch.RAISE, Branch.LOWER]
    return [Branch(int(value))]


def _family_fields(args: argparse.Namespace) -> Dict[str, Any]:
    """Turn --family/--param/--sigma/--tau into FamilyRequest fields."""
    params: Dict[str, str] = {}
    for item in args.param or []:
        name, value = parse_assignment(item)
        if name in params:
            raise InvalidInputError(f"parameter {name} given twice")
        params[name] = format_rational(value)
    return {"family": args.family, "params": params, "sigma": args.sigma, "tau": args.tau}


# verify


def _print_report(report: RunReport) -> None:
    params = ", ".join(f"{k}={v}" for k, v in report.params.items())
    branches = ",".join(str(b) for b in report.branches)
    print(f"{report.family}({params})  n={report.n_min}..{report.n_max}  branches={branches}")
    if report.inject_fault:
        print(f"fault injected: {report.inject_fault}")
    width = max(len(c.name) for c in report.checks)
    for check in report.checks:
        print(
            f"  {check.name:<{width}}  {check.status:<4}  "
            f"{check.passed} passed, {check.failed} failed, {check.skipped} skipped"
        )
        for outcome in check.outcomes:
            if outcome.status == "fail":
                print(f"    FAIL {outcome.cell}" + (f": {outcome.detail}" if outcome.detail else ""))
    if report.reference is not None and report.reference.discrepancies:
        print(f"reference discrepancies: {', '.join(report.reference.discrepancies)}")
    if report.elapsed_ms is not None:
        print(f"elapsed: {report.elapsed_ms} ms")
    print(f"status: {report.status}")


def _cmd_verify(args: argparse.Namespace, manager: VerificationManager) -> int:
    request = VerifyRequest(
        **_family_fields(args),
        n_max=manager.settings.n_max if args.n_max is None else args.n_max,
        branches=_branches(args.branch),
        strict=args.strict,
        inject_fault=args.inject_fault,
    )
    report = manager.run_suite(request, timing=args.timing)
    if args.json:
        _emit_json(_dump(report, exclude_none=True))
    else:
        _print_report(report)
    return EXIT_OK if report.passed else EXIT_FAILED


# factorize


def _print_record(record: FactorizationRecord) -> None:
    params = ", ".join(f"{k}={v}" for k, v in record.params.items())
    print(f"{record.family}({params})  n={record.n}  branch={record.branch}")
    print(f"  phi = {record.phi}")
    print(f"  psi = {record.psi}")
    print(f"  mu  = {record.mu}")
    print(f"  f   = {str(poly_from_json(record.f))}")
    print(f"  g   = {str(poly_from_json(record.g))}")
    checks = " ".join(f"{k}={'ok' if v else 'FAILED'}" for k, v in _dump(record.checks).items())
    print(f"  checks: {checks}")
    for note in record.notes:
        print(f"  note: {note}")


def _cmd_factorize(args: argparse.Namespace, manager: VerificationManager) -> int:
    request = FactorizeRequest(
        **_family_fields(args), n=args.n, branches=_branches(args.branch), strict=args.strict
    )
    records = manager.factorize(request)
    if args.json:
        payload = [_dump(r) for r in records]
        _emit_json(payload[0] if len(payload) == 1 else payload)
    else:
        for record in records:
            _print_record(record)
    failed = any(not all(_dump(r.checks).values()) for r in records)
    return EXIT_FAILED if failed else EXIT_OK


# ladder and generate


def _cmd_ladder(args: argparse.Namespace, manager: VerificationManager) -> int:
    request = LadderRequest(**_family_fields(args), n=args.n, direction=args.direction)
    record = manager.ladder(request)
    if args.json:
        _emit_json(_dump(record))
    else:
        target = str(poly_from_json(record.target))
        print(f"{record.direction} from n={record.n}: c = {record.c}, Phi = {target}")
    return EXIT_OK


def _write_csv(response: GenerateResponse) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    points = response.points or []
    writer.writerow(["n", "c", "coefficients", *(f"p({x})" for x in points)])
    for row in response.rows:
        coeffs = " ".join(str(c) for c in row.coefficients)
        writer.writerow([row.n, row.c or "", coeffs, *(row.values or [])])
    if response.gauge is not None:
        writer.writerow(["rho", "", "", *response.gauge])


def _print_table(response: GenerateResponse) -> None:
    for row in response.rows:
        phi = str(poly_from_json(row.coefficients))
        c = "" if row.c is None else f"  c = {row.c}"
        print(f"n={row.n}{c}  Phi = {phi}")
        if row.values is not None and response.points is not None:
            values = ", ".join(f"{x}: {v}" for x, v in zip(response.points, row.values))
            print(f"    values  {values}")
    if response.gauge is not None and response.points is not None:
        values = ", ".join(f"{x}: {v}" for x, v in zip(response.points, response.gauge))
        print(f"rho  {values}")


def _cmd_generate(args: argparse.Namespace, manager: VerificationManager) -> int:
    request = GenerateRequest(
        **_family_fields(args),
        n_max=manager.settings.n_max if args.n_max is None else args.n_max,
        points=args.points,
    )
    response = manager.generate(request)
    if args.json:
        _emit_json(_dump(response))
    elif args.csv:
        _write_csv(response)
    else:
        _print_table(response)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", required=True, choices=["charlier", "meixner", "kravchuk", "hahn", "custom"])
    common.add_argument("--param", action="append", metavar="NAME=P/Q", help="Family parameter (repeatable)")
    common.add_argument("--sigma", help="Custom sigma as s0,s1,s2 (highest power first); use --sigma=... for negatives")
    common.add_argument("--tau", help="Custom tau as t0,t1 (highest power first)")
    common.add_argument("--json", action="store_true", help="Emit JSON")
    common.add_argument("--log-level", default="warning", choices=["debug", "info", "warning", "error"])

    parser = argparse.ArgumentParser(prog="darboux-ladder", description="Discrete Darboux factorization toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", parents=[common], help="Run the identity suite for n = 0..n_max")
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--branch", choices=["1", "2", "both"], default="both")
    p_verify.add_argument("--strict", action="store_true", help="Degenerate cells count as failures")
    p_verify.add_argument("--inject-fault", choices=["f", "g", "lambda"], help="Negative control")
    p_verify.add_argument("--timing", action="store_true", help="Include elapsed_ms in the report")
    p_verify.set_defaults(func=_cmd_verify)

    p_fact = sub.add_parser("factorize", parents=[common], help="Print f, g, mu for one (n, branch)")
    p_fact.add_argument("--n", type=int, required=True)
    p_fact.add_argument("--branch", choices=["1", "2", "both"], default="1")
    p_fact.add_argument("--strict", action="store_true", help="Exit 1 on a degenerate branch")
    p_fact.set_defaults(func=_cmd_factorize)

    p_ladder = sub.add_parser("ladder", parents=[common], help="Apply one raising or lowering step")
    p_ladder.add_argument("--n", type=int, required=True)
    p_ladder.add_argument("--direction", choices=["up", "down"], default="up")
    p_ladder.set_defaults(func=_cmd_ladder)

    p_gen = sub.add_parser("generate", parents=[common], help="Monic eigenpolynomials by repeated raising")
    p_gen.add_argument("--n-max", type=int, default=None)
    p_gen.add_argument("--points", metavar="A..B", help="Tabulate exact values on an inclusive lattice range")
    p_gen.add_argument("--csv", action="store_true", help="Emit CSV")
    p_gen.set_defaults(func=_cmd_generate)
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.log_level)

    manager = VerificationManager(Config().verify)
    logger.debug("running %s for %s", args.command, args.family)
    try:
        return int(args.func(args, manager))
    except ValidationError as e:
        _error("; ".join(err["msg"] for err in e.errors()))
        return EXIT_INVALID
    except _USAGE_ERRORS as e:
        _error(str(e))
        return EXIT_INVALID
    except DegenerateDenominatorError as e:
        _error(str(e))
        return EXIT_FAILED
    except DarbouxError as e:
        _error(str(e))
        return EXIT_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
