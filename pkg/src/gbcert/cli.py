"""Command-line interface: one subcommand per goal class.

Every invocation reads JSON (a task, or for ``check`` a certificate) from
--task FILE or stdin, writes exactly one JSON document to stdout, and encodes
the verdict in the exit code:

    0  positive verdict, certificate checks
    1  negative verdict, certificate checks
    2  usage, parse, or backend error
    3  budget or timeout exhausted
    4  certificate rejected by the trusted checker

``check`` runs only the trusted checker; it never touches the engine.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import check, wire
from .errors import (
    CertificateRejectedError,
    GbError,
    MalformedJsonError,
    MalformedOracleOutputError,
    OracleSpawnFailureError,
    OracleTimeoutError,
    UnsupportedBackendError,
)
from .runner import Backend, BackendConfig, run_task
from .wire import Status, TaskKind

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_REJECTED = 4

_SUBCOMMAND_KINDS = {
    "reduce": {TaskKind.REDUCE, TaskKind.NORMAL_FORM},
    "gb": {TaskKind.GROEBNER_BASIS},
    "member": {TaskKind.IDEAL_MEMBERSHIP},
    "radical": {TaskKind.RADICAL_MEMBERSHIP},
    "ideal-eq": {TaskKind.IDEAL_EQUALITY},
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbcert",
        description="Certified Groebner-basis computations over Q with the lex order.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--task",
        metavar="FILE",
        default=None,
        help="input JSON file (default: read stdin)",
    )
    common.add_argument(
        "--backend",
        type=int,
        choices=[0, 1, 2],
        default=0,
        help="0 = internal engine, 1 = remote (stub), 2 = external oracle",
    )
    common.add_argument("--timeout", type=float, default=30.0, help="oracle timeout, seconds")
    common.add_argument("--max-exp", type=int, default=64, help="radical exponent search budget")
    common.add_argument("--pair-budget", type=int, default=None, help="S-pair budget for basis runs")
    common.add_argument("--oracle-cmd", default=None, help="command line of the oracle process")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("reduce", parents=[common], help="divide f by a divisor list, certify the remainder")
    sub.add_parser("gb", parents=[common], help="compute and certify a Groebner basis")
    sub.add_parser("member", parents=[common], help="decide ideal membership with a certificate")
    sub.add_parser("radical", parents=[common], help="decide radical membership with a certificate")
    sub.add_parser("ideal-eq", parents=[common], help="certify equality of two ideals")
    sub.add_parser("check", parents=[common], help="run only the trusted checker on a certificate")
    return parser


def _read_input(path: str | None) -> str:
    if path is None:
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _emit(obj_text: str) -> None:
    sys.stdout.write(obj_text + "\n")


def _error_envelope(message: str) -> str:
    return wire.encode_result(wire.ResultEnvelope(Status.ERROR, message=message))


def _exit_code_for(envelope: wire.ResultEnvelope) -> int:
    if envelope.status is Status.OK:
        return EXIT_POSITIVE
    if envelope.status in (Status.NOT_MEMBER, Status.NOT_EQUAL, Status.NOT_IN_RADICAL):
        return EXIT_NEGATIVE
    if envelope.status is Status.IN_RADICAL:
        return EXIT_BUDGET
    message = envelope.message or ""
    if message.startswith("CertificateRejected"):
        return EXIT_REJECTED
    if message.startswith("BudgetExceeded"):
        return EXIT_BUDGET
    return EXIT_USAGE


def _run_check(args: argparse.Namespace) -> int:
    try:
        cert = wire.decode_certificate(_read_input(args.task))
    except MalformedJsonError as exc:
        _emit(_error_envelope(f"MalformedJson: {exc}"))
        return EXIT_USAGE
    except OSError as exc:
        _emit(_error_envelope(f"InputError: {exc}"))
        return EXIT_USAGE
    try:
        report = check.check_certificate(cert)
    except GbError as exc:
        _emit(_error_envelope(f"CertificateRejected: {type(exc).__name__}: {exc}"))
        return EXIT_REJECTED
    _emit(wire.encode_report(report))
    return EXIT_POSITIVE if report.ok else EXIT_REJECTED


def _run_task_command(command: str, args: argparse.Namespace) -> int:
    try:
        task = wire.decode_task(_read_input(args.task))
    except MalformedJsonError as exc:
        _emit(_error_envelope(f"MalformedJson: {exc}"))
        return EXIT_USAGE
    except OSError as exc:
        _emit(_error_envelope(f"InputError: {exc}"))
        return EXIT_USAGE
    if task.kind not in _SUBCOMMAND_KINDS[command]:
        _emit(_error_envelope(f"WrongTaskKind: {task.kind.value} task given to '{command}'"))
        return EXIT_USAGE
    try:
        cfg = BackendConfig(
            backend=Backend(args.backend),
            oracle_command=args.oracle_cmd,
            timeout=args.timeout,
            max_exp=args.max_exp,
            pair_budget=args.pair_budget,
        )
    except ValueError as exc:
        _emit(_error_envelope(f"BadConfig: {exc}"))
        return EXIT_USAGE
    try:
        envelope = run_task(task, cfg)
    except OracleTimeoutError as exc:
        _emit(_error_envelope(f"OracleTimeout: {exc}"))
        return EXIT_BUDGET
    except (UnsupportedBackendError, OracleSpawnFailureError, MalformedOracleOutputError) as exc:
        _emit(_error_envelope(f"{type(exc).__name__.removesuffix('Error')}: {exc}"))
        return EXIT_USAGE
    except CertificateRejectedError as exc:
        _emit(_error_envelope(f"CertificateRejected: {exc}"))
        return EXIT_REJECTED
    except GbError as exc:
        _emit(_error_envelope(f"{type(exc).__name__.removesuffix('Error')}: {exc}"))
        return EXIT_USAGE
    _emit(wire.encode_result(envelope))
    return _exit_code_for(envelope)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "check":
        return _run_check(args)
    return _run_task_command(args.command, args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
