"""Task execution on the internal engine or an external oracle process.

The oracle is untrusted. Its positive answers are re-checked against the
task by the trusted checker before they are reported, and its negative or
uncertified verdicts are never passed through: the internal engine re-derives
the supporting certificate first. One child process is spawned per task; the
protocol is task JSON on stdin, result JSON on stdout.
"""

from __future__ import annotations

import os
import shlex
import subprocess
from dataclasses import dataclass, replace
from enum import IntEnum

from . import check, generate, wire
from .certificates import (
    Certificate,
    GroebnerCert,
    IdealEqCert,
    InRadical,
    MembershipCert,
    NonMembershipCert,
    NotEqual,
    NotInRadical,
    RadicalMemberCert,
    RadicalNonMemberCert,
    RemainderCert,
)
from .errors import (
    BudgetExceededError,
    CertificateRejectedError,
    ExponentBudgetError,
    MalformedJsonError,
    MalformedOracleOutputError,
    OracleSpawnFailureError,
    OracleTimeoutError,
    UnsupportedBackendError,
)
from .report import CheckReport, Condition
from .wire import GbTask, ResultEnvelope, Status, TaskKind

ENV_BACKEND = "GB_BACKEND"
ENV_ORACLE_CMD = "GB_ORACLE_CMD"


class Backend(IntEnum):
    INTERNAL = 0
    REMOTE = 1
    ORACLE = 2


@dataclass(frozen=True)
class BackendConfig:
    """Execution knobs: which backend runs a task and with what budgets."""

    backend: Backend = Backend.INTERNAL
    oracle_command: str | None = None
    timeout: float = 30.0
    max_exp: int = generate.DEFAULT_MAX_EXPONENT
    pair_budget: int | None = None

    def __post_init__(self) -> None:
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.max_exp < 1:
            raise ValueError("max_exp must be >= 1")


def apply_env_overrides(cfg: BackendConfig, env: dict[str, str] | None = None) -> BackendConfig:
    """GB_BACKEND and GB_ORACLE_CMD take precedence over the given config."""
    env = os.environ if env is None else env
    if ENV_BACKEND in env:
        try:
            cfg = replace(cfg, backend=Backend(int(env[ENV_BACKEND])))
        except ValueError:
            raise UnsupportedBackendError(
                f"{ENV_BACKEND} must be 0, 1 or 2, got {env[ENV_BACKEND]!r}"
            ) from None
    if ENV_ORACLE_CMD in env:
        cfg = replace(cfg, oracle_command=env[ENV_ORACLE_CMD])
    return cfg


# -- certificate-vs-task validation ---------------------------------------------

_POSITIVE_TYPES = {
    TaskKind.REDUCE: RemainderCert,
    TaskKind.NORMAL_FORM: RemainderCert,
    TaskKind.GROEBNER_BASIS: GroebnerCert,
    TaskKind.IDEAL_MEMBERSHIP: MembershipCert,
    TaskKind.RADICAL_MEMBERSHIP: RadicalMemberCert,
    TaskKind.IDEAL_EQUALITY: IdealEqCert,
}

_NEGATIVE_TYPES = {
    TaskKind.IDEAL_MEMBERSHIP: NonMembershipCert,
    TaskKind.RADICAL_MEMBERSHIP: RadicalNonMemberCert,
    TaskKind.IDEAL_EQUALITY: NonMembershipCert,
}


def _claim_ties(task: GbTask, cert: Certificate) -> list[Condition]:
    """Conditions tying the certificate's claim inputs to the task's inputs."""

    def tie(name: str, ok: bool, detail: str) -> Condition:
        return Condition(name, ok, "" if ok else detail)

    if isinstance(cert, RemainderCert):
        ties = [tie("task_target", cert.target == task.f, "certificate is about a different dividend")]
        if task.kind is TaskKind.REDUCE:
            ties.append(
                tie(
                    "task_divisors",
                    cert.divisors == task.polys,
                    "certificate divides by a different list",
                )
            )
        return ties
    if isinstance(cert, GroebnerCert):
        return [tie("task_generators", cert.target == task.polys, "certificate is about different generators")]
    if isinstance(cert, (MembershipCert, RadicalMemberCert, RadicalNonMemberCert)):
        return [
            tie("task_target", cert.target == task.f, "certificate is about a different target"),
            tie(
                "task_generators",
                cert.generators == task.polys,
                "certificate is about different generators",
            ),
        ]
    if isinstance(cert, NonMembershipCert):
        if task.kind is TaskKind.IDEAL_EQUALITY:
            fits = (cert.target in task.left and cert.generators == task.right) or (
                cert.target in task.right and cert.generators == task.left
            )
            return [
                tie(
                    "task_witness",
                    fits,
                    "certificate does not separate a generator of one side from the other side",
                )
            ]
        return [
            tie("task_target", cert.target == task.f, "certificate is about a different target"),
            tie(
                "task_generators",
                cert.generators == task.polys,
                "certificate is about different generators",
            ),
        ]
    if isinstance(cert, IdealEqCert):
        return [
            tie("task_left", cert.left == task.left, "certificate is about a different left side"),
            tie("task_right", cert.right == task.right, "certificate is about a different right side"),
        ]
    return [Condition("task_match", False, f"unexpected certificate {type(cert).__name__}")]


def validate_certificate(task: GbTask, cert: Certificate, status: Status = Status.OK) -> CheckReport:
    """Trusted validation of a certificate as an answer to a concrete task.

    Checks that the certificate type fits the task kind and claimed status,
    that its claim inputs equal the task's inputs, and that the certificate
    itself passes its checker.
    """
    expected = (_POSITIVE_TYPES if status is Status.OK else _NEGATIVE_TYPES).get(task.kind)
    if expected is None or not isinstance(cert, expected):
        return CheckReport.from_conditions(
            [
                Condition(
                    "certificate_type",
                    False,
                    f"{type(cert).__name__} does not answer a {task.kind.value} task with status {status.value}",
                )
            ]
        )
    conditions = [Condition("certificate_type", True, "")]
    conditions.extend(_claim_ties(task, cert))
    conditions.extend(check.check_certificate(cert).conditions)
    return CheckReport.from_conditions(conditions)


# -- internal backend ------------------------------------------------------------


def _run_internal(task: GbTask, cfg: BackendConfig) -> ResultEnvelope:
    budget = cfg.pair_budget
    try:
        if task.kind is TaskKind.REDUCE:
            return ResultEnvelope(Status.OK, generate.gen_remainder(task.f, task.polys))
        if task.kind is TaskKind.NORMAL_FORM:
            return ResultEnvelope(
                Status.OK, generate.gen_normal_form(task.f, task.polys, pair_budget=budget)
            )
        if task.kind is TaskKind.GROEBNER_BASIS:
            return ResultEnvelope(
                Status.OK, generate.gen_groebner_cert(task.polys, pair_budget=budget)
            )
        if task.kind is TaskKind.IDEAL_MEMBERSHIP:
            result = generate.decide_membership(task.f, task.polys, pair_budget=budget)
            if isinstance(result, MembershipCert):
                return ResultEnvelope(Status.OK, result)
            return ResultEnvelope(Status.NOT_MEMBER, result)
        if task.kind is TaskKind.RADICAL_MEMBERSHIP:
            return _run_radical(task, cfg)
        if task.kind is TaskKind.IDEAL_EQUALITY:
            result = generate.gen_ideal_eq(task.left, task.right, pair_budget=budget)
            if isinstance(result, IdealEqCert):
                return ResultEnvelope(Status.OK, result)
            return _ideal_eq_negative(task, result, cfg)
        raise AssertionError(f"unhandled task kind {task.kind}")
    except BudgetExceededError as exc:
        return ResultEnvelope(Status.ERROR, message=f"BudgetExceeded: {exc}")


def _run_radical(task: GbTask, cfg: BackendConfig) -> ResultEnvelope:
    try:
        result = generate.gen_radical_member(
            task.f, task.polys, max_exp=cfg.max_exp, pair_budget=cfg.pair_budget
        )
    except ExponentBudgetError as exc:
        # membership in the radical is established, but uncertified
        return ResultEnvelope(Status.IN_RADICAL, message=f"BudgetExceeded: {exc}")
    if isinstance(result, RadicalMemberCert):
        return ResultEnvelope(Status.OK, result)
    negative = generate.gen_radical_nonmember(task.f, task.polys, pair_budget=cfg.pair_budget)
    if isinstance(negative, InRadical):
        raise AssertionError("inconsistent radical decisions for the same input")
    return ResultEnvelope(Status.NOT_IN_RADICAL, negative)


def _ideal_eq_negative(task: GbTask, verdict: NotEqual, cfg: BackendConfig) -> ResultEnvelope:
    other = task.right if verdict.side == "left" else task.left
    witness = generate.decide_membership(verdict.generator, other, pair_budget=cfg.pair_budget)
    assert isinstance(witness, NonMembershipCert)
    return ResultEnvelope(
        Status.NOT_EQUAL,
        witness,
        message=f"{verdict.side} generator {verdict.index} is not in the other ideal",
    )


# -- oracle backend ---------------------------------------------------------------


def _run_oracle_process(task: GbTask, cfg: BackendConfig) -> ResultEnvelope:
    if not cfg.oracle_command:
        raise UnsupportedBackendError("oracle backend selected but no oracle command configured")
    argv = shlex.split(cfg.oracle_command)
    try:
        proc = subprocess.run(
            argv,
            input=wire.encode_task(task).encode("utf-8"),
            capture_output=True,
            timeout=cfg.timeout,
        )
    except subprocess.TimeoutExpired as exc:
        raise OracleTimeoutError(
            f"oracle did not answer within {cfg.timeout}s"
        ) from exc
    except OSError as exc:
        raise OracleSpawnFailureError(f"cannot start oracle {argv[0]!r}: {exc}") from exc

    stdout = proc.stdout.decode("utf-8", errors="replace")
    if proc.returncode != 0:
        try:
            envelope = wire.decode_result(stdout)
        except MalformedJsonError:
            stderr = proc.stderr.decode("utf-8", errors="replace").strip()
            raise MalformedOracleOutputError(
                f"oracle exited with {proc.returncode}: {stderr[:400]}"
            ) from None
        if envelope.status is Status.ERROR:
            return envelope
        raise MalformedOracleOutputError(
            f"oracle exited with {proc.returncode} but claimed status {envelope.status.value}"
        )
    try:
        return wire.decode_result(stdout)
    except MalformedJsonError as exc:
        raise MalformedOracleOutputError(f"unparseable oracle output: {exc}") from exc


def certify_result(task: GbTask, raw: ResultEnvelope, cfg: BackendConfig | None = None) -> ResultEnvelope:
    """Turn an untrusted envelope into a trusted one.

    Positive answers must carry a certificate that validates against the
    task; otherwise CertificateRejectedError is raised. Negative and
    uncertified verdicts are recomputed by the internal engine, which either
    confirms them with its own certificate or overturns them.
    """
    cfg = cfg or BackendConfig()
    if raw.status is Status.OK:
        if raw.certificate is None:
            raise CertificateRejectedError("status ok without a certificate")
        report = validate_certificate(task, raw.certificate, Status.OK)
        if not report.ok:
            failed = ", ".join(c.name for c in report.failures[:4])
            raise CertificateRejectedError(f"certificate failed checks: {failed}")
        return ResultEnvelope(Status.OK, raw.certificate)
    if raw.status is Status.ERROR:
        return raw
    # negative or uncertified claim: never trusted as-is
    return _run_internal(task, cfg)


def run_task(task: GbTask, cfg: BackendConfig | None = None) -> ResultEnvelope:
    """Execute a task on the configured backend and certify the outcome."""
    cfg = apply_env_overrides(cfg or BackendConfig())
    if cfg.backend is Backend.REMOTE:
        raise UnsupportedBackendError("the remote backend is a stub")
    if cfg.backend is Backend.INTERNAL:
        return _run_internal(task, cfg)
    raw = _run_oracle_process(task, cfg)
    try:
        return certify_result(task, raw, cfg)
    except CertificateRejectedError as exc:
        return ResultEnvelope(Status.ERROR, message=f"CertificateRejected: {exc}")
