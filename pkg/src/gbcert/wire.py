"""JSON wire formats: polynomials, task descriptors, certificates, results.

Serialization is canonical (fixed key order, no insignificant whitespace) so
equal values always produce identical bytes. Parsing is liberal: input that
is non-canonical but meaningful (unsorted terms, duplicate monomials,
unreduced fractions, zero coefficients, zero exponents) is normalized rather
than rejected, because external solvers vary in formatting. Structural junk
is rejected with the specific error subtype.

A polynomial is an array of term objects, coefficient before exponents:

    [{"c": [3, 4], "e": [[1, 2], [2, 1]]}, {"c": [-7, 1], "e": [[3, 5]]}]

where "c" is [numerator, denominator] and "e" lists [variable, exponent]
pairs. The zero polynomial is the empty array.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence

from .certificates import (
    Certificate,
    GroebnerCert,
    IdealEqCert,
    MembershipCert,
    NonMembershipCert,
    PairWitness,
    RadicalMemberCert,
    RadicalNonMemberCert,
    RemainderCert,
)
from .errors import (
    MalformedJsonError,
    UnknownTaskError,
    UnsupportedOrderError,
    VariableOutOfRangeError,
    ZeroDenominatorError,
)
from .poly import Monomial, Poly
from .report import CheckReport, Condition

LEX_ORDER = "lex"


def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _loads(text: str | bytes) -> Any:
    try:
        return json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedJsonError(f"invalid JSON: {exc}") from exc


# -- polynomials --------------------------------------------------------------


def poly_to_obj(p: Poly) -> list[dict[str, Any]]:
    return [
        {
            "c": [t.coeff.numerator, t.coeff.denominator],
            "e": [[v, e] for v, e in t.mono.exps],
        }
        for t in p.terms
    ]


def _int_field(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedJsonError(f"{what} must be an integer, got {value!r}")
    return value


def poly_from_obj(obj: Any, nvars: int) -> Poly:
    if not isinstance(obj, list):
        raise MalformedJsonError("a polynomial must be an array of terms")
    pairs: list[tuple[Fraction, Monomial]] = []
    for entry in obj:
        if not isinstance(entry, dict) or "c" not in entry or "e" not in entry:
            raise MalformedJsonError(f"term must be an object with 'c' and 'e': {entry!r}")
        c = entry["c"]
        if not isinstance(c, list) or len(c) != 2:
            raise MalformedJsonError(f"'c' must be [numerator, denominator]: {c!r}")
        num = _int_field(c[0], "numerator")
        den = _int_field(c[1], "denominator")
        if den == 0:
            raise ZeroDenominatorError(f"zero denominator in coefficient {c!r}")
        exps = entry["e"]
        if not isinstance(exps, list):
            raise MalformedJsonError(f"'e' must be an array of pairs: {exps!r}")
        mono_pairs = []
        for pair in exps:
            if not isinstance(pair, list) or len(pair) != 2:
                raise MalformedJsonError(f"exponent entry must be [variable, exponent]: {pair!r}")
            var = _int_field(pair[0], "variable index")
            exp = _int_field(pair[1], "exponent")
            if var < 0:
                raise MalformedJsonError(f"negative variable index {var}")
            if var >= nvars:
                raise VariableOutOfRangeError(f"variable x{var} out of range for nvars={nvars}")
            if exp < 0:
                raise MalformedJsonError(f"negative exponent {exp}")
            mono_pairs.append((var, exp))
        pairs.append((Fraction(num, den), Monomial.from_pairs(mono_pairs)))
    return Poly.from_terms(nvars, pairs)


def serialize_poly(p: Poly) -> str:
    """Canonical byte-stable string form of a polynomial."""
    return _dumps(poly_to_obj(p))


def parse_poly(j: str | bytes | list, nvars: int) -> Poly:
    """Parse a polynomial from a JSON string or an already-decoded array."""
    obj = _loads(j) if isinstance(j, (str, bytes)) else j
    return poly_from_obj(obj, nvars)


def _polys_to_obj(polys: Sequence[Poly]) -> list[list]:
    return [poly_to_obj(p) for p in polys]


def _polys_from_obj(obj: Any, nvars: int, what: str) -> tuple[Poly, ...]:
    if not isinstance(obj, list):
        raise MalformedJsonError(f"'{what}' must be an array of polynomials")
    return tuple(poly_from_obj(entry, nvars) for entry in obj)


# -- task descriptors ----------------------------------------------------------


class TaskKind(str, Enum):
    REDUCE = "reduce"
    GROEBNER_BASIS = "groebner_basis"
    NORMAL_FORM = "normal_form"
    IDEAL_MEMBERSHIP = "ideal_membership"
    RADICAL_MEMBERSHIP = "radical_membership"
    IDEAL_EQUALITY = "ideal_equality"


_KINDS_WITH_TARGET = {
    TaskKind.REDUCE,
    TaskKind.NORMAL_FORM,
    TaskKind.IDEAL_MEMBERSHIP,
    TaskKind.RADICAL_MEMBERSHIP,
}


@dataclass(frozen=True)
class GbTask:
    """One unit of work for a backend: an operation plus its polynomial payload.

    ``f`` and ``polys`` carry the dividend/target and divisors/generators for
    every kind except ideal_equality, which uses the two generator lists
    ``left`` and ``right``.
    """

    kind: TaskKind
    nvars: int
    f: Poly | None = None
    polys: tuple[Poly, ...] = ()
    left: tuple[Poly, ...] = ()
    right: tuple[Poly, ...] = ()
    order: str = LEX_ORDER

    def __post_init__(self) -> None:
        if self.order != LEX_ORDER:
            raise UnsupportedOrderError(f"unsupported monomial order {self.order!r}")
        if self.nvars < 0:
            raise MalformedJsonError("nvars must be >= 0")
        if self.kind in _KINDS_WITH_TARGET:
            if self.f is None:
                raise MalformedJsonError(f"task {self.kind.value} needs a target polynomial 'f'")
            if self.left or self.right:
                raise MalformedJsonError(f"task {self.kind.value} takes 'polys', not 'left'/'right'")
        elif self.kind is TaskKind.GROEBNER_BASIS:
            if self.f is not None or self.left or self.right:
                raise MalformedJsonError("task groebner_basis takes only 'polys'")
        elif self.kind is TaskKind.IDEAL_EQUALITY:
            if self.f is not None or self.polys:
                raise MalformedJsonError("task ideal_equality takes only 'left' and 'right'")
        for p in self._all_polys():
            if p.nvars != self.nvars:
                raise MalformedJsonError("task polynomials must match the task's nvars")

    def _all_polys(self) -> tuple[Poly, ...]:
        head = (self.f,) if self.f is not None else ()
        return head + self.polys + self.left + self.right


def task_to_obj(task: GbTask) -> dict[str, Any]:
    obj: dict[str, Any] = {
        "task": task.kind.value,
        "order": task.order,
        "nvars": task.nvars,
    }
    if task.f is not None:
        obj["f"] = poly_to_obj(task.f)
    if task.kind is TaskKind.IDEAL_EQUALITY:
        obj["left"] = _polys_to_obj(task.left)
        obj["right"] = _polys_to_obj(task.right)
    else:
        obj["polys"] = _polys_to_obj(task.polys)
    return obj


def task_from_obj(obj: Any) -> GbTask:
    if not isinstance(obj, dict):
        raise MalformedJsonError("a task must be a JSON object")
    kind_name = obj.get("task")
    try:
        kind = TaskKind(kind_name)
    except ValueError:
        raise UnknownTaskError(f"unknown task {kind_name!r}") from None
    order = obj.get("order", LEX_ORDER)
    if order != LEX_ORDER:
        raise UnsupportedOrderError(f"unsupported monomial order {order!r}")
    nvars = _int_field(obj.get("nvars"), "nvars")
    if nvars < 0:
        raise MalformedJsonError("nvars must be >= 0")
    f = poly_from_obj(obj["f"], nvars) if "f" in obj else None
    polys = _polys_from_obj(obj.get("polys", []), nvars, "polys")
    left = _polys_from_obj(obj.get("left", []), nvars, "left")
    right = _polys_from_obj(obj.get("right", []), nvars, "right")
    return GbTask(kind=kind, nvars=nvars, f=f, polys=polys, left=left, right=right, order=order)


def encode_task(task: GbTask) -> str:
    return _dumps(task_to_obj(task))


def decode_task(text: str | bytes) -> GbTask:
    return task_from_obj(_loads(text))


# -- certificates --------------------------------------------------------------


def cert_to_obj(cert: Certificate) -> dict[str, Any]:
    if isinstance(cert, RemainderCert):
        return {
            "type": "remainder",
            "nvars": cert.target.nvars,
            "f": poly_to_obj(cert.target),
            "divisors": _polys_to_obj(cert.divisors),
            "quotients": _polys_to_obj(cert.quotients),
            "remainder": poly_to_obj(cert.remainder),
        }
    if isinstance(cert, MembershipCert):
        return {
            "type": "membership",
            "nvars": cert.target.nvars,
            "f": poly_to_obj(cert.target),
            "generators": _polys_to_obj(cert.generators),
            "cofactors": _polys_to_obj(cert.cofactors),
        }
    if isinstance(cert, IdealEqCert):
        nvars = cert.left[0].nvars if cert.left else (cert.right[0].nvars if cert.right else 0)
        return {
            "type": "ideal_eq",
            "nvars": nvars,
            "left": _polys_to_obj(cert.left),
            "right": _polys_to_obj(cert.right),
            "left_in_right": [_polys_to_obj(row) for row in cert.left_in_right],
            "right_in_left": [_polys_to_obj(row) for row in cert.right_in_left],
        }
    if isinstance(cert, GroebnerCert):
        nvars = cert.basis[0].nvars if cert.basis else (cert.target[0].nvars if cert.target else 0)
        return {
            "type": "groebner",
            "nvars": nvars,
            "basis": _polys_to_obj(cert.basis),
            "target": _polys_to_obj(cert.target),
            "s_pair_witnesses": [
                {"i": w.i, "j": w.j, "quotients": _polys_to_obj(w.quotients)}
                for w in cert.s_pair_witnesses
            ],
            "ideal_eq": cert_to_obj(cert.ideal_eq),
        }
    if isinstance(cert, NonMembershipCert):
        return {
            "type": "non_membership",
            "nvars": cert.target.nvars,
            "f": poly_to_obj(cert.target),
            "generators": _polys_to_obj(cert.generators),
            "gb_cert": cert_to_obj(cert.gb_cert),
            "remainder_quotients": _polys_to_obj(cert.remainder_quotients),
            "remainder": poly_to_obj(cert.remainder),
        }
    if isinstance(cert, RadicalMemberCert):
        return {
            "type": "radical_member",
            "nvars": cert.target.nvars,
            "f": poly_to_obj(cert.target),
            "generators": _polys_to_obj(cert.generators),
            "exponent": cert.exponent,
            "membership": cert_to_obj(cert.membership),
        }
    if isinstance(cert, RadicalNonMemberCert):
        return {
            "type": "radical_non_member",
            "nvars": cert.target.nvars,
            "f": poly_to_obj(cert.target),
            "generators": _polys_to_obj(cert.generators),
            "extended_non_membership": cert_to_obj(cert.extended_non_membership),
        }
    raise TypeError(f"not a certificate: {type(cert).__name__}")


def _cert_nvars(obj: dict[str, Any]) -> int:
    nvars = _int_field(obj.get("nvars"), "certificate nvars")
    if nvars < 0:
        raise MalformedJsonError("certificate nvars must be >= 0")
    return nvars


def cert_from_obj(obj: Any) -> Certificate:
    if not isinstance(obj, dict):
        raise MalformedJsonError("a certificate must be a JSON object")
    kind = obj.get("type")
    nvars = _cert_nvars(obj)
    try:
        if kind == "remainder":
            return RemainderCert(
                target=poly_from_obj(obj["f"], nvars),
                divisors=_polys_from_obj(obj["divisors"], nvars, "divisors"),
                quotients=_polys_from_obj(obj["quotients"], nvars, "quotients"),
                remainder=poly_from_obj(obj["remainder"], nvars),
            )
        if kind == "membership":
            return MembershipCert(
                target=poly_from_obj(obj["f"], nvars),
                generators=_polys_from_obj(obj["generators"], nvars, "generators"),
                cofactors=_polys_from_obj(obj["cofactors"], nvars, "cofactors"),
            )
        if kind == "ideal_eq":
            if not isinstance(obj.get("left_in_right"), list) or not isinstance(
                obj.get("right_in_left"), list
            ):
                raise MalformedJsonError("ideal_eq matrices must be arrays of rows")
            return IdealEqCert(
                left=_polys_from_obj(obj["left"], nvars, "left"),
                right=_polys_from_obj(obj["right"], nvars, "right"),
                left_in_right=tuple(
                    _polys_from_obj(row, nvars, "left_in_right") for row in obj["left_in_right"]
                ),
                right_in_left=tuple(
                    _polys_from_obj(row, nvars, "right_in_left") for row in obj["right_in_left"]
                ),
            )
        if kind == "groebner":
            witnesses = obj.get("s_pair_witnesses")
            if not isinstance(witnesses, list):
                raise MalformedJsonError("s_pair_witnesses must be an array")
            parsed = []
            for w in witnesses:
                if not isinstance(w, dict):
                    raise MalformedJsonError("each S-pair witness must be an object")
                parsed.append(
                    PairWitness(
                        i=_int_field(w.get("i"), "witness index i"),
                        j=_int_field(w.get("j"), "witness index j"),
                        quotients=_polys_from_obj(w.get("quotients"), nvars, "quotients"),
                    )
                )
            ideal_eq = cert_from_obj(obj["ideal_eq"])
            if not isinstance(ideal_eq, IdealEqCert):
                raise MalformedJsonError("embedded ideal_eq must be an ideal_eq certificate")
            return GroebnerCert(
                basis=_polys_from_obj(obj["basis"], nvars, "basis"),
                target=_polys_from_obj(obj["target"], nvars, "target"),
                s_pair_witnesses=tuple(parsed),
                ideal_eq=ideal_eq,
            )
        if kind == "non_membership":
            gb_cert = cert_from_obj(obj["gb_cert"])
            if not isinstance(gb_cert, GroebnerCert):
                raise MalformedJsonError("embedded gb_cert must be a groebner certificate")
            return NonMembershipCert(
                target=poly_from_obj(obj["f"], nvars),
                generators=_polys_from_obj(obj["generators"], nvars, "generators"),
                gb_cert=gb_cert,
                remainder_quotients=_polys_from_obj(
                    obj["remainder_quotients"], nvars, "remainder_quotients"
                ),
                remainder=poly_from_obj(obj["remainder"], nvars),
            )
        if kind == "radical_member":
            membership = cert_from_obj(obj["membership"])
            if not isinstance(membership, MembershipCert):
                raise MalformedJsonError("embedded membership must be a membership certificate")
            return RadicalMemberCert(
                target=poly_from_obj(obj["f"], nvars),
                generators=_polys_from_obj(obj["generators"], nvars, "generators"),
                exponent=_int_field(obj.get("exponent"), "exponent"),
                membership=membership,
            )
        if kind == "radical_non_member":
            inner = cert_from_obj(obj["extended_non_membership"])
            if not isinstance(inner, NonMembershipCert):
                raise MalformedJsonError(
                    "embedded extended_non_membership must be a non_membership certificate"
                )
            return RadicalNonMemberCert(
                target=poly_from_obj(obj["f"], nvars),
                generators=_polys_from_obj(obj["generators"], nvars, "generators"),
                extended_non_membership=inner,
            )
    except KeyError as exc:
        raise MalformedJsonError(f"certificate missing field {exc.args[0]!r}") from None
    raise MalformedJsonError(f"unknown certificate type {kind!r}")


def encode_certificate(cert: Certificate) -> str:
    return _dumps(cert_to_obj(cert))


def decode_certificate(text: str | bytes) -> Certificate:
    return cert_from_obj(_loads(text))


# -- result envelopes ----------------------------------------------------------


class Status(str, Enum):
    OK = "ok"
    NOT_MEMBER = "not_member"
    NOT_EQUAL = "not_equal"
    NOT_IN_RADICAL = "not_in_radical"
    IN_RADICAL = "in_radical"
    ERROR = "error"


#: Statuses whose final (trusted) envelopes must carry a certificate.
CERT_BEARING_STATUSES = frozenset(
    {Status.OK, Status.NOT_MEMBER, Status.NOT_EQUAL, Status.NOT_IN_RADICAL}
)


@dataclass(frozen=True)
class ResultEnvelope:
    """A backend's answer: a verdict, optionally a certificate and a message.

    Final envelopes emitted by the runner carry a certificate exactly when
    the status is cert-bearing; raw oracle envelopes may omit certificates on
    negative verdicts (the runner re-derives those internally).
    """

    status: Status
    certificate: Certificate | None = None
    message: str | None = None

    def __post_init__(self) -> None:
        if self.status in (Status.IN_RADICAL, Status.ERROR) and self.certificate is not None:
            raise MalformedJsonError(f"status {self.status.value} must not carry a certificate")


def envelope_to_obj(envelope: ResultEnvelope) -> dict[str, Any]:
    obj: dict[str, Any] = {"status": envelope.status.value}
    if envelope.certificate is not None:
        obj["certificate"] = cert_to_obj(envelope.certificate)
    if envelope.message is not None:
        obj["message"] = envelope.message
    return obj


def envelope_from_obj(obj: Any) -> ResultEnvelope:
    if not isinstance(obj, dict):
        raise MalformedJsonError("a result envelope must be a JSON object")
    try:
        status = Status(obj.get("status"))
    except ValueError:
        raise MalformedJsonError(f"unknown status {obj.get('status')!r}") from None
    cert_obj = obj.get("certificate")
    certificate = cert_from_obj(cert_obj) if cert_obj is not None else None
    message = obj.get("message")
    if message is not None and not isinstance(message, str):
        raise MalformedJsonError("message must be a string")
    return ResultEnvelope(status=status, certificate=certificate, message=message)


def encode_result(envelope: ResultEnvelope) -> str:
    return _dumps(envelope_to_obj(envelope))


def decode_result(text: str | bytes) -> ResultEnvelope:
    return envelope_from_obj(_loads(text))


# -- check reports -------------------------------------------------------------


def report_to_obj(report: CheckReport) -> dict[str, Any]:
    return {
        "ok": report.ok,
        "conditions": [
            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in report.conditions
        ],
    }


def report_from_obj(obj: Any) -> CheckReport:
    if not isinstance(obj, dict) or not isinstance(obj.get("conditions"), list):
        raise MalformedJsonError("a check report must be an object with 'conditions'")
    conditions = []
    for entry in obj["conditions"]:
        if not isinstance(entry, dict):
            raise MalformedJsonError("each condition must be an object")
        conditions.append(
            Condition(
                name=str(entry.get("name", "")),
                ok=bool(entry.get("ok")),
                detail=str(entry.get("detail", "")),
            )
        )
    return CheckReport(ok=bool(obj.get("ok")), conditions=tuple(conditions))


def encode_report(report: CheckReport) -> str:
    return _dumps(report_to_obj(report))
