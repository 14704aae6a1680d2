"""Certified Groebner-basis toolkit over Q[x0..xn] with the lex order.

An untrusted engine (division, Buchberger with cofactor tracking, radical
searches) produces certificates; a small independent checker validates them
with exact polynomial identity testing. The two sides communicate through a
canonical JSON wire format, either in-process or across a subprocess
boundary.
"""

from .buchberger import (
    CriterionResult,
    GroebnerOutput,
    SPairWitness,
    buchberger,
    is_groebner_basis,
    s_polynomial,
)
from .certificates import (
    Certificate,
    GroebnerCert,
    IdealEqCert,
    InRadical,
    MembershipCert,
    NonMembershipCert,
    NotAMember,
    NotEqual,
    NotInRadical,
    PairWitness,
    RadicalMemberCert,
    RadicalNonMemberCert,
    RemainderCert,
    extension_generators,
)
from .check import (
    check_certificate,
    check_groebner_cert,
    check_ideal_eq,
    check_membership,
    check_nonmembership,
    check_radical_member,
    check_radical_nonmember,
    check_remainder_cert,
)
from .division import DivisionResult, check_remainder, divide
from .errors import (
    BudgetExceededError,
    CertificateRejectedError,
    ExponentBudgetError,
    GbError,
    LengthMismatchError,
    MalformedJsonError,
    MalformedOracleOutputError,
    MismatchedArityError,
    OracleSpawnFailureError,
    OracleTimeoutError,
    UnknownTaskError,
    UnsupportedBackendError,
    UnsupportedOrderError,
    VariableOutOfRangeError,
    ZeroDenominatorError,
    ZeroPolynomialError,
)
from .generate import (
    decide_membership,
    gen_groebner_cert,
    gen_ideal_eq,
    gen_membership,
    gen_normal_form,
    gen_radical_member,
    gen_radical_nonmember,
    gen_remainder,
)
from .poly import Monomial, Poly, Term, lex_compare, variables
from .report import CheckReport, Condition
from .runner import Backend, BackendConfig, certify_result, run_task, validate_certificate
from .wire import (
    GbTask,
    ResultEnvelope,
    Status,
    TaskKind,
    decode_certificate,
    decode_result,
    decode_task,
    encode_certificate,
    encode_report,
    encode_result,
    encode_task,
    parse_poly,
    serialize_poly,
)

__version__ = "0.1.0"
