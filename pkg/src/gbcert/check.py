"""Trusted certificate checkers.

This module is the verification kernel. It validates certificates using only
exact polynomial arithmetic, lex comparisons, and the remainder predicate; it
never runs Buchberger's algorithm or the division search. The one
recomputation it performs is rebuilding S-polynomials (a two-term product
difference) while checking a Groebner certificate, so that certificates do
not need to carry them.

Structural shape violations (mismatched list lengths, mixed arities) raise;
semantic failures are reported as rejected conditions, because certificates
arrive from untrusted producers.
"""

from __future__ import annotations

from itertools import combinations

from .buchberger import s_polynomial
from .certificates import (
    Certificate,
    GroebnerCert,
    IdealEqCert,
    MembershipCert,
    NonMembershipCert,
    RadicalMemberCert,
    RadicalNonMemberCert,
    RemainderCert,
    extension_generators,
)
from .division import check_remainder
from .errors import LengthMismatchError
from .poly import Poly, poly_sum, require_same_arity
from .report import CheckReport, Condition


def check_remainder_cert(cert: RemainderCert) -> CheckReport:
    """Validate a remainder certificate with the division predicate."""
    return check_remainder(cert.target, cert.divisors, cert.remainder, cert.quotients)


def check_membership(cert: MembershipCert) -> CheckReport:
    """Accept iff target - sum(cofactors[i] * generators[i]) is identically zero."""
    if len(cert.cofactors) != len(cert.generators):
        raise LengthMismatchError(
            f"{len(cert.cofactors)} cofactors for {len(cert.generators)} generators"
        )
    require_same_arity([cert.target, *cert.generators, *cert.cofactors])
    nvars = cert.target.nvars
    residual = cert.target - poly_sum(
        nvars, [c * s for c, s in zip(cert.cofactors, cert.generators)]
    )
    return CheckReport.from_conditions(
        [
            Condition(
                "identity",
                residual.is_zero,
                "" if residual.is_zero else f"f - sum(c_i*s_i) = {residual}",
            )
        ]
    )


def check_ideal_eq(cert: IdealEqCert) -> CheckReport:
    """Accept iff every generator of each side rewrites exactly over the other."""
    if len(cert.left_in_right) != len(cert.left):
        raise LengthMismatchError("left_in_right must have one row per left generator")
    if len(cert.right_in_left) != len(cert.right):
        raise LengthMismatchError("right_in_left must have one row per right generator")
    for row in cert.left_in_right:
        if len(row) != len(cert.right):
            raise LengthMismatchError("left_in_right row width must match right side")
    for row in cert.right_in_left:
        if len(row) != len(cert.left):
            raise LengthMismatchError("right_in_left row width must match left side")
    require_same_arity(
        [
            *cert.left,
            *cert.right,
            *(p for row in cert.left_in_right for p in row),
            *(p for row in cert.right_in_left for p in row),
        ]
    )

    conditions = []
    for i, (f, row) in enumerate(zip(cert.left, cert.left_in_right)):
        residual = f - poly_sum(f.nvars, [c * g for c, g in zip(row, cert.right)])
        conditions.append(
            Condition(
                f"left[{i}]_in_right",
                residual.is_zero,
                "" if residual.is_zero else f"residual {residual}",
            )
        )
    for j, (g, row) in enumerate(zip(cert.right, cert.right_in_left)):
        residual = g - poly_sum(g.nvars, [c * f for c, f in zip(row, cert.left)])
        conditions.append(
            Condition(
                f"right[{j}]_in_left",
                residual.is_zero,
                "" if residual.is_zero else f"residual {residual}",
            )
        )
    return CheckReport.from_conditions(conditions)


def check_groebner_cert(cert: GroebnerCert) -> CheckReport:
    """Validate Buchberger's criterion witnesses plus the ideal equality.

    S-polynomials are recomputed here rather than read from the certificate;
    each must pass the remainder predicate with remainder zero against the
    claimed basis. The embedded ideal-equality certificate must tie exactly
    the claimed basis to the claimed target generators.
    """
    pairs = list(combinations(range(len(cert.basis)), 2))
    if len(cert.s_pair_witnesses) != len(pairs):
        raise LengthMismatchError(
            f"{len(cert.s_pair_witnesses)} witnesses for {len(pairs)} basis pairs"
        )
    require_same_arity([*cert.basis, *cert.target])

    conditions = []
    nonzero = all(not g.is_zero for g in cert.basis)
    conditions.append(
        Condition("basis_nonzero", nonzero, "" if nonzero else "basis contains zero")
    )
    if nonzero:
        zero = Poly.zero(cert.basis[0].nvars) if cert.basis else None
        for (i, j), witness in zip(pairs, cert.s_pair_witnesses):
            if (witness.i, witness.j) != (i, j):
                conditions.append(
                    Condition(
                        f"s_pair[{i},{j}].order",
                        False,
                        f"witness labelled ({witness.i},{witness.j})",
                    )
                )
                continue
            s = s_polynomial(cert.basis[i], cert.basis[j])
            sub = check_remainder(s, cert.basis, zero, witness.quotients)
            conditions.extend(sub.prefixed(f"s_pair[{i},{j}]"))

    left_matches = cert.ideal_eq.left == cert.basis
    right_matches = cert.ideal_eq.right == cert.target
    conditions.append(
        Condition(
            "ideal_eq_left_is_basis",
            left_matches,
            "" if left_matches else "embedded equality certificate is about a different basis",
        )
    )
    conditions.append(
        Condition(
            "ideal_eq_right_is_target",
            right_matches,
            "" if right_matches else "embedded equality certificate is about different generators",
        )
    )
    conditions.extend(check_ideal_eq(cert.ideal_eq).prefixed("ideal_eq"))
    return CheckReport.from_conditions(conditions)


def check_nonmembership(cert: NonMembershipCert) -> CheckReport:
    """Accept iff the embedded basis certificate holds and the remainder is nonzero."""
    conditions = list(check_groebner_cert(cert.gb_cert).prefixed("gb"))
    ties = cert.gb_cert.target == cert.generators
    conditions.append(
        Condition(
            "gb_target_is_generators",
            ties,
            "" if ties else "basis certificate is about different generators",
        )
    )
    sub = check_remainder(
        cert.target, cert.gb_cert.basis, cert.remainder, cert.remainder_quotients
    )
    conditions.extend(sub.prefixed("remainder"))
    conditions.append(
        Condition(
            "remainder_nonzero",
            not cert.remainder.is_zero,
            "" if not cert.remainder.is_zero else "claimed normal form is zero",
        )
    )
    return CheckReport.from_conditions(conditions)


def check_radical_member(cert: RadicalMemberCert) -> CheckReport:
    """Accept iff the inner membership certificate is exactly about target**exponent."""
    conditions = []
    positive = cert.exponent >= 1
    conditions.append(
        Condition(
            "exponent_positive",
            positive,
            "" if positive else f"exponent {cert.exponent} must be >= 1",
        )
    )
    gens_match = cert.membership.generators == cert.generators
    conditions.append(
        Condition(
            "generators_match",
            gens_match,
            "" if gens_match else "inner certificate is about different generators",
        )
    )
    if positive:
        power = cert.target ** cert.exponent
        target_ok = cert.membership.target == power
        conditions.append(
            Condition(
                "target_is_power",
                target_ok,
                "" if target_ok else "inner target is not the claimed power",
            )
        )
        conditions.extend(check_membership(cert.membership).prefixed("membership"))
    return CheckReport.from_conditions(conditions)


def check_radical_nonmember(cert: RadicalNonMemberCert) -> CheckReport:
    """Accept iff the extension system is rebuilt identically and 1 stays outside it.

    The checker reconstructs the lifted generators and the auxiliary
    polynomial 1 - t*target itself; a certificate whose inner system differs
    is rejected with an extension mismatch.
    """
    inner = cert.extended_non_membership
    expected = extension_generators(cert.target, cert.generators)
    matches = inner.generators == expected
    conditions = [
        Condition(
            "extension_match",
            matches,
            "" if matches else "ExtensionMismatch: inner generators are not the lifted system",
        )
    ]
    one = Poly.one(cert.target.nvars + 1)
    target_is_one = inner.target == one
    conditions.append(
        Condition(
            "inner_target_is_one",
            target_is_one,
            "" if target_is_one else "inner certificate must be about the constant 1",
        )
    )
    conditions.extend(check_nonmembership(inner).prefixed("non_membership"))
    return CheckReport.from_conditions(conditions)


def check_certificate(cert: Certificate) -> CheckReport:
    """Dispatch to the checker matching the certificate type."""
    if isinstance(cert, RemainderCert):
        return check_remainder_cert(cert)
    if isinstance(cert, MembershipCert):
        return check_membership(cert)
    if isinstance(cert, IdealEqCert):
        return check_ideal_eq(cert)
    if isinstance(cert, GroebnerCert):
        return check_groebner_cert(cert)
    if isinstance(cert, NonMembershipCert):
        return check_nonmembership(cert)
    if isinstance(cert, RadicalMemberCert):
        return check_radical_member(cert)
    if isinstance(cert, RadicalNonMemberCert):
        return check_radical_nonmember(cert)
    raise TypeError(f"not a certificate: {type(cert).__name__}")
