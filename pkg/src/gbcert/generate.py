"""Certificate generation: the untrusted engine side.

Everything here may search freely (Buchberger runs, divisions); nothing here
is trusted. The matching validators live in ``gbcert.check`` and consume only
the finished certificates.
"""

from __future__ import annotations

from typing import Sequence, Union

from .buchberger import GroebnerOutput, buchberger, is_groebner_basis
from .certificates import (
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
from .division import divide
from .errors import ExponentBudgetError
from .poly import Poly, require_same_arity

DEFAULT_MAX_EXPONENT = 64


def gen_remainder(f: Poly, divisors: Sequence[Poly]) -> RemainderCert:
    """Divide and package the result as a checkable remainder certificate."""
    out = divide(f, divisors)
    return RemainderCert(f, tuple(divisors), out.quotients, out.remainder)


def _compose_cofactors(
    quotients: Sequence[Poly], gb: GroebnerOutput, n_inputs: int, nvars: int
) -> tuple[Poly, ...]:
    """Rewrite f = sum(q_k * basis[k]) into cofactors over the original inputs."""
    cof = [Poly.zero(nvars) for _ in range(n_inputs)]
    for q, row in zip(quotients, gb.cofactors):
        if q.is_zero:
            continue
        for j, c in enumerate(row):
            if not c.is_zero:
                cof[j] = cof[j] + q * c
    return tuple(cof)


def gen_membership(
    f: Poly, generators: Sequence[Poly], *, pair_budget: int | None = None
) -> Union[MembershipCert, NotAMember]:
    """Search for cofactors proving f in <generators>.

    Returns NotAMember (carrying the nonzero normal form) exactly when the
    remainder of f modulo the computed Groebner basis is nonzero.
    """
    require_same_arity([f, *generators])
    gb = buchberger(generators, pair_budget=pair_budget)
    out = divide(f, gb.basis)
    if not out.remainder.is_zero:
        return NotAMember(out.remainder)
    cofactors = _compose_cofactors(out.quotients, gb, len(generators), f.nvars)
    return MembershipCert(f, tuple(generators), cofactors)


def gen_ideal_eq(
    left: Sequence[Poly], right: Sequence[Poly], *, pair_budget: int | None = None
) -> Union[IdealEqCert, NotEqual]:
    """Certify <left> = <right> by expressing each generator over the other side."""
    require_same_arity([*left, *right])

    def rows_over(
        targets: Sequence[Poly], gens: Sequence[Poly], side: str
    ) -> Union[tuple[tuple[Poly, ...], ...], NotEqual]:
        gb = buchberger(gens, pair_budget=pair_budget)
        rows = []
        for idx, f in enumerate(targets):
            out = divide(f, gb.basis)
            if not out.remainder.is_zero:
                return NotEqual(side, idx, f)
            rows.append(_compose_cofactors(out.quotients, gb, len(gens), f.nvars))
        return tuple(rows)

    left_in_right = rows_over(left, right, "left")
    if isinstance(left_in_right, NotEqual):
        return left_in_right
    right_in_left = rows_over(right, left, "right")
    if isinstance(right_in_left, NotEqual):
        return right_in_left
    return IdealEqCert(tuple(left), tuple(right), left_in_right, right_in_left)


def gen_groebner_cert(
    generators: Sequence[Poly], *, pair_budget: int | None = None
) -> GroebnerCert:
    """Compute a reduced basis and wrap it with everything a checker needs."""
    require_same_arity(generators)
    gb = buchberger(generators, pair_budget=pair_budget)
    crit = is_groebner_basis(gb.basis)
    assert crit.is_basis, "internal error: computed basis fails Buchberger's criterion"
    witnesses = tuple(PairWitness(w.i, w.j, w.quotients) for w in crit.witnesses)
    ideal_eq = gen_ideal_eq(gb.basis, generators, pair_budget=pair_budget)
    assert isinstance(ideal_eq, IdealEqCert), "internal error: <basis> != <generators>"
    return GroebnerCert(gb.basis, tuple(generators), witnesses, ideal_eq)


def decide_membership(
    f: Poly, generators: Sequence[Poly], *, pair_budget: int | None = None
) -> Union[MembershipCert, NonMembershipCert]:
    """Full membership decision with a certificate either way.

    The negative side packages a certified Groebner basis together with the
    nonzero normal form, because remainder uniqueness (hence the soundness of
    "r != 0 implies f not in the ideal") only holds for certified bases.
    """
    require_same_arity([f, *generators])
    result = gen_membership(f, generators, pair_budget=pair_budget)
    if isinstance(result, MembershipCert):
        return result
    gb_cert = gen_groebner_cert(generators, pair_budget=pair_budget)
    out = divide(f, gb_cert.basis)
    assert not out.remainder.is_zero
    return NonMembershipCert(
        target=f,
        generators=tuple(generators),
        gb_cert=gb_cert,
        remainder_quotients=out.quotients,
        remainder=out.remainder,
    )


def gen_normal_form(
    f: Poly, generators: Sequence[Poly], *, pair_budget: int | None = None
) -> RemainderCert:
    """Reduce f modulo the Groebner basis of <generators>.

    The certificate's divisor list is the computed basis, so the remainder it
    certifies is the canonical normal form of f modulo the ideal.
    """
    require_same_arity([f, *generators])
    gb = buchberger(generators, pair_budget=pair_budget)
    out = divide(f, gb.basis)
    return RemainderCert(f, gb.basis, out.quotients, out.remainder)


def _in_radical(
    f: Poly, generators: Sequence[Poly], *, pair_budget: int | None = None
) -> bool:
    """Radical membership test: does the extension ideal contain 1?"""
    extended = extension_generators(f, generators)
    gb = buchberger(extended, pair_budget=pair_budget)
    one = Poly.one(f.nvars + 1)
    return divide(one, gb.basis).remainder.is_zero


def gen_radical_member(
    f: Poly,
    generators: Sequence[Poly],
    *,
    max_exp: int = DEFAULT_MAX_EXPONENT,
    pair_budget: int | None = None,
) -> Union[RadicalMemberCert, NotInRadical]:
    """Search for the least exponent n with f**n in <generators>.

    Membership in the radical is decided first via the extension-ideal test,
    so NotInRadical never spends the exponent budget. If membership holds but
    no exponent <= max_exp certifies it, ExponentBudgetError is raised.
    """
    require_same_arity([f, *generators])
    if max_exp < 1:
        raise ValueError("max_exp must be >= 1")
    if not _in_radical(f, generators, pair_budget=pair_budget):
        return NotInRadical()
    gb = buchberger(generators, pair_budget=pair_budget)
    power = Poly.one(f.nvars)
    for exponent in range(1, max_exp + 1):
        power = power * f
        out = divide(power, gb.basis)
        if out.remainder.is_zero:
            cofactors = _compose_cofactors(out.quotients, gb, len(generators), f.nvars)
            membership = MembershipCert(power, tuple(generators), cofactors)
            return RadicalMemberCert(f, tuple(generators), exponent, membership)
    raise ExponentBudgetError(
        f"radical membership holds but no exponent <= {max_exp} certifies it"
    )


def gen_radical_nonmember(
    f: Poly, generators: Sequence[Poly], *, pair_budget: int | None = None
) -> Union[RadicalNonMemberCert, InRadical]:
    """Certify f outside the radical of <generators> via the extension ideal."""
    require_same_arity([f, *generators])
    extended = extension_generators(f, generators)
    inner = decide_membership(
        Poly.one(f.nvars + 1), extended, pair_budget=pair_budget
    )
    if isinstance(inner, MembershipCert):
        return InRadical()
    return RadicalNonMemberCert(f, tuple(generators), inner)
