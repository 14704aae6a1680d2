"""Certificate data model for every supported goal class.

Certificates are self-contained: each carries the claim inputs (target,
generators) next to the witness data, so the trusted checker can validate a
certificate without consulting the engine that produced it. Negative or
inconclusive engine verdicts are represented by the small marker types at
the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .poly import Poly


@dataclass(frozen=True)
class RemainderCert:
    """r is a valid division remainder of target by the (ordered) divisors."""

    target: Poly
    divisors: tuple[Poly, ...]
    quotients: tuple[Poly, ...]
    remainder: Poly


@dataclass(frozen=True)
class MembershipCert:
    """target = sum(cofactors[i] * generators[i]): explicit ideal membership."""

    target: Poly
    generators: tuple[Poly, ...]
    cofactors: tuple[Poly, ...]


@dataclass(frozen=True)
class IdealEqCert:
    """<left> = <right>, witnessed by cofactor matrices for both inclusions.

    Row i of ``left_in_right`` expresses left[i] over the right generators;
    row j of ``right_in_left`` expresses right[j] over the left generators.
    """

    left: tuple[Poly, ...]
    right: tuple[Poly, ...]
    left_in_right: tuple[tuple[Poly, ...], ...]
    right_in_left: tuple[tuple[Poly, ...], ...]


@dataclass(frozen=True)
class PairWitness:
    """Quotients reducing the S-polynomial of basis pair (i, j) to zero."""

    i: int
    j: int
    quotients: tuple[Poly, ...]


@dataclass(frozen=True)
class GroebnerCert:
    """basis is a Groebner basis of the ideal generated by target.

    The S-pair witnesses establish Buchberger's criterion (so basis is a
    Groebner basis of the ideal it generates) and ``ideal_eq`` establishes
    <basis> = <target>.
    """

    basis: tuple[Poly, ...]
    target: tuple[Poly, ...]
    s_pair_witnesses: tuple[PairWitness, ...]
    ideal_eq: IdealEqCert


@dataclass(frozen=True)
class NonMembershipCert:
    """target is not in <generators>: its normal form modulo a certified basis is nonzero."""

    target: Poly
    generators: tuple[Poly, ...]
    gb_cert: GroebnerCert
    remainder_quotients: tuple[Poly, ...]
    remainder: Poly


@dataclass(frozen=True)
class RadicalMemberCert:
    """target lies in the radical of <generators>: target**exponent is a member."""

    target: Poly
    generators: tuple[Poly, ...]
    exponent: int
    membership: MembershipCert


@dataclass(frozen=True)
class RadicalNonMemberCert:
    """target is outside the radical of <generators>.

    Witnessed by non-membership of 1 in the extension ideal obtained by
    lifting the generators one variable up and adjoining 1 - t*target, with
    t the fresh last variable.
    """

    target: Poly
    generators: tuple[Poly, ...]
    extended_non_membership: NonMembershipCert


Certificate = Union[
    RemainderCert,
    MembershipCert,
    IdealEqCert,
    GroebnerCert,
    NonMembershipCert,
    RadicalMemberCert,
    RadicalNonMemberCert,
]


def extension_generators(target: Poly, generators: Sequence[Poly]) -> tuple[Poly, ...]:
    """The radical-test system: generators lifted one variable up plus 1 - t*target.

    The auxiliary variable t always takes the fresh index ``target.nvars``
    (last position, least significant under lex). Both the engine and the
    checker build the extension through this one constructor, but the checker
    reconstructs it from the claim inputs rather than trusting the stored list.
    """
    n = target.nvars
    t = Poly.variable(n + 1, n)
    aux = Poly.one(n + 1) - t * target.lift()
    return tuple(g.lift() for g in generators) + (aux,)


# -- engine verdicts that are not certificates -------------------------------


@dataclass(frozen=True)
class NotAMember:
    """Negative membership verdict: the normal form of the target is nonzero."""

    remainder: Poly


@dataclass(frozen=True)
class NotEqual:
    """Negative ideal-equality verdict naming the first failing generator."""

    side: str  # "left" or "right"
    index: int
    generator: Poly


@dataclass(frozen=True)
class NotInRadical:
    """Negative radical-membership verdict (the extension ideal misses 1)."""


@dataclass(frozen=True)
class InRadical:
    """A radical non-membership claim is false: the target is in the radical."""
