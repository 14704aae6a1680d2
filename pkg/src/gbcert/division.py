"""Multivariate division with quotients, plus the trusted remainder predicate.

``divide`` is the engine-side search; ``check_remainder`` is the checker-side
predicate that validates a claimed (quotients, remainder) pair using nothing
but exact arithmetic and lex comparisons. The two are never collapsed: every
certificate that involves a remainder is validated by the predicate, not by
re-running the division.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LengthMismatchError
from .poly import Poly, Term, lex_compare, poly_sum, require_same_arity
from .report import CheckReport, Condition


@dataclass(frozen=True)
class DivisionResult:
    """Quotients and remainder of one multivariate division.

    Satisfies f = sum(quotients[i] * divisors[i]) + remainder, no remainder
    monomial is divisible by the leading monomial of a nonzero divisor, and
    every nonzero product quotients[i] * divisors[i] has multidegree <= that
    of the dividend.
    """

    quotients: tuple[Poly, ...]
    remainder: Poly


def divide(f: Poly, divisors: Sequence[Poly]) -> DivisionResult:
    """Divide f by an ordered list of divisors.

    When several leading monomials divide the current leading term, the first
    divisor in list order wins, which makes the result deterministic. Zero
    divisors are legal and receive a zero quotient; an empty divisor list
    returns remainder f.
    """
    require_same_arity([f, *divisors])
    nvars = f.nvars
    reducers = [
        (i, b.leading_monomial(), b) for i, b in enumerate(divisors) if not b.is_zero
    ]
    # successive terms pushed onto each quotient (and the remainder) arrive in
    # strictly descending order, so the lists can become Poly tuples directly
    quotient_terms: list[list[Term]] = [[] for _ in divisors]
    remainder_terms: list[Term] = []
    p = f
    while not p.is_zero:
        lt = p.leading_term()
        for i, lm, b in reducers:
            if lm.divides(lt.mono):
                t = Term(lt.coeff / b.leading_coeff(), lt.mono.div(lm))
                quotient_terms[i].append(t)
                p = p - b.mul_term(t)
                break
        else:
            remainder_terms.append(lt)
            p = p - Poly(nvars, (lt,))
    return DivisionResult(
        quotients=tuple(Poly(nvars, tuple(ts)) for ts in quotient_terms),
        remainder=Poly(nvars, tuple(remainder_terms)),
    )


def check_remainder(
    f: Poly,
    divisors: Sequence[Poly],
    remainder: Poly,
    quotients: Sequence[Poly],
) -> CheckReport:
    """Trusted predicate: is (quotients, remainder) a valid division of f?

    Accepts iff (a) f - remainder = sum(quotients[i] * divisors[i]) exactly,
    (b) no monomial of the remainder is divisible by the leading monomial of
    any nonzero divisor, and (c) each nonzero product quotients[i] *
    divisors[i] has multidegree <=_lex multideg(f). With a zero dividend and
    zero remainder, (c) is vacuous.
    """
    if len(quotients) != len(divisors):
        raise LengthMismatchError(
            f"{len(quotients)} quotients for {len(divisors)} divisors"
        )
    require_same_arity([f, remainder, *divisors, *quotients])
    nvars = f.nvars

    products = [q * b for q, b in zip(quotients, divisors)]
    residual = (f - remainder) - poly_sum(nvars, products)
    identity = Condition(
        "identity",
        residual.is_zero,
        "" if residual.is_zero else f"f - r - sum(q_i*b_i) = {residual}",
    )

    offending = ""
    irreducible = True
    for i, b in enumerate(divisors):
        if b.is_zero:
            continue
        lm = b.leading_monomial()
        for t in remainder.terms:
            if lm.divides(t.mono):
                irreducible = False
                offending = f"remainder monomial {t.mono} divisible by LM(b_{i}) = {lm}"
                break
        if not irreducible:
            break
    irreducibility = Condition("remainder_irreducible", irreducible, offending)

    if f.is_zero and remainder.is_zero:
        degrees = Condition("degree_bound", True, "vacuous: zero dividend")
    else:
        degree_ok = True
        degree_detail = ""
        for i, prod in enumerate(products):
            if prod.is_zero:
                continue
            if f.is_zero:
                degree_ok = False
                degree_detail = f"q_{i}*b_{i} nonzero but the dividend is zero"
                break
            if lex_compare(prod.multideg(), f.multideg()) > 0:
                degree_ok = False
                degree_detail = (
                    f"multideg(q_{i}*b_{i}) = {prod.multideg()} exceeds multideg(f) = {f.multideg()}"
                )
                break
        degrees = Condition("degree_bound", degree_ok, degree_detail)

    return CheckReport.from_conditions([identity, irreducibility, degrees])
