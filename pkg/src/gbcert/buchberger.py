"""S-polynomials and Buchberger's algorithm with cofactor tracking.

The computed basis is the reduced monic lex Groebner basis, and every basis
element carries cofactors expressing it over the input generators, so
downstream certificates (ideal equality, membership) can be assembled
without a second search. Pair selection is a FIFO queue with the
coprime-leading-monomial skip, which keeps runs bit-for-bit reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .division import DivisionResult, divide
from .errors import BudgetExceededError, ZeroPolynomialError
from .poly import Monomial, Poly, Term, lex_key, require_same_arity

# A cofactor vector: entry j is the coefficient of input generator j.
Vector = list[Poly]


@dataclass(frozen=True)
class GroebnerOutput:
    """A reduced monic Groebner basis plus its expression over the inputs.

    ``cofactors[k][j]`` satisfies basis[k] = sum_j cofactors[k][j] * inputs[j]
    exactly, for the generator list the basis was computed from.
    """

    basis: tuple[Poly, ...]
    cofactors: tuple[tuple[Poly, ...], ...]


@dataclass(frozen=True)
class SPairWitness:
    """Division data for one S-polynomial: S(G[i], G[j]) = sum(quotients*G) + remainder."""

    i: int
    j: int
    quotients: tuple[Poly, ...]
    remainder: Poly


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of Buchberger's criterion with reusable per-pair witnesses."""

    is_basis: bool
    witnesses: tuple[SPairWitness, ...]


def s_polynomial(f: Poly, g: Poly) -> Poly:
    """S(f, g) = (lcm/LT(f))*f - (lcm/LT(g))*g for the leading-monomial lcm."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("S-polynomials need nonzero arguments")
    require_same_arity([f, g])
    lcm = f.leading_monomial().lcm(g.leading_monomial())
    tf = Term(1 / f.leading_coeff(), lcm.div(f.leading_monomial()))
    tg = Term(1 / g.leading_coeff(), lcm.div(g.leading_monomial()))
    return f.mul_term(tf) - g.mul_term(tg)


def is_groebner_basis(polys: Sequence[Poly]) -> CriterionResult:
    """Buchberger's criterion: divide every S-polynomial by the list itself.

    True iff every pair's remainder is zero. The witnesses hold the division
    quotients for each pair (i, j) with i < j, in ``itertools.combinations``
    order, reusable as certificate material when the criterion holds.
    """
    require_same_arity(polys)
    if any(p.is_zero for p in polys):
        raise ZeroPolynomialError("a candidate basis must not contain zero")
    witnesses = []
    ok = True
    for i, j in combinations(range(len(polys)), 2):
        s = s_polynomial(polys[i], polys[j])
        out = divide(s, polys)
        witnesses.append(SPairWitness(i, j, out.quotients, out.remainder))
        ok = ok and out.remainder.is_zero
    return CriterionResult(ok, tuple(witnesses))


def buchberger(
    generators: Sequence[Poly], *, pair_budget: int | None = None
) -> GroebnerOutput:
    """Compute the reduced monic lex Groebner basis of the given generators.

    Zero generators are tolerated (they contribute a zero cofactor column).
    ``pair_budget`` caps the number of S-pairs examined; exceeding it raises
    BudgetExceededError. Identical inputs always produce identical output.
    """
    require_same_arity(generators)
    if not generators:
        return GroebnerOutput((), ())
    nvars = generators[0].nvars
    m = len(generators)

    def unit_vector(j: int, scale: Fraction) -> Vector:
        vec = [Poly.zero(nvars)] * m
        vec[j] = Poly.constant(nvars, scale)
        return vec

    basis: list[Poly] = []
    rows: list[Vector] = []
    for j, g in enumerate(generators):
        if g.is_zero:
            continue
        basis.append(g.monic())
        rows.append(unit_vector(j, 1 / g.leading_coeff()))

    queue: list[tuple[int, int]] = [
        (i, j) for j in range(len(basis)) for i in range(j)
    ]
    head = 0
    examined = 0
    while head < len(queue):
        i, j = queue[head]
        head += 1
        examined += 1
        if pair_budget is not None and examined > pair_budget:
            raise BudgetExceededError(
                f"S-pair budget of {pair_budget} exhausted after {len(basis)} basis elements"
            )
        lm_i = basis[i].leading_monomial()
        lm_j = basis[j].leading_monomial()
        if lm_i.lcm(lm_j) == lm_i.mul(lm_j):
            continue  # coprime leading monomials: S-pair reduces to zero
        lcm = lm_i.lcm(lm_j)
        ti = Term(1 / basis[i].leading_coeff(), lcm.div(lm_i))
        tj = Term(1 / basis[j].leading_coeff(), lcm.div(lm_j))
        s = basis[i].mul_term(ti) - basis[j].mul_term(tj)
        vec = [
            a.mul_term(ti) - b.mul_term(tj) for a, b in zip(rows[i], rows[j])
        ]
        r, vec = _tracked_reduce(s, vec, basis, rows)
        if r.is_zero:
            continue
        lc = r.leading_coeff()
        basis.append(r.monic())
        rows.append([c * (1 / lc) for c in vec])
        k = len(basis) - 1
        queue.extend((i2, k) for i2 in range(k))

    basis, rows = _minimalize(basis, rows)
    basis, rows = _interreduce(basis, rows)

    # canonical presentation: descending leading monomials
    order = sorted(range(len(basis)), key=lambda k: lex_key(basis[k].leading_monomial()), reverse=True)
    return GroebnerOutput(
        basis=tuple(basis[k] for k in order),
        cofactors=tuple(tuple(rows[k]) for k in order),
    )


def _tracked_reduce(
    p: Poly,
    vec: Vector,
    reducers: Sequence[Poly],
    reducer_rows: Sequence[Vector],
) -> tuple[Poly, Vector]:
    """Normal form of p modulo reducers, keeping p = <vec, inputs> true throughout."""
    nvars = p.nvars
    vec = list(vec)
    remainder_terms: list[Term] = []
    while not p.is_zero:
        lt = p.leading_term()
        for g, grow in zip(reducers, reducer_rows):
            if g.leading_monomial().divides(lt.mono):
                t = Term(lt.coeff / g.leading_coeff(), lt.mono.div(g.leading_monomial()))
                p = p - g.mul_term(t)
                for idx, c in enumerate(grow):
                    if not c.is_zero:
                        vec[idx] = vec[idx] - c.mul_term(t)
                break
        else:
            remainder_terms.append(lt)
            p = p - Poly(nvars, (lt,))
    return Poly(nvars, tuple(remainder_terms)), vec


def _minimalize(basis: list[Poly], rows: list[Vector]) -> tuple[list[Poly], list[Vector]]:
    """Drop elements whose leading monomial another element's divides."""
    order = sorted(range(len(basis)), key=lambda k: lex_key(basis[k].leading_monomial()))
    kept: list[int] = []
    for idx in order:
        lm = basis[idx].leading_monomial()
        if not any(basis[k].leading_monomial().divides(lm) for k in kept):
            kept.append(idx)
    return [basis[k] for k in kept], [rows[k] for k in kept]


def _interreduce(basis: list[Poly], rows: list[Vector]) -> tuple[list[Poly], list[Vector]]:
    """Reduce every element modulo the others (leading terms survive minimality)."""
    for pos in range(len(basis)):
        others = basis[:pos] + basis[pos + 1 :]
        other_rows = rows[:pos] + rows[pos + 1 :]
        basis[pos], rows[pos] = _tracked_reduce(basis[pos], rows[pos], others, other_rows)
    return basis, rows
