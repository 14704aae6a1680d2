"""Exact sparse multivariate polynomial arithmetic over Q with the lex order.

Variables are indexed 0..nvars-1 and x0 is the most significant under the
lexicographic order (x0 > x1 > ...). Coefficients are exact rationals
(``fractions.Fraction``), monomials are sparse (variable, exponent) pairs,
and a polynomial keeps its terms strictly descending so the leading term is
always the first one.

Everything here is an immutable value and every operation returns a new,
fully normalized value, so structural equality is polynomial identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence, Union

from .errors import MismatchedArityError, ZeroPolynomialError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Monomial:
    """A power product stored as sparse (variable index, exponent) pairs.

    ``exps`` is strictly increasing in the variable index and stores only
    exponents >= 1; the constant monomial is the empty tuple.
    """

    exps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        last = -1
        for var, exp in self.exps:
            if var <= last:
                raise ValueError(f"variable indices not strictly increasing: {self.exps}")
            if exp < 1:
                raise ValueError(f"stored exponents must be >= 1: {self.exps}")
            last = var

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Monomial:
        """Build a monomial from arbitrary pairs, merging duplicates and dropping zeros."""
        acc: dict[int, int] = {}
        for var, exp in pairs:
            if var < 0:
                raise ValueError(f"negative variable index {var}")
            if exp < 0:
                raise ValueError(f"negative exponent {exp}")
            acc[var] = acc.get(var, 0) + exp
        return cls(tuple(sorted((v, e) for v, e in acc.items() if e != 0)))

    @property
    def is_constant(self) -> bool:
        return not self.exps

    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def max_var(self) -> int:
        """Largest variable index used, or -1 for the constant monomial."""
        return self.exps[-1][0] if self.exps else -1

    def exponent(self, var: int) -> int:
        for v, e in self.exps:
            if v == var:
                return e
            if v > var:
                break
        return 0

    def mul(self, other: Monomial) -> Monomial:
        out: list[tuple[int, int]] = []
        a, b = self.exps, other.exps
        ia = ib = 0
        while ia < len(a) and ib < len(b):
            va, ea = a[ia]
            vb, eb = b[ib]
            if va == vb:
                out.append((va, ea + eb))
                ia += 1
                ib += 1
            elif va < vb:
                out.append(a[ia])
                ia += 1
            else:
                out.append(b[ib])
                ib += 1
        out.extend(a[ia:])
        out.extend(b[ib:])
        return Monomial(tuple(out))

    def divides(self, other: Monomial) -> bool:
        ib = 0
        b = other.exps
        for va, ea in self.exps:
            while ib < len(b) and b[ib][0] < va:
                ib += 1
            if ib == len(b) or b[ib][0] != va or b[ib][1] < ea:
                return False
        return True

    def div(self, other: Monomial) -> Monomial:
        """self / other; ``other`` must divide ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        quot = {v: e for v, e in self.exps}
        for v, e in other.exps:
            quot[v] -= e
        return Monomial(tuple(sorted((v, e) for v, e in quot.items() if e != 0)))

    def lcm(self, other: Monomial) -> Monomial:
        acc = {v: e for v, e in self.exps}
        for v, e in other.exps:
            acc[v] = max(acc.get(v, 0), e)
        return Monomial(tuple(sorted(acc.items())))

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self.exps)


def lex_compare(a: Monomial, b: Monomial) -> int:
    """Three-way lexicographic comparison: -1, 0, or 1 as a <, =, > b.

    At the smallest variable index where the effective exponents differ, the
    monomial with the larger exponent is the greater one.
    """
    ea, eb = a.exps, b.exps
    ia = ib = 0
    while ia < len(ea) and ib < len(eb):
        va, xa = ea[ia]
        vb, xb = eb[ib]
        if va == vb:
            if xa != xb:
                return 1 if xa > xb else -1
            ia += 1
            ib += 1
        elif va < vb:
            return 1  # a uses a more significant variable that b lacks
        else:
            return -1
    if ia < len(ea):
        return 1
    if ib < len(eb):
        return -1
    return 0


#: Sort key for ascending lex order on monomials.
lex_key = cmp_to_key(lex_compare)


@dataclass(frozen=True)
class Term:
    """A nonzero coefficient attached to a monomial."""

    coeff: Fraction
    mono: Monomial

    def __post_init__(self) -> None:
        if self.coeff == 0:
            raise ValueError("terms must have a nonzero coefficient")

    def __str__(self) -> str:
        if self.mono.is_constant:
            return str(self.coeff)
        if self.coeff == 1:
            return str(self.mono)
        if self.coeff == -1:
            return f"-{self.mono}"
        return f"{self.coeff}*{self.mono}"


@dataclass(frozen=True)
class Poly:
    """A polynomial in Q[x0..x_{nvars-1}]: terms strictly descending under lex.

    The zero polynomial has no terms; the ambient variable count is carried
    explicitly so that rings of different arity can never be mixed silently.
    """

    nvars: int
    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        if self.nvars < 0:
            raise ValueError("nvars must be >= 0")
        prev: Monomial | None = None
        for t in self.terms:
            if t.mono.max_var() >= self.nvars:
                raise ValueError(
                    f"variable x{t.mono.max_var()} out of range for nvars={self.nvars}"
                )
            if prev is not None and lex_compare(prev, t.mono) != 1:
                raise ValueError("terms must be strictly descending under lex")
            prev = t.mono

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls(nvars, ())

    @classmethod
    def one(cls, nvars: int) -> Poly:
        return cls.constant(nvars, 1)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> Poly:
        c = Fraction(value)
        if c == 0:
            return cls(nvars, ())
        return cls(nvars, (Term(c, Monomial()),))

    @classmethod
    def variable(cls, nvars: int, index: int) -> Poly:
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        return cls(nvars, (Term(Fraction(1), Monomial(((index, 1),))),))

    @classmethod
    def from_terms(cls, nvars: int, pairs: Iterable[tuple[Scalar, Monomial]]) -> Poly:
        """Normalize arbitrary (coefficient, monomial) pairs into a polynomial."""
        acc: dict[Monomial, Fraction] = {}
        for coeff, mono in pairs:
            c = Fraction(coeff)
            if c == 0:
                continue
            acc[mono] = acc.get(mono, Fraction(0)) + c
        kept = [(m, c) for m, c in acc.items() if c != 0]
        kept.sort(key=lambda mc: lex_key(mc[0]), reverse=True)
        return cls(nvars, tuple(Term(c, m) for m, c in kept))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self) -> Term:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self) -> Monomial:
        return self.leading_term().mono

    def leading_coeff(self) -> Fraction:
        return self.leading_term().coeff

    def multideg(self) -> Monomial:
        """The multidegree: the monomial of the leading term."""
        return self.leading_term().mono

    def total_degree(self) -> int:
        return max((t.mono.degree() for t in self.terms), default=0)

    def monic(self) -> Poly:
        """Scale so the leading coefficient is 1."""
        lc = self.leading_coeff()
        if lc == 1:
            return self
        return Poly(self.nvars, tuple(Term(t.coeff / lc, t.mono) for t in self.terms))

    def lift(self, extra: int = 1) -> Poly:
        """Embed into a ring with ``extra`` additional (unused) variables.

        The new variables take the highest indices, so they are the least
        significant under lex and the terms carry over unchanged.
        """
        if extra < 0:
            raise ValueError("extra must be >= 0")
        return Poly(self.nvars + extra, self.terms)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: object) -> Poly | None:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise MismatchedArityError(
                    f"cannot combine polynomials over {self.nvars} and {other.nvars} variables"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.nvars, other)
        return None

    def __add__(self, other: object) -> Poly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        # merge of two descending term lists
        out: list[Term] = []
        a, b = self.terms, q.terms
        ia = ib = 0
        while ia < len(a) and ib < len(b):
            cmp = lex_compare(a[ia].mono, b[ib].mono)
            if cmp == 1:
                out.append(a[ia])
                ia += 1
            elif cmp == -1:
                out.append(b[ib])
                ib += 1
            else:
                c = a[ia].coeff + b[ib].coeff
                if c != 0:
                    out.append(Term(c, a[ia].mono))
                ia += 1
                ib += 1
        out.extend(a[ia:])
        out.extend(b[ib:])
        return Poly(self.nvars, tuple(out))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.nvars, tuple(Term(-t.coeff, t.mono) for t in self.terms))

    def __sub__(self, other: object) -> Poly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: object) -> Poly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: object) -> Poly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if self.is_zero or q.is_zero:
            return Poly.zero(self.nvars)
        acc: dict[Monomial, Fraction] = {}
        for ta in self.terms:
            for tb in q.terms:
                m = ta.mono.mul(tb.mono)
                acc[m] = acc.get(m, Fraction(0)) + ta.coeff * tb.coeff
        kept = [(m, c) for m, c in acc.items() if c != 0]
        kept.sort(key=lambda mc: lex_key(mc[0]), reverse=True)
        return Poly(self.nvars, tuple(Term(c, m) for m, c in kept))

    __rmul__ = __mul__

    def mul_term(self, t: Term) -> Poly:
        """Multiply by a single term; order is preserved, so no re-sort is needed."""
        return Poly(
            self.nvars,
            tuple(Term(u.coeff * t.coeff, u.mono.mul(t.mono)) for u in self.terms),
        )

    def __pow__(self, n: int) -> Poly:
        """n-th power with the ring convention p**0 == 1 (including p == 0)."""
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative exponents are not defined for polynomials")
        result = Poly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [str(self.terms[0])]
        for t in self.terms[1:]:
            s = str(Term(abs(t.coeff), t.mono))
            parts.append(f"- {s}" if t.coeff < 0 else f"+ {s}")
        return " ".join(parts)


def variables(nvars: int) -> tuple[Poly, ...]:
    """The generators x0..x_{nvars-1} of Q[x0..x_{nvars-1}]."""
    return tuple(Poly.variable(nvars, i) for i in range(nvars))


def require_same_arity(polys: Iterable[Poly]) -> int | None:
    """Check that all polynomials share one nvars; returns it (None if empty)."""
    nvars: int | None = None
    for p in polys:
        if nvars is None:
            nvars = p.nvars
        elif p.nvars != nvars:
            raise MismatchedArityError(
                f"mixed variable counts: {nvars} and {p.nvars}"
            )
    return nvars


def poly_sum(nvars: int, polys: Sequence[Poly]) -> Poly:
    total = Poly.zero(nvars)
    for p in polys:
        total = total + p
    return total
