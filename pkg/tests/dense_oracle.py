"""Independent dense-map polynomial arithmetic used as a test oracle.

A polynomial is a dict mapping dense exponent tuples (one entry per
variable) to Fractions. The implementation shares no code with the package
under test, so agreement between the two is meaningful evidence.
"""

from __future__ import annotations

from fractions import Fraction

from gbcert.poly import Poly

Dense = dict[tuple[int, ...], Fraction]


def to_dense(p: Poly) -> Dense:
    out: Dense = {}
    for t in p.terms:
        exps = [0] * p.nvars
        for var, exp in t.mono.exps:
            exps[var] = exp
        out[tuple(exps)] = t.coeff
    return out


def dense_add(a: Dense, b: Dense) -> Dense:
    out = dict(a)
    for mono, coeff in b.items():
        c = out.get(mono, Fraction(0)) + coeff
        if c == 0:
            out.pop(mono, None)
        else:
            out[mono] = c
    return out


def dense_mul(a: Dense, b: Dense) -> Dense:
    out: Dense = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            c = out.get(mono, Fraction(0)) + ca * cb
            if c == 0:
                out.pop(mono, None)
            else:
                out[mono] = c
    return out


def dense_lex_compare(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Brute-force comparator: pad densely and compare left to right."""
    width = max(len(a), len(b))
    ea = a + (0,) * (width - len(a))
    eb = b + (0,) * (width - len(b))
    for xa, xb in zip(ea, eb):
        if xa != xb:
            return 1 if xa > xb else -1
    return 0
