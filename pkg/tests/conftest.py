from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

from gbcert.poly import Monomial, Poly

sys.path.insert(0, str(Path(__file__).parent))  # dense_oracle, task_gen


def random_monomial(rng: random.Random, nvars: int, max_deg: int) -> Monomial:
    pairs = []
    budget = max_deg
    for var in range(nvars):
        if budget <= 0:
            break
        exp = rng.randint(0, min(2, budget)) if rng.random() < 0.6 else 0
        if exp:
            pairs.append((var, exp))
            budget -= exp
    return Monomial(tuple(pairs))


def random_poly(
    rng: random.Random,
    nvars: int,
    max_terms: int = 3,
    max_deg: int = 3,
    max_num: int = 9,
    allow_zero: bool = True,
) -> Poly:
    n_terms = rng.randint(0 if allow_zero else 1, max_terms)
    pairs = []
    for _ in range(n_terms):
        num = rng.choice([n for n in range(-max_num, max_num + 1) if n != 0])
        den = rng.choice([1, 1, 1, 2, 3])
        pairs.append((Fraction(num, den), random_monomial(rng, nvars, max_deg)))
    p = Poly.from_terms(nvars, pairs)
    if not allow_zero and p.is_zero:
        return Poly.constant(nvars, 1)
    return p


def random_poly_list(
    rng: random.Random,
    nvars: int,
    max_polys: int = 3,
    max_terms: int = 3,
    max_deg: int = 3,
    allow_zero: bool = False,
) -> list[Poly]:
    count = rng.randint(1, max_polys)
    return [
        random_poly(rng, nvars, max_terms=max_terms, max_deg=max_deg, allow_zero=allow_zero)
        for _ in range(count)
    ]
