"""Groebner-basis oracle on SymPy's sparse polynomial rings.

Implements the JSON task protocol: polynomial reduction, normal forms,
Groebner bases with S-pair witnesses and cofactor matrices, ideal
membership, radical membership (auxiliary variable adjoined last, so it is
lex-least), and ideal equality. Variable index i maps to the SymPy symbol
``x{i}`` with x0 listed first, keeping x0 lex-greatest.

Positive verdicts carry full certificates in the wire polynomial format;
negative verdicts are reported as bare statuses (the consumer re-derives
them internally and never trusts them as-is anyway).
"""

from __future__ import annotations

import json
import sys
from typing import Any

from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import ring

MAX_RADICAL_EXPONENT = 64


class TaskError(Exception):
    """Anything wrong with the incoming task document."""


# -- wire format <-> sympy -------------------------------------------------------


def make_ring(nvars: int, extra_aux: bool = False):
    names = [f"x{i}" for i in range(nvars)]
    if extra_aux:
        names.append("t")  # adjoined last: least significant under lex
    return ring(",".join(names), QQ, lex)[0]


def parse_poly(obj: Any, R) -> Any:
    if not isinstance(obj, list):
        raise TaskError("a polynomial must be an array of terms")
    nvars = len(R.gens)
    data: dict[tuple[int, ...], Any] = {}
    for entry in obj:
        if not isinstance(entry, dict) or "c" not in entry or "e" not in entry:
            raise TaskError(f"bad term {entry!r}")
        num, den = entry["c"]
        if den == 0:
            raise TaskError("zero denominator")
        exps = [0] * nvars
        for var, exp in entry["e"]:
            if not 0 <= var < nvars:
                raise TaskError(f"variable x{var} out of range")
            exps[var] += exp
        key = tuple(exps)
        data[key] = data.get(key, QQ(0)) + QQ(int(num), int(den))
    return R.from_dict({m: c for m, c in data.items() if c != 0})


def serialize_poly(f, nvars: int) -> list[dict[str, Any]]:
    R = f.ring
    out = []
    for monom, coeff in sorted(f.terms(), key=lambda t: R.order(t[0]), reverse=True):
        exps = [[i, e] for i, e in enumerate(monom[:nvars]) if e > 0]
        out.append({"c": [int(coeff.numerator), int(coeff.denominator)], "e": exps})
    return out


def serialize_polys(polys, nvars: int) -> list[list]:
    return [serialize_poly(p, nvars) for p in polys]


# -- division and tracked Buchberger ------------------------------------------------


def div_with_quotients(f, divisors):
    """SymPy division, robust to zero divisors and padded quotient lists."""
    R = f.ring
    nonzero = [(i, b) for i, b in enumerate(divisors) if b]
    quotients = [R.zero] * len(divisors)
    if not nonzero:
        return quotients, f
    qs, r = f.div([b for _, b in nonzero])
    for (i, _), q in zip(nonzero, list(qs) + [R.zero] * len(nonzero)):
        quotients[i] = q
    return quotients, r


def tracked_groebner(R, generators):
    """Reduced monic Groebner basis plus rows expressing it over the inputs."""
    m = len(generators)

    def unit_row(j, scale):
        row = [R.zero] * m
        row[j] = R.from_dict({(0,) * len(R.gens): scale})
        return row

    basis, rows = [], []
    for j, g in enumerate(generators):
        if not g:
            continue
        basis.append(g.monic())
        rows.append(unit_row(j, QQ(1) / g.LC))

    queue = [(i, j) for j in range(len(basis)) for i in range(j)]
    head = 0
    while head < len(queue):
        i, j = queue[head]
        head += 1
        lm_i, lm_j = basis[i].LM, basis[j].LM
        lcm = R.monomial_lcm(lm_i, lm_j)
        if lcm == R.monomial_mul(lm_i, lm_j):
            continue  # coprime leading monomials
        ti = (R.monomial_div(lcm, lm_i), QQ(1) / basis[i].LC)
        tj = (R.monomial_div(lcm, lm_j), QQ(1) / basis[j].LC)
        s = basis[i].mul_term(ti) - basis[j].mul_term(tj)
        vec = [a.mul_term(ti) - b.mul_term(tj) for a, b in zip(rows[i], rows[j])]
        qs, r = div_with_quotients(s, basis)
        for q, row in zip(qs, rows):
            if q:
                vec = [v - q * c for v, c in zip(vec, row)]
        if not r:
            continue
        scale = QQ(1) / r.LC
        basis.append(r.monic())
        rows.append([v.mul_ground(scale) for v in vec])
        k = len(basis) - 1
        queue.extend((i2, k) for i2 in range(k))

    # minimal basis: drop leading monomials another element's divides
    order = sorted(range(len(basis)), key=lambda k: R.order(basis[k].LM))
    kept = []
    for idx in order:
        if not any(R.monomial_div(basis[idx].LM, basis[k].LM) is not None for k in kept):
            kept.append(idx)
    basis = [basis[k] for k in kept]
    rows = [rows[k] for k in kept]

    # interreduce (leading terms survive by minimality)
    for pos in range(len(basis)):
        others = basis[:pos] + basis[pos + 1 :]
        other_rows = rows[:pos] + rows[pos + 1 :]
        qs, r = div_with_quotients(basis[pos], others)
        row = rows[pos]
        for q, orow in zip(qs, other_rows):
            if q:
                row = [v - q * c for v, c in zip(row, orow)]
        basis[pos], rows[pos] = r, row

    order = sorted(range(len(basis)), key=lambda k: R.order(basis[k].LM), reverse=True)
    return [basis[k] for k in order], [rows[k] for k in order]


def compose_cofactors(quotients, rows, n_inputs, R):
    cof = [R.zero] * n_inputs
    for q, row in zip(quotients, rows):
        if q:
            for j, c in enumerate(row):
                if c:
                    cof[j] = cof[j] + q * c
    return cof


# -- certificate builders -----------------------------------------------------------


def membership_cert(f, gens, cofactors, nvars) -> dict:
    return {
        "type": "membership",
        "nvars": nvars,
        "f": serialize_poly(f, nvars),
        "generators": serialize_polys(gens, nvars),
        "cofactors": serialize_polys(cofactors, nvars),
    }


def ideal_eq_cert(left, right, left_rows, right_rows, nvars) -> dict:
    return {
        "type": "ideal_eq",
        "nvars": nvars,
        "left": serialize_polys(left, nvars),
        "right": serialize_polys(right, nvars),
        "left_in_right": [serialize_polys(row, nvars) for row in left_rows],
        "right_in_left": [serialize_polys(row, nvars) for row in right_rows],
    }


def groebner_cert(R, generators, nvars) -> dict:
    basis, rows = tracked_groebner(R, generators)
    # pairs in (i, j) lexicographic order, i < j
    witnesses = []
    n = len(basis)
    for i in range(n):
        for j in range(i + 1, n):
            lcm = R.monomial_lcm(basis[i].LM, basis[j].LM)
            ti = (R.monomial_div(lcm, basis[i].LM), QQ(1) / basis[i].LC)
            tj = (R.monomial_div(lcm, basis[j].LM), QQ(1) / basis[j].LC)
            s = basis[i].mul_term(ti) - basis[j].mul_term(tj)
            qs, r = div_with_quotients(s, basis)
            if r:
                raise TaskError("internal oracle error: basis fails the criterion")
            witnesses.append(
                {"i": i, "j": j, "quotients": serialize_polys(qs, nvars)}
            )
    # <basis> = <generators>: basis rows give one inclusion, division the other
    right_rows = []
    for g in generators:
        qs, r = div_with_quotients(g, basis)
        if r:
            raise TaskError("internal oracle error: generator does not reduce to zero")
        right_rows.append(qs)
    return {
        "type": "groebner",
        "nvars": nvars,
        "basis": serialize_polys(basis, nvars),
        "target": serialize_polys(generators, nvars),
        "s_pair_witnesses": witnesses,
        "ideal_eq": ideal_eq_cert(basis, generators, rows, right_rows, nvars),
    }, basis, rows


# -- task handlers --------------------------------------------------------------------


def handle_reduce(task: dict) -> dict:
    nvars = task["nvars"]
    R = make_ring(nvars)
    f = parse_poly(task["f"], R)
    divisors = [parse_poly(p, R) for p in task.get("polys", [])]
    qs, r = div_with_quotients(f, divisors)
    cert = {
        "type": "remainder",
        "nvars": nvars,
        "f": serialize_poly(f, nvars),
        "divisors": serialize_polys(divisors, nvars),
        "quotients": serialize_polys(qs, nvars),
        "remainder": serialize_poly(r, nvars),
    }
    return {"status": "ok", "certificate": cert}


def handle_normal_form(task: dict) -> dict:
    nvars = task["nvars"]
    R = make_ring(nvars)
    f = parse_poly(task["f"], R)
    gens = [parse_poly(p, R) for p in task.get("polys", [])]
    basis, _ = tracked_groebner(R, gens)
    qs, r = div_with_quotients(f, basis)
    cert = {
        "type": "remainder",
        "nvars": nvars,
        "f": serialize_poly(f, nvars),
        "divisors": serialize_polys(basis, nvars),
        "quotients": serialize_polys(qs, nvars),
        "remainder": serialize_poly(r, nvars),
    }
    return {"status": "ok", "certificate": cert}


def handle_groebner_basis(task: dict) -> dict:
    nvars = task["nvars"]
    R = make_ring(nvars)
    gens = [parse_poly(p, R) for p in task.get("polys", [])]
    cert, _, _ = groebner_cert(R, gens, nvars)
    return {"status": "ok", "certificate": cert}


def handle_ideal_membership(task: dict) -> dict:
    nvars = task["nvars"]
    R = make_ring(nvars)
    f = parse_poly(task["f"], R)
    gens = [parse_poly(p, R) for p in task.get("polys", [])]
    basis, rows = tracked_groebner(R, gens)
    qs, r = div_with_quotients(f, basis)
    if r:
        return {"status": "not_member", "message": "nonzero normal form"}
    cof = compose_cofactors(qs, rows, len(gens), R)
    return {"status": "ok", "certificate": membership_cert(f, gens, cof, nvars)}


def handle_radical_membership(task: dict) -> dict:
    nvars = task["nvars"]
    R = make_ring(nvars)
    f = parse_poly(task["f"], R)
    gens = [parse_poly(p, R) for p in task.get("polys", [])]

    # decide via the extension ideal <lift(gens), 1 - t*f>
    R_ext = make_ring(nvars, extra_aux=True)

    def lift(p):
        return R_ext.from_dict({monom + (0,): coeff for monom, coeff in p.terms()})

    t = R_ext.gens[-1]
    extended = [lift(g) for g in gens] + [R_ext.one - t * lift(f)]
    ext_basis, _ = tracked_groebner(R_ext, extended)
    _, r_one = div_with_quotients(R_ext.one, ext_basis)
    if r_one:
        return {"status": "not_in_radical", "message": "extension ideal misses 1"}

    basis, rows = tracked_groebner(R, gens)
    power = R.one
    for exponent in range(1, MAX_RADICAL_EXPONENT + 1):
        power = power * f
        qs, r = div_with_quotients(power, basis)
        if not r:
            cof = compose_cofactors(qs, rows, len(gens), R)
            cert = {
                "type": "radical_member",
                "nvars": nvars,
                "f": serialize_poly(f, nvars),
                "generators": serialize_polys(gens, nvars),
                "exponent": exponent,
                "membership": membership_cert(power, gens, cof, nvars),
            }
            return {"status": "ok", "certificate": cert}
    return {"status": "in_radical", "message": "no witness exponent within budget"}


def handle_ideal_equality(task: dict) -> dict:
    nvars = task["nvars"]
    R = make_ring(nvars)
    left = [parse_poly(p, R) for p in task.get("left", [])]
    right = [parse_poly(p, R) for p in task.get("right", [])]

    def rows_over(targets, gens):
        basis, rows = tracked_groebner(R, gens)
        out = []
        for f in targets:
            qs, r = div_with_quotients(f, basis)
            if r:
                return None
            out.append(compose_cofactors(qs, rows, len(gens), R))
        return out

    left_rows = rows_over(left, right)
    if left_rows is None:
        return {"status": "not_equal", "message": "a left generator is outside the right ideal"}
    right_rows = rows_over(right, left)
    if right_rows is None:
        return {"status": "not_equal", "message": "a right generator is outside the left ideal"}
    return {
        "status": "ok",
        "certificate": ideal_eq_cert(left, right, left_rows, right_rows, nvars),
    }


HANDLERS = {
    "reduce": handle_reduce,
    "normal_form": handle_normal_form,
    "groebner_basis": handle_groebner_basis,
    "ideal_membership": handle_ideal_membership,
    "radical_membership": handle_radical_membership,
    "ideal_equality": handle_ideal_equality,
}


def oracle_main(stdin_text: str) -> tuple[str, int]:
    """Process one task document; returns (stdout JSON, exit code)."""
    try:
        task = json.loads(stdin_text)
    except json.JSONDecodeError as exc:
        return json.dumps({"status": "error", "message": f"bad JSON: {exc}"}), 1
    if not isinstance(task, dict):
        return json.dumps({"status": "error", "message": "task must be an object"}), 1
    if task.get("order", "lex") != "lex":
        return json.dumps({"status": "error", "message": "only the lex order is supported"}), 1
    handler = HANDLERS.get(task.get("task"))
    if handler is None:
        return (
            json.dumps({"status": "error", "message": f"unknown task {task.get('task')!r}"}),
            1,
        )
    try:
        envelope = handler(task)
    except (TaskError, KeyError, TypeError, ValueError) as exc:
        return json.dumps({"status": "error", "message": f"{type(exc).__name__}: {exc}"}), 1
    return json.dumps(envelope, separators=(",", ":")), 0


def entrypoint() -> None:
    out, code = oracle_main(sys.stdin.read())
    sys.stdout.write(out)
    sys.exit(code)


if __name__ == "__main__":
    entrypoint()
