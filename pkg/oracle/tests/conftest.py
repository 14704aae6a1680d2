from __future__ import annotations

import json
import random
import subprocess
import sys
from typing import Any

from sympy import QQ

from sympy_oracle.main import make_ring, oracle_main, serialize_poly, serialize_polys

PRIMARY_CLI = [sys.executable, "-m", "gbcert.cli"]
ORACLE_CMD = f"{sys.executable} -m sympy_oracle.main"

SUBCOMMANDS = {
    "reduce": "reduce",
    "normal_form": "reduce",
    "groebner_basis": "gb",
    "ideal_membership": "member",
    "radical_membership": "radical",
    "ideal_equality": "ideal-eq",
}


def run_oracle(task: dict) -> tuple[dict, int]:
    out, code = oracle_main(json.dumps(task))
    return json.loads(out), code


def run_primary(task: dict, *flags: str) -> tuple[dict, int]:
    """Invoke the gbcert CLI on a task document; returns (envelope, exit code)."""
    proc = subprocess.run(
        PRIMARY_CLI + [SUBCOMMANDS[task["task"]], *flags],
        input=json.dumps(task).encode(),
        capture_output=True,
    )
    assert proc.stdout, proc.stderr.decode()
    return json.loads(proc.stdout.decode()), proc.returncode


def primary_check(cert: dict) -> tuple[dict, int]:
    """Run the primary's trusted checker on a certificate document."""
    proc = subprocess.run(
        PRIMARY_CLI + ["check"],
        input=json.dumps(cert).encode(),
        capture_output=True,
    )
    assert proc.stdout, proc.stderr.decode()
    return json.loads(proc.stdout.decode()), proc.returncode


# -- random task documents (built with sympy, independent of gbcert) ---------------


def random_ring_poly(rng: random.Random, R, max_terms=3, max_deg=3, allow_zero=True):
    nvars = len(R.gens)
    p = R.zero
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        coeff = QQ(rng.choice([n for n in range(-9, 10) if n]), rng.choice([1, 1, 2, 3]))
        monom = [0] * nvars
        budget = max_deg
        for v in range(nvars):
            e = rng.randint(0, min(2, budget)) if rng.random() < 0.6 else 0
            monom[v] = e
            budget -= e
        p = p + R.from_dict({tuple(monom): coeff})
    if not allow_zero and not p:
        return R.one
    return p


def random_task_obj(rng: random.Random) -> dict[str, Any]:
    nvars = rng.choice([1, 1, 2, 2, 2, 3])
    R = make_ring(nvars)
    kind = rng.choice(
        [
            "reduce",
            "normal_form",
            "groebner_basis",
            "ideal_membership",
            "ideal_membership",
            "radical_membership",
            "ideal_equality",
        ]
    )
    gens = [
        random_ring_poly(rng, R, allow_zero=False)
        for _ in range(rng.randint(1, 3))
    ]
    task: dict[str, Any] = {"task": kind, "order": "lex", "nvars": nvars}
    if kind == "groebner_basis":
        task["polys"] = serialize_polys(gens, nvars)
        return task
    if kind == "ideal_equality":
        if rng.random() < 0.5:
            right = [g.mul_ground(QQ(rng.choice([1, 2, 3]))) for g in gens]
            if rng.random() < 0.5:
                right.append(sum((random_ring_poly(rng, R, 1, 1) * g for g in gens), R.zero))
        else:
            right = [random_ring_poly(rng, R, allow_zero=False) for _ in range(rng.randint(1, 3))]
        task["left"] = serialize_polys(gens, nvars)
        task["right"] = serialize_polys(right, nvars)
        return task
    if rng.random() < 0.5:
        f = random_ring_poly(rng, R)
    elif kind == "radical_membership":
        f = random_ring_poly(rng, R, max_terms=2, max_deg=2, allow_zero=False)
        gens = gens[:2] + [f ** rng.randint(1, 3)]
        rng.shuffle(gens)
    else:
        f = sum((random_ring_poly(rng, R, 2, 1) * g for g in gens), R.zero)
    task["f"] = serialize_poly(f, nvars)
    task["polys"] = serialize_polys(gens, nvars)
    return task
