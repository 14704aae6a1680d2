from __future__ import annotations

import json
import subprocess
import sys

from sympy import QQ
from sympy.polys.groebnertools import groebner as sympy_groebner

from sympy_oracle.main import make_ring, oracle_main, serialize_polys, tracked_groebner

from conftest import primary_check, run_oracle

X0_PLUS_X1 = [{"c": [1, 1], "e": [[0, 1]]}, {"c": [1, 1], "e": [[1, 1]]}]
X0X1_MINUS_1 = [{"c": [1, 1], "e": [[0, 1], [1, 1]]}, {"c": [-1, 1], "e": []}]


def test_groebner_task_golden_basis():
    task = {
        "task": "groebner_basis",
        "order": "lex",
        "nvars": 2,
        "polys": [X0_PLUS_X1, X0X1_MINUS_1],
    }
    envelope, code = run_oracle(task)
    assert code == 0
    assert envelope["status"] == "ok"
    basis = envelope["certificate"]["basis"]
    assert basis == [
        X0_PLUS_X1,
        [{"c": [1, 1], "e": [[1, 2]]}, {"c": [1, 1], "e": []}],  # x1^2 + 1
    ]
    report, check_code = primary_check(envelope["certificate"])
    assert check_code == 0 and report["ok"]


def test_membership_task_certificate_passes_primary_checker():
    task = {
        "task": "ideal_membership",
        "order": "lex",
        "nvars": 2,
        "f": [{"c": [1, 1], "e": []}],
        "polys": [
            [{"c": [1, 1], "e": [[0, 1]]}],
            [{"c": [-1, 1], "e": [[0, 1], [1, 1]]}, {"c": [1, 1], "e": []}],
        ],
    }
    envelope, code = run_oracle(task)
    assert code == 0 and envelope["status"] == "ok"
    report, check_code = primary_check(envelope["certificate"])
    assert check_code == 0 and report["ok"]


def test_reduce_task_golden_remainder():
    # x0^2*x1 + x0*x1^2 by {x0*x1 - 1}: remainder x0 + x1
    task = {
        "task": "reduce",
        "order": "lex",
        "nvars": 2,
        "f": [
            {"c": [1, 1], "e": [[0, 2], [1, 1]]},
            {"c": [1, 1], "e": [[0, 1], [1, 2]]},
        ],
        "polys": [X0X1_MINUS_1],
    }
    envelope, code = run_oracle(task)
    assert code == 0 and envelope["status"] == "ok"
    assert envelope["certificate"]["remainder"] == X0_PLUS_X1
    report, check_code = primary_check(envelope["certificate"])
    assert check_code == 0 and report["ok"]


def test_radical_task_minimal_exponent():
    # (x0 - x1)(x0 + x1) in sqrt(<x0^2, x1^2>) with exponent 1... times: f = x0*x1 needs 2
    task = {
        "task": "radical_membership",
        "order": "lex",
        "nvars": 2,
        "f": [{"c": [1, 1], "e": [[0, 1], [1, 1]]}],
        "polys": [
            [{"c": [1, 1], "e": [[0, 2]]}],
            [{"c": [1, 1], "e": [[1, 2]]}],
        ],
    }
    envelope, code = run_oracle(task)
    assert code == 0 and envelope["status"] == "ok"
    assert envelope["certificate"]["exponent"] == 2
    report, check_code = primary_check(envelope["certificate"])
    assert check_code == 0 and report["ok"]


def test_radical_task_negative():
    task = {
        "task": "radical_membership",
        "order": "lex",
        "nvars": 2,
        "f": [{"c": [1, 1], "e": [[0, 1]]}],
        "polys": [X0_PLUS_X1],
    }
    envelope, code = run_oracle(task)
    assert code == 0
    assert envelope["status"] == "not_in_radical"
    assert "certificate" not in envelope


def test_ideal_equality_task():
    task = {
        "task": "ideal_equality",
        "order": "lex",
        "nvars": 2,
        "left": [
            [{"c": [1, 1], "e": [[0, 1]]}, {"c": [1, 1], "e": [[1, 2]]}],
            [{"c": [1, 1], "e": [[1, 2]]}],
        ],
        "right": [
            [{"c": [1, 1], "e": [[0, 1]]}],
            [{"c": [1, 1], "e": [[1, 2]]}],
        ],
    }
    envelope, code = run_oracle(task)
    assert code == 0 and envelope["status"] == "ok"
    report, check_code = primary_check(envelope["certificate"])
    assert check_code == 0 and report["ok"]


def test_unknown_task_kind_errors_with_nonzero_exit():
    proc = subprocess.run(
        [sys.executable, "-m", "sympy_oracle.main"],
        input=json.dumps({"task": "grevlex_gb", "order": "lex", "nvars": 1}).encode(),
        capture_output=True,
    )
    assert proc.returncode != 0
    envelope = json.loads(proc.stdout.decode())
    assert envelope["status"] == "error"


def test_non_lex_order_rejected():
    envelope, code = run_oracle({"task": "reduce", "order": "grevlex", "nvars": 1, "f": [], "polys": []})
    assert code != 0 and envelope["status"] == "error"


def test_tracked_basis_matches_sympy_groebner():
    rng_cases = [
        ("x0,x1", [lambda R: R.gens[0] + R.gens[1], lambda R: R.gens[0] * R.gens[1] - 1]),
        ("x0,x1", [lambda R: R.gens[0] + R.gens[1] ** 2, lambda R: R.gens[1] ** 2]),
        (
            "x0,x1,x2",
            [
                lambda R: R.gens[0] ** 2 - R.gens[1],
                lambda R: R.gens[0] * R.gens[2] - 1,
            ],
        ),
    ]
    for names, builders in rng_cases:
        R = make_ring(len(names.split(",")))
        gens = [b(R) for b in builders]
        mine, rows = tracked_groebner(R, gens)
        reference = sympy_groebner(gens, R)
        assert mine == list(reference)
        # cofactor rows reproduce the basis exactly
        for g, row in zip(mine, rows):
            assert sum((c * b for c, b in zip(row, gens)), R.zero) == g


def test_zero_variable_ring_supported():
    task = {
        "task": "ideal_membership",
        "order": "lex",
        "nvars": 0,
        "f": [{"c": [2, 1], "e": []}],
        "polys": [[{"c": [4, 1], "e": []}]],
    }
    envelope, code = run_oracle(task)
    assert code == 0 and envelope["status"] == "ok"
    assert envelope["certificate"]["cofactors"] == [[{"c": [1, 2], "e": []}]]
