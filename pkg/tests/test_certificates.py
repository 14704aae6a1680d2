from __future__ import annotations

import random
from dataclasses import replace

import pytest

from gbcert.buchberger import is_groebner_basis
from gbcert.certificates import (
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
    extension_generators,
)
from gbcert.check import (
    check_groebner_cert,
    check_ideal_eq,
    check_membership,
    check_nonmembership,
    check_radical_member,
    check_radical_nonmember,
)
from gbcert.errors import BudgetExceededError, LengthMismatchError
from gbcert.generate import (
    decide_membership,
    gen_groebner_cert,
    gen_ideal_eq,
    gen_membership,
    gen_radical_member,
    gen_radical_nonmember,
)
from gbcert.poly import Poly, poly_sum, variables

from conftest import random_poly, random_poly_list

X0, X1 = variables(2)


# -- membership --------------------------------------------------------------------


def test_gen_membership_unit_in_saturated_ideal():
    cert = gen_membership(Poly.one(2), [X0, 1 - X1 * X0])
    assert isinstance(cert, MembershipCert)
    assert cert.cofactors == (X1, Poly.one(2))
    assert check_membership(cert).ok


def test_gen_membership_of_a_generator():
    cert = gen_membership(X0, [X0, X1])
    assert isinstance(cert, MembershipCert)
    assert cert.cofactors == (Poly.one(2), Poly.zero(2))


def test_gen_membership_negative():
    result = gen_membership(X0 + X1, [X0 + X1**2, X1**2])
    assert isinstance(result, NotAMember)
    assert result.remainder == X1


def test_check_membership_rejects_bad_cofactors():
    cert = MembershipCert(Poly.one(2), (X0, 1 - X1 * X0), (X1, Poly.zero(2)))
    report = check_membership(cert)
    assert not report.ok


def test_check_membership_zero_in_empty_ideal():
    cert = MembershipCert(Poly.zero(2), (), ())
    assert check_membership(cert).ok


def test_check_membership_length_mismatch():
    with pytest.raises(LengthMismatchError):
        check_membership(MembershipCert(X0, (X0, X1), (Poly.one(2),)))


# -- ideal equality -------------------------------------------------------------------


def test_gen_ideal_eq_golden_matrices():
    cert = gen_ideal_eq([X0 + X1**2, X1**2], [X0, X1**2])
    assert isinstance(cert, IdealEqCert)
    one, zero = Poly.one(2), Poly.zero(2)
    assert cert.left_in_right == ((one, one), (zero, one))
    assert cert.right_in_left == ((one, -one), (zero, one))
    assert check_ideal_eq(cert).ok


def test_gen_ideal_eq_same_list_gives_identity_matrices():
    cert = gen_ideal_eq([X0, X1], [X0, X1])
    one, zero = Poly.one(2), Poly.zero(2)
    assert cert.left_in_right == ((one, zero), (zero, one))
    assert cert.right_in_left == ((one, zero), (zero, one))


def test_gen_ideal_eq_negative_names_first_failure():
    result = gen_ideal_eq([X0], [X1])
    assert isinstance(result, NotEqual)
    assert (result.side, result.index) == ("left", 0)
    assert result.generator == X0


def test_check_ideal_eq_rejects_zeroed_entry_naming_row():
    cert = gen_ideal_eq([X0 + X1**2, X1**2], [X0, X1**2])
    bad_rows = (cert.left_in_right[0][:1] + (Poly.zero(2),),) + cert.left_in_right[1:]
    tampered = replace(cert, left_in_right=bad_rows)
    report = check_ideal_eq(tampered)
    assert not report.ok
    assert any(c.name == "left[0]_in_right" for c in report.failures)


def test_check_ideal_eq_empty_ideals():
    assert check_ideal_eq(IdealEqCert((), (), (), ())).ok


# -- Groebner certs ---------------------------------------------------------------------


def test_gen_groebner_cert_golden():
    cert = gen_groebner_cert([X0 + X1, X0 * X1 - 1])
    assert cert.basis == (X0 + X1, X1**2 + 1)
    assert check_groebner_cert(cert).ok


def test_gen_groebner_cert_singleton_has_no_pairs():
    cert = gen_groebner_cert([X0])
    assert cert.basis == (X0,)
    assert cert.s_pair_witnesses == ()
    assert check_groebner_cert(cert).ok


def test_gen_groebner_cert_reduced_basis():
    cert = gen_groebner_cert([X0 + X1**2, X1**2])
    assert cert.basis == (X0, X1**2)
    assert check_groebner_cert(cert).ok


def test_check_groebner_cert_rejects_non_basis():
    generators = [X0 + X1, X0 * X1 - 1]
    fake_basis = (X0 * X1 - 1, X0 + X1)
    crit = is_groebner_basis(list(fake_basis))
    witnesses = tuple(PairWitness(w.i, w.j, w.quotients) for w in crit.witnesses)
    ideal_eq = gen_ideal_eq(list(fake_basis), generators)
    cert = GroebnerCert(fake_basis, tuple(generators), witnesses, ideal_eq)
    report = check_groebner_cert(cert)
    assert not report.ok
    assert any(c.name.startswith("s_pair") for c in report.failures)


def test_check_groebner_cert_zero_ideal():
    cert = GroebnerCert((), (), (), IdealEqCert((), (), (), ()))
    assert check_groebner_cert(cert).ok


def test_check_groebner_cert_witness_count_enforced():
    cert = gen_groebner_cert([X0 + X1, X0 * X1 - 1])
    with pytest.raises(LengthMismatchError):
        check_groebner_cert(replace(cert, s_pair_witnesses=()))


# -- non-membership ---------------------------------------------------------------------


def test_nonmembership_golden():
    cert = decide_membership(X0 + X1, [X0 + X1**2, X1**2])
    assert isinstance(cert, NonMembershipCert)
    assert cert.gb_cert.basis == (X0, X1**2)
    assert cert.remainder == X1
    assert check_nonmembership(cert).ok


def test_check_nonmembership_rejects_zero_remainder_claim():
    cert = decide_membership(X0 + X1, [X0 + X1**2, X1**2])
    tampered = replace(cert, remainder=Poly.zero(2))
    report = check_nonmembership(tampered)
    assert not report.ok
    assert any(c.name == "remainder_nonzero" for c in report.failures)


def test_check_nonmembership_rejects_fabricated_gb():
    # a non-Groebner "basis" with whatever witnesses division produces
    generators = (X0 + X1, X0 * X1 - 1)
    fake_basis = generators
    crit = is_groebner_basis(list(fake_basis))
    witnesses = tuple(PairWitness(w.i, w.j, w.quotients) for w in crit.witnesses)
    gb = GroebnerCert(fake_basis, generators, witnesses, gen_ideal_eq(list(fake_basis), list(generators)))
    cert = NonMembershipCert(
        target=X1**2,
        generators=generators,
        gb_cert=gb,
        remainder_quotients=(Poly.zero(2), Poly.zero(2)),
        remainder=X1**2,
    )
    report = check_nonmembership(cert)
    assert not report.ok
    assert any(c.name.startswith("gb.") for c in report.failures)


# -- radical membership ------------------------------------------------------------------


def test_gen_radical_member_golden():
    cert = gen_radical_member((X0 - X1) * (X0 + X1), [X0**2, X1**2])
    assert isinstance(cert, RadicalMemberCert)
    assert cert.exponent == 1
    assert cert.membership.cofactors == (Poly.one(2), -Poly.one(2))
    assert check_radical_member(cert).ok


def test_gen_radical_member_needs_square():
    cert = gen_radical_member(X0 * X1, [X0**2, X1**2])
    assert cert.exponent == 2
    assert cert.membership.cofactors == (X1**2, Poly.zero(2))
    assert check_radical_member(cert).ok


def test_gen_radical_member_of_literal_generator():
    cert = gen_radical_member(X0**2, [X0**2, X1**2])
    assert cert.exponent == 1
    assert cert.membership.cofactors == (Poly.one(2), Poly.zero(2))


def test_gen_radical_member_negative():
    assert isinstance(gen_radical_member(X0, [X1]), NotInRadical)


def test_gen_radical_member_budget():
    with pytest.raises(BudgetExceededError):
        gen_radical_member(X0, [X0**3], max_exp=2)
    cert = gen_radical_member(X0, [X0**3], max_exp=3)
    assert cert.exponent == 3


def test_check_radical_member_rejects_wrong_power():
    cert = gen_radical_member((X0 - X1) * (X0 + X1), [X0**2, X1**2])
    tampered = replace(cert, exponent=2)  # membership target still the first power
    report = check_radical_member(tampered)
    assert not report.ok
    assert any(c.name == "target_is_power" for c in report.failures)


def test_check_radical_member_rejects_exponent_zero():
    cert = gen_radical_member(X0**2, [X0**2])
    tampered = replace(cert, exponent=0)
    report = check_radical_member(tampered)
    assert not report.ok
    assert any(c.name == "exponent_positive" for c in report.failures)


# -- radical non-membership ----------------------------------------------------------------


def test_gen_radical_nonmember_golden():
    cert = gen_radical_nonmember(X0, [X0 + X1])
    inner = cert.extended_non_membership
    t = Poly.variable(3, 2)
    assert inner.generators == ((X0 + X1).lift(), 1 - t * X0.lift())
    assert inner.gb_cert.basis == ((X0 + X1).lift(), X1.lift() * t + 1)
    assert inner.remainder == Poly.one(3)
    assert check_radical_nonmember(cert).ok


def test_gen_radical_nonmember_zero_target_is_in_radical():
    assert isinstance(gen_radical_nonmember(Poly.zero(2), [X0]), InRadical)


def test_gen_radical_nonmember_power_generator_is_in_radical():
    assert isinstance(gen_radical_nonmember(X0, [X0**2]), InRadical)


def test_check_radical_nonmember_rejects_tampered_auxiliary():
    cert = gen_radical_nonmember(X0, [X0 + X1])
    t = Poly.variable(3, 2)
    wrong_aux = 1 - t * X1.lift()
    inner = replace(
        cert.extended_non_membership,
        generators=((X0 + X1).lift(), wrong_aux),
    )
    tampered = replace(cert, extended_non_membership=inner)
    report = check_radical_nonmember(tampered)
    assert not report.ok
    assert any(c.name == "extension_match" for c in report.failures)


def test_check_radical_nonmember_rejects_zeroed_inner_remainder():
    cert = gen_radical_nonmember(X0, [X0 + X1])
    inner = replace(cert.extended_non_membership, remainder=Poly.zero(3))
    tampered = replace(cert, extended_non_membership=inner)
    report = check_radical_nonmember(tampered)
    assert not report.ok
    assert any(c.name == "non_membership.remainder_nonzero" for c in report.failures)


# -- cross-cutting properties -----------------------------------------------------------------


def test_membership_dichotomy_random():
    rng = random.Random(404)
    for _ in range(60):
        nvars = rng.randint(1, 3)
        f = random_poly(rng, nvars)
        gens = random_poly_list(rng, nvars)
        result = gen_membership(f, gens)
        if isinstance(result, MembershipCert):
            assert check_membership(result).ok
        else:
            assert not result.remainder.is_zero
        decided = decide_membership(f, gens)
        assert isinstance(decided, MembershipCert) == isinstance(result, MembershipCert)


def test_radical_decisions_consistent():
    rng = random.Random(505)
    both = 0
    for _ in range(25):
        nvars = rng.randint(1, 2)
        f = random_poly(rng, nvars, max_terms=2, max_deg=2)
        gens = random_poly_list(rng, nvars, max_polys=2, max_deg=2)
        try:
            member = gen_radical_member(f, gens, max_exp=8)
        except BudgetExceededError:
            continue
        nonmember = gen_radical_nonmember(f, gens)
        positive = isinstance(member, RadicalMemberCert)
        negative = not isinstance(nonmember, InRadical)
        assert positive != negative
        both += 1
    assert both > 10


def test_radical_member_found_within_constructed_exponent():
    # f**k is literally a generator, so the search must succeed with n <= k
    rng = random.Random(606)
    for _ in range(15):
        nvars = rng.randint(1, 2)
        f = random_poly(rng, nvars, max_terms=2, max_deg=2, allow_zero=False)
        k = rng.randint(1, 3)
        gens = [f**k] + random_poly_list(rng, nvars, max_polys=1, max_deg=2)
        cert = gen_radical_member(f, gens, max_exp=8)
        assert isinstance(cert, RadicalMemberCert)
        assert cert.exponent <= k
        assert check_radical_member(cert).ok


def test_generated_certs_always_check():
    rng = random.Random(707)
    for _ in range(25):
        nvars = rng.randint(1, 3)
        gens = random_poly_list(rng, nvars)
        cert = gen_groebner_cert(gens)
        assert check_groebner_cert(cert).ok
        eq = gen_ideal_eq(gens, [g + g for g in gens])
        assert isinstance(eq, IdealEqCert) and check_ideal_eq(eq).ok


def test_extension_generators_shape():
    ext = extension_generators(X0, [X0 + X1, X1])
    assert len(ext) == 3
    assert all(p.nvars == 3 for p in ext)
    t = Poly.variable(3, 2)
    assert ext[-1] == 1 - t * X0.lift()
