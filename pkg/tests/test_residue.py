"""Residue fields, the quadratic character, Zolotarev signatures, additive
characters and Gauss sums."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cusplab.errors import ZeroInput
from cusplab.exactnum import CycNum, FourthRoot, abs_squared
from cusplab.residue import Fq, delta, gauss_sum, psi, xi, zolotarev

F9 = Fq(3, (1, 0, 1))  # x^2 + 1, irreducible since -1 is not a square mod 3
PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)


def test_field_construction_rejects_bad_inputs():
    with pytest.raises(ValueError):
        Fq(4)
    with pytest.raises(ValueError):
        Fq(2)
    with pytest.raises(ValueError):
        Fq(3, (2, 0, 1))  # x^2 + 2 = (x-1)(x+1) mod 3
    with pytest.raises(ValueError):
        Fq(5, (1, 0, 0, 1))  # x^3 + 1 = (x+1)(x^2-x+1) mod 5


@pytest.mark.parametrize("field", [Fq(5), Fq(7), F9])
def test_field_axioms_exhaustive(field):
    q = field.q
    for x in field.elements():
        assert field.pow(x, q) == x  # x^q = x
        assert field.add(x, field.neg(x)) == 0
        if x:
            assert field.mul(x, field.inv(x)) == 1
    for x in list(field.elements())[:6]:
        for y in list(field.elements())[:6]:
            assert field.add(x, y) == field.add(y, x)
            assert field.mul(x, y) == field.mul(y, x)
            for w in list(field.elements())[:6]:
                lhs = field.mul(x, field.add(y, w))
                rhs = field.add(field.mul(x, y), field.mul(x, w))
                assert lhs == rhs


def test_delta_examples():
    assert delta(Fq(7), 3) == -1  # squares mod 7 are {1, 2, 4}
    assert delta(Fq(5), 4) == 1
    assert delta(Fq(5), 1) == 1
    with pytest.raises(ZeroInput):
        delta(Fq(5), 0)


@pytest.mark.parametrize("field", [Fq(5), Fq(7), Fq(11), F9])
def test_delta_multiplicative_and_counts(field):
    units = list(field.units())
    squares = {field.mul(x, x) for x in units}
    for x in units:
        assert delta(field, x) == (1 if x in squares else -1)
        for y in units[:8]:
            assert delta(field, field.mul(x, y)) == delta(field, x) * delta(field, y)
    assert sum(delta(field, x) for x in units) == 0


def test_zolotarev_examples():
    # q=5, x=2: the 4-cycle (1 2 4 3) fixing 0
    assert zolotarev(Fq(5), 2) == -1
    assert zolotarev(Fq(5), 1) == 1
    assert zolotarev(Fq(7), 2) == 1  # 2 is a square mod 7
    with pytest.raises(ZeroInput):
        zolotarev(Fq(5), 0)


def test_zolotarev_equals_delta_everywhere():
    fields = [Fq(p) for p in PRIMES] + [F9, Fq(5, (3, 0, 1))]  # also F_25: x^2+3
    for field in fields:
        for x in field.units():
            assert zolotarev(field, x) == delta(field, x)


def test_psi_examples():
    F3 = Fq(3)
    assert psi(F3, 0) == CycNum.rational(3, 1)
    assert psi(F3, 1) == CycNum.zeta_pow(3, 1)
    # twisted character: psi^a(x) = zeta^(a x) at the prime field
    assert psi(F3, 1, a=2) == CycNum.zeta_pow(3, 2)


def test_psi_additivity_exhaustive_q9():
    for x in F9.elements():
        for y in F9.elements():
            assert psi(F9, F9.add(x, y)) == psi(F9, x) * psi(F9, y)


def test_trace_properties_q9():
    # additive, Frobenius-invariant, surjective onto F_3
    seen = set()
    for x in F9.elements():
        t = F9.trace(x)
        seen.add(t)
        assert F9.trace(F9.frobenius(x)) == t
        for y in F9.elements():
            assert F9.trace(F9.add(x, y)) == (t + F9.trace(y)) % 3
    assert seen == {0, 1, 2}


def test_gauss_sum_examples():
    F3 = Fq(3)
    assert gauss_sum(F3) == CycNum.zeta_pow(3, 1) - CycNum.zeta_pow(3, 2)
    for q in (3, 5, 7, 11):
        F = Fq(q)
        assert abs_squared(gauss_sum(F)) == q
    # substitution u -> a^-1 u
    for q in (3, 5, 7):
        F = Fq(q)
        G = gauss_sum(F)
        for a in F.units():
            assert gauss_sum(F, a) == G * delta(F, a)


def test_gauss_sum_extension_field():
    # Davenport-Hasse: G(F_9) = -G(F_3)^2 = 3
    assert gauss_sum(F9) == CycNum.rational(3, 3)
    assert xi(F9) == FourthRoot.one()


def test_xi_values_and_square():
    expected = {3: "i", 5: "1", 7: "i", 11: "i", 13: "1"}
    for q, want in expected.items():
        F = Fq(q)
        x = xi(F)
        assert str(x) == want
        assert x.square_sign() == (-1 if (q - 1) // 2 % 2 else 1)


@given(st.sampled_from([3, 5, 7]), st.integers(0, 6), st.integers(0, 6))
@settings(max_examples=40, deadline=None)
def test_psi_homomorphism(q, a, b):
    F = Fq(q)
    x, y = a % q, b % q
    assert psi(F, F.add(x, y)) == psi(F, x) * psi(F, y)


def test_orthogonality():
    for q in (3, 5, 7):
        F = Fq(q)
        for u in F.elements():
            total = CycNum.rational(q, 0)
            for x in F.elements():
                total = total + psi(F, F.mul(u, x))
            if u == 0:
                assert total == CycNum.rational(q, q)
            else:
                assert total.is_zero()


def test_quadratic_completion_identity():
    # sum over x of psi(u x^2) = delta(u) G for u != 0
    for q in (3, 5, 7):
        F = Fq(q)
        G = gauss_sum(F)
        for u in F.units():
            total = CycNum.rational(q, 0)
            for x in F.elements():
                total = total + psi(F, F.mul(u, F.mul(x, x)))
            assert total == G * delta(F, u)
