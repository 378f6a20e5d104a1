"""Hecke coefficients: the b-sums and their closed forms, generator
normalizations, and the method bookkeeping."""

from fractions import Fraction

import pytest

from cusplab.errors import ConstraintError, TermBudgetExceeded, TrivialDeltaError
from cusplab.exactnum import CycNum, FourthRoot, RayClass, ray_equiv
from cusplab.hecke import (
    GeneratorPair,
    MethodState,
    QuadRelation,
    b0_coset_oracle,
    b0_gl1,
    b0_gl2n,
    b1_gl1,
    b1_gl2n_full,
    b1_gl2n_reduced,
    four_values,
    gl1_generator_norms,
    gl2n_generator_norms,
    gl2n_generator_norms_trivial_delta,
    reducibility_exponents,
    select_selfdual,
    twist_value,
)
from cusplab.residue import Fq, delta, gauss_sum, xi

F3, F5, F7 = Fq(3), Fq(5), Fq(7)
z3 = lambda k: CycNum.zeta_pow(3, k)


def brute_b1_gl1(field, a=1):
    """Independent term-by-term oracle for the b_1 sum."""
    total = CycNum.rational(field.p, 0)
    for u in field.units():
        s = delta(field, field.neg(u))
        for x in field.elements():
            e = field.mul(a, field.mul(field.inv(u), field.mul(x, x)))
            total = total + CycNum.zeta_pow(field.p, field.trace(e)) * s
    return total


def test_b1_gl1_frozen_and_oracle():
    v = b1_gl1(F3)
    assert v == (z3(1) - z3(2)) * (-2)  # the 6-term sum by hand
    assert v == brute_b1_gl1(F3)
    assert ray_equiv(v, gauss_sum(F3) * delta(F3, F3.neg(1)))
    # q=5: delta(-1) = +1, value 4 G
    w = b1_gl1(F5)
    assert w == gauss_sum(F5) * 4
    assert w == brute_b1_gl1(F5)


@pytest.mark.parametrize("q", [3, 5, 7, 11])
def test_gl1_closed_forms(q):
    F = Fq(q)
    G = gauss_sum(F)
    d = delta(F, F.neg(1))
    assert b1_gl1(F) == G * ((q - 1) * d)
    assert b0_gl1(F) == G * (q - 1)
    assert b0_gl1(F) == b1_gl1(F) * d
    assert ray_equiv(b0_gl1(F), G)


def test_b0_gl1_frozen():
    assert b0_gl1(F3) == (z3(1) - z3(2)) * 2


def test_gl1_generator_norms():
    # q=3: T1 = i, T0 = -i, product ray class 1
    pair = gl1_generator_norms(F3)
    assert pair.T1.fourth_root() == FourthRoot.i()
    assert pair.T0.fourth_root() == FourthRoot(3)
    assert (pair.T0 * pair.T1).fourth_root() == FourthRoot.one()
    # q=5: T1 = T0 = 1
    pair5 = gl1_generator_norms(F5)
    assert pair5.T1.fourth_root() == FourthRoot.one()
    assert pair5.T0.fourth_root() == FourthRoot.one()
    for q in (3, 5, 7, 11):
        p = gl1_generator_norms(Fq(q))
        assert (p.T0 * p.T1).fourth_root() == FourthRoot.one()
        assert (p.r0, p.r1) == (1, 1)


def test_b0_gl2n_values():
    # ray classes chi(-1) delta(-2)
    assert RayClass(b0_gl2n(F3, 1)) == RayClass(CycNum.rational(3, 1))
    assert RayClass(b0_gl2n(F5, 1)) == RayClass(CycNum.rational(5, -1))
    assert RayClass(b0_gl2n(F7, -1)) == RayClass(CycNum.rational(7, 1))
    for q in (3, 5, 7):
        F = Fq(q)
        for chi in (1, -1):
            d = delta(F, F.neg(F.from_int(2)))
            assert b0_gl2n(F, chi) == CycNum.rational(q, (q - 1) * chi * d)
    with pytest.raises(ConstraintError):
        b0_gl2n(F3, 0)


def brute_b1_gl2n(field, N, delta_kind, a=1):
    """Fully independent term-by-term enumeration of the 2N-variable sum."""
    from itertools import product

    p = field.p
    total = CycNum.rational(p, 0)
    n2 = 2 * N
    for d in product(field.elements(), repeat=n2):
        q1 = field.mul(d[n2 - 1], d[n2 - 1])
        q2 = field.mul(d[N - 1], d[N - 1])
        cross = 0
        for i in range(N - 1):
            cross = field.add(cross, field.mul(d[i], d[n2 - 2 - i]))
        for i in range(N):
            cross = field.sub(cross, field.mul(d[i], d[n2 - 1 - i]))
        qv = field.add(field.add(q1, q2), field.mul(field.from_int(2), cross))
        for z in field.units():
            s = delta(field, z) if delta_kind == "quadratic" else 1
            e = field.trace(field.mul(a, field.mul(field.inv(z), qv)))
            total = total + CycNum.zeta_pow(p, e) * s
    return total


@pytest.mark.parametrize("q,N", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_b1_gl2n_against_independent_oracle(q, N):
    F = Fq(q)
    for kind in ("quadratic", "trivial"):
        assert b1_gl2n_full(F, N, kind) == brute_b1_gl2n(F, N, kind)


def test_b1_gl2n_frozen_n1_q3():
    # 18-term sum: 6(z - z^2), ray class i
    v = b1_gl2n_full(F3, 1, "quadratic")
    assert v == (z3(1) - z3(2)) * 6
    assert RayClass(v).fourth_root() == FourthRoot.i()


def test_b1_gl2n_closed_forms():
    for q in (3, 5):
        F = Fq(q)
        G = gauss_sum(F)
        red = b1_gl2n_reduced(F)
        assert red == G * (q - 1)
        for N in (1, 2, 3):
            full = b1_gl2n_full(F, N, "quadratic")
            # the variable-elimination chain made exact: one factor q per
            # eliminated pair (d_i, d_{2N-i}) plus one for the final collapse
            assert full == red * (q**N)
            assert full == G * (q**N * (q - 1))
            assert ray_equiv(full, G)
            assert b1_gl2n_full(F, N, "trivial").is_zero()


def test_b1_budget_guard():
    with pytest.raises(TermBudgetExceeded):
        b1_gl2n_full(F7, 3, "quadratic", term_budget=10**4)
    with pytest.raises(ConstraintError):
        b1_gl2n_full(F3, 1, "cubic")


def test_gl2n_generator_norms():
    # q=3: T0 = chi(-1) (delta(-2) = delta(1) = +1), T1 = xi^-1 = -i
    pair = gl2n_generator_norms(F3, 2, 1)
    assert pair.T0.fourth_root() == FourthRoot.one()
    assert pair.T1.fourth_root() == FourthRoot(3)
    pair_m = gl2n_generator_norms(F3, 2, -1)
    assert pair_m.T0.fourth_root() == FourthRoot(2)
    # q=5: T1 = 1
    assert gl2n_generator_norms(F5, 1, 1).T1.fourth_root() == FourthRoot.one()
    # product w0 w1 value: chi(-1) delta(-2) xi^-1
    for q in (3, 5, 7):
        F = Fq(q)
        for chi in (1, -1):
            pr = gl2n_generator_norms(F, 2, chi)
            want = FourthRoot.from_sign(chi * delta(F, F.neg(F.from_int(2)))) * xi(F).inv()
            assert (pr.T0 * pr.T1).fourth_root() == want
    with pytest.raises(TrivialDeltaError):
        gl2n_generator_norms_trivial_delta(F3, 2)


def test_quad_relation():
    r = QuadRelation(3, 1)
    assert r.b == 2 and r.c == 3
    assert r.roots == (3, -1)
    assert r.root_quotient == -3
    assert QuadRelation(5, 0).b == 0  # degenerate branch
    with pytest.raises(ConstraintError):
        QuadRelation(3, -1)


def test_four_values_and_exponents():
    assert four_values(1, 1, 3) == (
        Fraction(1),
        Fraction(-3),
        Fraction(-3),
        Fraction(9),
    )
    assert reducibility_exponents(1, 1, 1) == (Fraction(1), Fraction(0))
    assert reducibility_exponents(1, 0, 1) == (Fraction(1, 2), Fraction(1, 2))
    sa, sb = reducibility_exponents(2, 1, 1)
    assert sa >= sb
    with pytest.raises(ConstraintError):
        reducibility_exponents(1, 1, 0)


def test_select_selfdual():
    pair = gl2n_generator_norms(F3, 2, 1)
    sel = select_selfdual(pair)
    assert not sel.degenerate
    assert sel.lambda_a.fourth_root() == FourthRoot(3)  # chi(-1) delta(-2) xi^-1
    assert sel.lambda_b.fourth_root() == FourthRoot.i()
    degenerate = GeneratorPair(T0=pair.T0, T1=pair.T1, r0=1, r1=0)
    assert select_selfdual(degenerate).degenerate
    # rescaling by positive rationals leaves the selection unchanged
    scaled = GeneratorPair(
        T0=RayClass(pair.T0.rep * Fraction(7, 3)),
        T1=RayClass(pair.T1.rep * 11),
        r0=1,
        r1=1,
    )
    assert select_selfdual(scaled).lambda_a == sel.lambda_a


def test_twist_value():
    G = gauss_sum(F5)
    zeta = RayClass(G)
    assert twist_value(zeta, CycNum.rational(5, 1)) == zeta
    flipped = twist_value(zeta, CycNum.rational(5, -1))
    assert twist_value(flipped, CycNum.rational(5, -1)) == zeta
    # composition of twists = twist by the product
    u1 = CycNum.rational(5, 2)
    u2 = CycNum.rational(5, Fraction(3, 7))
    lhs = twist_value(twist_value(zeta, u1), u2)
    rhs = twist_value(zeta, u1 * u2)
    assert lhs == rhs
    state = MethodState(zeta)
    assert state.twisted(u1).psi_norm == RayClass(G * u1.inv())
    with pytest.raises(ConstraintError):
        twist_value(zeta, CycNum.rational(5, 0))


def test_b0_coset_oracle():
    for chi in (1, -1):
        out = b0_coset_oracle(F3, 1, chi)
        fibres = set(out["fibres"].values())
        assert len(fibres) == 1  # constant fibre over admissible (a, u)
        assert set(out["fibres"]) == {(1, 1), (1, 2)}  # 2a + u^2 = 0 mod 3
        for (a, u), val in out["values"]:
            assert val == CycNum.rational(3, delta(F3, a) * chi)
        f = fibres.pop()
        assert out["total"] == b0_gl2n(F3, chi) * f
