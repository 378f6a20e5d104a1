"""Symplectic matrices: forms and adjoints, beta, congruence subgroups,
psi_beta, the decomposition solvers and the corner-block relations."""

import random

import pytest

from cusplab.errors import ConstraintError, PrecisionError, SingularToPrecision
from cusplab.exactnum import CycNum
from cusplab.lattices import order_filtration, pairing_h, pairing_hX, standard_chain_2N
from cusplab.localfield import LSeries
from cusplab.residue import Fq, psi
from cusplab.sympgroups import (
    MatLS,
    adjoint_gl,
    adjoint_sp,
    beta_matrix,
    beta_monomial,
    block_matrix,
    conj_diag_by_beta,
    coordinate_rep,
    diag_trace_forms,
    diag_trace_forms_closed,
    gamma_membership,
    gl1_lower_element,
    gl1_relations,
    gl1_upper_element,
    in_filtration,
    inf_product_full,
    is_in_group,
    is_symplectic,
    monomial_to_matls,
    psi_beta,
    random_I1_element,
    random_series,
    random_solver_instance,
    reconstruct_inf_blocks,
    reconstruct_sup_blocks,
    solve_inf,
    solve_sup,
    sup_product_full,
    tau_column,
    upper_unipotent_X,
    weyl_gl1,
    weyl_gl1_monomials,
    weyl_gl2n,
    weyl_gl2n_monomials,
)

F3, F5 = Fq(3), Fq(5)


def rand_mat(rng, field, n, prec=16, depth=1):
    return MatLS(
        field,
        [[random_series(rng, field, prec, depth=depth) for _ in range(n)] for _ in range(n)],
    )


# -- adjoints ------------------------------------------------------------------


def test_adjoint_gl_antitranspose():
    M = MatLS.from_consts(F5, [[1, 2], [3, 4]])
    A = adjoint_gl(M)
    assert A.e[0][0].residue_at(0) == 4
    assert A.e[1][1].residue_at(0) == 1
    assert A.e[0][1].residue_at(0) == 2
    assert A.e[1][0].residue_at(0) == 3


@pytest.mark.parametrize("N", [1, 2])
def test_adjoint_involution_and_form_identity(N):
    rng = random.Random(9)
    n2 = 2 * N
    pairing = pairing_h(n2)
    gram = [[0] * n2 for _ in range(n2)]
    for i in range(n2):
        gram[i][pairing.sigma[i]] = pairing.signs[i]
    S = MatLS.from_consts(F5, gram)
    for _ in range(12):
        M = rand_mat(rng, F5, n2)
        A = adjoint_sp(M, pairing)
        assert adjoint_sp(A, pairing) == M
        # h(Mx, y) = h(x, aM y): S-based identity M^T S = S aM
        assert (M.transpose() @ S) == (S @ A)
    # block formula for the paper's upper-unipotent A-rule on X
    hX = pairing_hX(N)
    X12, X13, X23 = (rand_mat(rng, F5, n2) for _ in range(3))
    U = upper_unipotent_X(F5, X12, X13, X23)
    AU = adjoint_sp(U, hX)
    aY = adjoint_sp(X23, pairing)
    aZ = adjoint_sp(X13, pairing)
    aX = adjoint_sp(X12, pairing)
    assert AU == upper_unipotent_X(F5, aY, aZ, aX)


def test_adjoint_of_identity():
    ident = MatLS.identity(F5, 4, 12)
    assert adjoint_sp(ident, pairing_h(4)) == ident


# -- beta ------------------------------------------------------------------------


@pytest.mark.parametrize("N", [1, 2, 3])
def test_beta_identities(N):
    n2 = 2 * N
    lam = standard_chain_2N(N)
    pairing = pairing_h(n2)
    for F in (F3, F5):
        b = beta_matrix(N, F)
        assert adjoint_sp(b, pairing) == -b
        acc = MatLS.identity(F, n2, b.min_prec())
        for _ in range(n2):
            acc = acc @ b
        sign = 1 if N % 2 == 0 else -1
        tinv = LSeries(F, -1, (sign % F.q,), b.min_prec() - 1)
        want = MatLS.identity(F, n2, b.min_prec() - 1).scale(tinv)
        assert acc == want
        from cusplab.lattices import val_wrt

        assert val_wrt(lam, b.val_matrix()) == -2


def test_beta_n1_matrix():
    b = beta_matrix(1, F5)
    assert b.e[0][1].val() == -1 and b.e[0][1].leading_coeff() == 1
    assert b.e[1][0].residue_at(0) == F5.neg(1)
    sq = b @ b
    assert sq.e[0][0].val() == -1 and sq.e[0][0].leading_coeff() == F5.neg(1)


# -- membership and psi_beta -------------------------------------------------------


def test_is_in_group_examples():
    N = 2
    lam = standard_chain_2N(N)
    pairing = pairing_h(4)
    ident = MatLS.identity(F5, 4, 16)
    assert is_in_group(ident, pairing, 2, lam)
    x = coordinate_rep(0, 3, N, F5)
    assert is_in_group(x, pairing, 1, lam)
    assert not is_in_group(x.scale_const(2), pairing, 1, lam)  # not symplectic
    # GL-level: 1 + u E_12 is in 1 + A_1 but is not symplectic
    y = MatLS.identity(F5, 4, 16)
    y.e[0][1] = LSeries.one(F5, 16)
    assert in_filtration(y - ident, lam, 1)
    assert not is_symplectic(y, pairing)


def test_in_filtration_precision_guard():
    lam = standard_chain_2N(1)
    M = MatLS.zeros(F5, 2, 2, 0)  # knows nothing beyond O(t^0)
    with pytest.raises(PrecisionError):
        in_filtration(M, lam, 1)


def test_psi_beta_values_and_triviality():
    rng = random.Random(4)
    for N in (1, 2):
        for F in (F3, F5):
            ident = MatLS.identity(F, 2 * N, 16)
            assert psi_beta(ident, N) == CycNum.rational(F.p, 1)
            # trivial on I(2): Cayley elements built from A_3
            lam = standard_chain_2N(N)
            bounds = order_filtration(lam, 3).bounds
            for _ in range(5):
                entries = []
                for i in range(2 * N):
                    row = []
                    for j in range(2 * N):
                        c = rng.randrange(F.q)
                        row.append(
                            LSeries.from_pairs(F, [(bounds[i][j], c)], 16)
                        )
                    entries.append(row)
                B = MatLS(F, entries)
                A = B - adjoint_sp(B, pairing_h(2 * N))
                half = F.inv(F.from_int(2))
                x = (ident + A.scale_const(half)) @ (ident - A.scale_const(half)).inv()
                assert is_in_group(x, pairing_h(2 * N), 2, lam)
                assert psi_beta(x, N) == CycNum.rational(F.p, 1)
                # multiplying any I(1) element by an I(2) element fixes the value
                y = random_I1_element(rng, N, F, prec=16)
                assert psi_beta(y @ x, N) == psi_beta(y, N)


def test_psi_beta_membership_error():
    with pytest.raises(ConstraintError):
        psi_beta(MatLS.from_consts(F5, [[2, 0], [0, 3]], 12), 1)


def test_psi_beta_character_seeded():
    rng = random.Random(10)
    for N in (1, 2):
        for _ in range(25):
            x = random_I1_element(rng, N, F5, prec=16)
            y = random_I1_element(rng, N, F5, prec=16)
            assert psi_beta(x @ y, N) == psi_beta(x, N) * psi_beta(y, N)


# -- Weyl elements ------------------------------------------------------------------


@pytest.mark.parametrize("N", [1, 2])
def test_weyl_gl1(N):
    t0, t1 = weyl_gl1(N, F5)
    nn = 2 * N + 2
    pairing = pairing_h(nn)
    assert is_symplectic(t0, pairing)
    assert is_symplectic(t1, pairing)
    prod = (weyl_gl1_monomials(N)[0] * weyl_gl1_monomials(N)[1])
    assert prod.vals == (1,) + (0,) * (nn - 2) + (-1,)
    assert prod.perm == tuple(range(nn)) and prod.signs == (1,) * nn


@pytest.mark.parametrize("N", [1, 2])
def test_weyl_gl2n(N):
    w0, w1 = weyl_gl2n(N, F3)
    pairing = pairing_hX(N)
    assert is_symplectic(w0, pairing)
    assert is_symplectic(w1, pairing)
    w0m, w1m = weyl_gl2n_monomials(N)
    prod = w0m * w1m
    bm = beta_monomial(N)
    bi = bm.inv()
    n2 = 2 * N
    for j in range(n2):
        assert prod.perm[j] == bi.perm[j]
        assert prod.vals[j] == bi.vals[j]
        assert prod.signs[j] == -bi.signs[j]


# -- solvers -------------------------------------------------------------------------


def test_solve_inf_zero_D():
    # D = 0, Z = diag(1, -1): m = Z, g = I, E_i = Z^-1
    Z = MatLS.diag(F5, [1, F5.neg(1)], 16)
    D = MatLS.zeros(F5, 2, 2, 16)
    pairing = pairing_h(2)
    sol = solve_inf(D, Z, pairing)
    ident = MatLS.identity(F5, 2, 16)
    assert sol["m"] == Z
    assert sol["g"] == ident
    assert sol["E1"] == Z.inv() and sol["E2"] == Z.inv()
    assert sol["B2"].is_zero() and sol["F1"].is_zero()
    assert reconstruct_inf_blocks(sol, D, Z, pairing)
    sol2 = solve_sup(D, Z, pairing, 1)
    assert sol2["g"] == ident
    assert reconstruct_sup_blocks(sol2, D, Z, pairing, 1)


def test_solver_preconditions():
    pairing = pairing_h(2)
    D = MatLS.zeros(F5, 2, 2, 16)
    bad_Z = MatLS.from_consts(F5, [[1, 0], [0, 1]], 16)  # Z + aZ != 0
    with pytest.raises(ConstraintError):
        solve_inf(D, bad_Z, pairing)
    sing = MatLS.zeros(F5, 2, 2, 16)
    with pytest.raises((SingularToPrecision, ConstraintError)):
        solve_inf(D, sing, pairing)


def test_solver_seeded_roundtrip():
    rng = random.Random(42)
    for N, F in ((1, F3), (1, F5), (2, F3), (2, F5)):
        pairing = pairing_h(2 * N)
        for k in range(20):
            D, Z = random_solver_instance(rng, N, F, prec=16)
            sol = solve_inf(D, Z, pairing)
            assert reconstruct_inf_blocks(sol, D, Z, pairing)
            assert is_symplectic(sol["g"], pairing)
            sol2 = solve_sup(D, Z, pairing, N)
            assert reconstruct_sup_blocks(sol2, D, Z, pairing, N)
            assert is_symplectic(sol2["g"], pairing)
            if k < 2:
                assert inf_product_full(sol, D, Z, pairing, N)
                assert sup_product_full(sol2, D, Z, pairing, N)
            try:
                Di = D.inv()
            except SingularToPrecision:
                continue
            alt = -(D @ Z.inv() @ adjoint_sp(Z, pairing) @ Di)
            assert sol["g"] == alt and sol2["g"] == alt


# -- corner blocks (GL(1) case) ---------------------------------------------------------


def test_tau_column_and_relations():
    B = MatLS.from_consts(F5, [[1, 2, 3, 4]], 16)
    C = tau_column(B)
    # c_i = b_{2N-i+1} for i <= N, -b_{2N-i+1} for i > N (1-indexed)
    vals = [C.e[i][0].residue_at(0) for i in range(4)]
    assert vals == [4, 3, F5.neg(2), F5.neg(1)]
    assert gl1_relations(B, C)
    assert not gl1_relations(B, -C)
    assert (B @ C).is_zero()


@pytest.mark.parametrize("N", [1, 2])
def test_gl1_relations_iff_symplectic(N):
    rng = random.Random(11)
    n2 = 2 * N
    pairing = pairing_h(n2 + 2)
    for k in range(40):
        B = MatLS(F5, [[random_series(rng, F5, 16, depth=1) for _ in range(n2)]])
        if k % 2 == 0:
            C = tau_column(B)
        else:
            C = MatLS(F5, [[random_series(rng, F5, 16, depth=1)] for _ in range(n2)])
        z = random_series(rng, F5, 16, depth=1)
        g = gl1_upper_element(z, B, C)
        assert is_symplectic(g, pairing) == gl1_relations(B, C)


def test_gamma_membership_examples():
    N = 2
    n2 = 4
    prec = 16
    zero_B = MatLS.zeros(F5, 1, n2, prec)
    zero_C = MatLS.zeros(F5, n2, 1, prec)
    z = LSeries.t_power(F5, -1, prec)  # t^-1, u = 1
    assert gamma_membership("upper", z=z, B=zero_B, C=zero_C)
    # z must have valuation exactly -1
    assert not gamma_membership("upper", z=LSeries.one(F5, prec), B=zero_B, C=zero_C)
    # B must be integral
    badB = MatLS(F5, [[LSeries.t_power(F5, -1, prec)] + [LSeries.zero(F5, prec)] * 3])
    assert not gamma_membership("upper", z=z, B=badB, C=tau_column(badB))
    # lower case: u unit, H in p^N x o^N, D = -H^tau
    H = MatLS.from_consts(F5, [[0, 0, 1, 2]], prec)
    Hp = MatLS(
        F5,
        [
            [
                LSeries.zero(F5, prec),
                LSeries.t_power(F5, 1, prec),
                LSeries.one(F5, prec),
                LSeries.constant(F5, 2, prec),
            ]
        ],
    )
    D = -tau_column(Hp)
    assert gamma_membership("lower", u=LSeries.one(F5, prec), D=D, H=Hp)
    assert not gamma_membership("lower", u=LSeries.t_power(F5, 1, prec), D=D, H=Hp)
    badH = MatLS.from_consts(F5, [[1, 0, 1, 2]], prec)  # first entry a unit
    assert not gamma_membership("lower", u=LSeries.one(F5, prec), D=-tau_column(badH), H=badH)
    with pytest.raises(ValueError):
        gamma_membership("sideways")


def test_exclusion_argument_sample():
    """A deep entry of valuation -1 among the last slots of B makes t C B
    leave A_0: with x_2N deep, the entry pairing c_1 = x_2N against x_2N
    itself has valuation -1 after the t-scaling."""
    N = 3
    n2 = 6
    lam = standard_chain_2N(N)
    rng = random.Random(13)
    for _ in range(10):
        entries = [LSeries.constant(F5, rng.randrange(5), 16) for _ in range(n2)]
        entries[n2 - 1] = LSeries(F5, -1, (rng.randrange(1, 5),), 16)  # val -1 allowed slot
        B = MatLS(F5, [entries])
        C = tau_column(B)
        prod = (C @ B).scale(LSeries.t_power(F5, 1, 16))
        assert not in_filtration(prod, lam, 0)
        assert prod.e[0][n2 - 1].val_or_none() == -1
        # integral B stays inside: t C B lands in A_1
        entries[n2 - 1] = LSeries.constant(F5, rng.randrange(5), 16)
        B2 = MatLS(F5, [entries])
        prod2 = (tau_column(B2) @ B2).scale(LSeries.t_power(F5, 1, 16))
        assert in_filtration(prod2, lam, 1)


# -- trace identities -----------------------------------------------------------------


def test_trace_identities_and_shift():
    rng = random.Random(17)
    for N in (1, 2, 3):
        for F in (F3, F5):
            for _ in range(30):
                d = [rng.randrange(F.q) for _ in range(2 * N)]
                assert diag_trace_forms(F, d, N) == diag_trace_forms_closed(F, d, N)
                assert conj_diag_by_beta(F, d, N) == (d[-1],) + tuple(d[:-1])


def test_block_matrix_shapes():
    a = MatLS.identity(F5, 2, 8)
    z = MatLS.zeros(F5, 2, 2, 8)
    M = block_matrix([[a, z], [z, a]])
    assert M.rows == M.cols == 4
    assert M == MatLS.identity(F5, 4, 8)
