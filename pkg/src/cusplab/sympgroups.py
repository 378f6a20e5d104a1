"""Matrices over the local field, symplectic forms and adjoints, the element
beta and its character psi_beta, Weyl representatives, and the exact solvers
for the Iwahori-decomposition equations of the two Hecke-coefficient
computations.
"""

from __future__ import annotations

from .errors import (
    ConstraintError,
    PrecisionError,
    ShapeError,
    SingularToPrecision,
    ZeroInput,
)
from .exactnum import CycNum
from .lattices import LatticeSeq, Monomial, Pairing, order_filtration, pairing_h, standard_chain_2N
from .localfield import DEFAULT_PREC, LSeries
from .residue import Fq, psi


class MatLS:
    """A rectangular matrix of truncated Laurent series over a common F_q."""

    __slots__ = ("field", "rows", "cols", "e")

    def __init__(self, field: Fq, entries):
        self.field = field
        self.e = [list(row) for row in entries]
        self.rows = len(self.e)
        self.cols = len(self.e[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.e):
            raise ShapeError("ragged matrix")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, field: Fq, rows: int, cols: int, prec: int = DEFAULT_PREC) -> "MatLS":
        z = LSeries.zero(field, prec)
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Fq, n: int, prec: int = DEFAULT_PREC) -> "MatLS":
        z = LSeries.zero(field, prec)
        one = LSeries.one(field, prec)
        return cls(field, [[one if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, field: Fq, values, prec: int = DEFAULT_PREC) -> "MatLS":
        """Diagonal matrix from residue-field constants."""
        n = len(values)
        z = LSeries.zero(field, prec)
        return cls(
            field,
            [
                [LSeries.constant(field, values[i], prec) if i == j else z for j in range(n)]
                for i in range(n)
            ],
        )

    @classmethod
    def from_consts(cls, field: Fq, rows, prec: int = DEFAULT_PREC) -> "MatLS":
        return cls(
            field,
            [[LSeries.constant(field, c, prec) for c in row] for row in rows],
        )

    def copy(self) -> "MatLS":
        return MatLS(self.field, self.e)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.e[i][j]

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "MatLS":
        return MatLS(self.field, [row[c0:c1] for row in self.e[r0:r1]])

    # -- arithmetic -------------------------------------------------------------

    def _shape_check(self, other: "MatLS", same: bool = True) -> None:
        if same and (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix shapes differ")

    def __add__(self, other: "MatLS") -> "MatLS":
        self._shape_check(other)
        return MatLS(
            self.field,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.e, other.e)
            ],
        )

    def __sub__(self, other: "MatLS") -> "MatLS":
        self._shape_check(other)
        return MatLS(
            self.field,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.e, other.e)
            ],
        )

    def __neg__(self) -> "MatLS":
        return MatLS(self.field, [[-a for a in row] for row in self.e])

    def __matmul__(self, other: "MatLS") -> "MatLS":
        if self.cols != other.rows:
            raise ShapeError("matmul shape mismatch")
        oT = list(zip(*other.e))
        out = []
        for row in self.e:
            orow = []
            for col in oT:
                acc = None
                for a, b in zip(row, col):
                    term = a * b
                    acc = term if acc is None else acc + term
                orow.append(acc)
            out.append(orow)
        return MatLS(self.field, out)

    def scale(self, s: LSeries) -> "MatLS":
        return MatLS(self.field, [[a * s for a in row] for row in self.e])

    def scale_const(self, c: int) -> "MatLS":
        return MatLS(self.field, [[a.scale(c) for a in row] for row in self.e])

    def trace(self) -> LSeries:
        if self.rows != self.cols:
            raise ShapeError("trace of a nonsquare matrix")
        acc = self.e[0][0]
        for i in range(1, self.rows):
            acc = acc + self.e[i][i]
        return acc

    def transpose(self) -> "MatLS":
        return MatLS(self.field, [list(row) for row in zip(*self.e)])

    def inv(self) -> "MatLS":
        """Gauss-Jordan inverse with minimal-valuation pivoting."""
        if self.rows != self.cols:
            raise ShapeError("inverting a nonsquare matrix")
        n = self.rows
        prec = min(a.prec for row in self.e for a in row)
        a = [[x for x in row] for row in self.e]
        b = [list(MatLS.identity(self.field, n, prec).e[i]) for i in range(n)]
        for col in range(n):
            pivot, pval = None, None
            for r in range(col, n):
                v = a[r][col].val_or_none()
                if v is not None and (pval is None or v < pval):
                    pivot, pval = r, v
            if pivot is None:
                raise SingularToPrecision(f"no pivot in column {col}")
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
            pinv = a[col][col].inv()
            a[col] = [x * pinv for x in a[col]]
            b[col] = [x * pinv for x in b[col]]
            for r in range(n):
                if r == col:
                    continue
                f = a[r][col]
                if f.is_zero():
                    continue
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = [x - f * y for x, y in zip(b[r], b[col])]
        return MatLS(self.field, b)

    # -- predicates --------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.e for a in row)

    def __eq__(self, other):
        if not isinstance(other, MatLS):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def val_matrix(self):
        """Entry valuations; None marks zero-to-precision entries."""
        return tuple(tuple(a.val_or_none() for a in row) for row in self.e)

    def prec_matrix(self):
        return tuple(tuple(a.prec for a in row) for row in self.e)

    def min_prec(self) -> int:
        return min(a.prec for row in self.e for a in row)

    def __repr__(self):
        body = "\n".join("  [" + ", ".join(map(str, row)) + "]" for row in self.e)
        return f"MatLS({self.rows}x{self.cols} over {self.field}:\n{body})"


def block_matrix(blocks) -> MatLS:
    """Assemble a matrix from a 2D grid of MatLS blocks."""
    field = blocks[0][0].field
    rows = []
    for brow in blocks:
        height = brow[0].rows
        if any(b.rows != height for b in brow):
            raise ShapeError("inconsistent block heights")
        for i in range(height):
            rows.append(sum((b.e[i] for b in brow), []))
    return MatLS(field, rows)


def monomial_to_matls(m: Monomial, field: Fq, prec: int = DEFAULT_PREC) -> MatLS:
    out = MatLS.zeros(field, m.n, m.n, prec)
    for j in range(m.n):
        c = 1 if m.signs[j] == 1 else field.neg(1)
        out.e[m.perm[j]][j] = LSeries(field, m.vals[j], (c,), prec + m.vals[j])
    return MatLS(field, out.e)


# -- adjoints ----------------------------------------------------------------


def adjoint_gl(M: MatLS) -> MatLS:
    """Anti-transpose: reflection in the antidiagonal."""
    n = M.rows
    if n != M.cols:
        raise ShapeError("anti-transpose of a nonsquare matrix")
    return MatLS(
        M.field,
        [[M.e[n - 1 - j][n - 1 - i] for j in range(n)] for i in range(n)],
    )


def adjoint_sp(M: MatLS, pairing: Pairing) -> MatLS:
    """The form adjoint: h(Mx, y) = h(x, adjoint(M) y).

    Only monomial Gram matrices with g = 0 occur; then the adjoint permutes
    and resigns entries, no series arithmetic needed.
    """
    if any(pairing.g):
        raise ShapeError("adjoint implemented for unit monomial pairings only")
    n = M.rows
    if n != M.cols or n != pairing.n:
        raise ShapeError("adjoint dimension mismatch")
    sigma = pairing.sigma
    s = pairing.signs
    out = []
    for i in range(n):
        row = []
        si = s[sigma[i]]
        for j in range(n):
            entry = M.e[sigma[j]][sigma[i]]
            if s[sigma[j]] * si < 0:
                entry = -entry
            row.append(entry)
        out.append(row)
    return MatLS(M.field, out)


def is_symplectic(M: MatLS, pairing: Pairing) -> bool:
    """Form preservation to precision: adjoint(M) @ M == I."""
    n = M.rows
    ident = MatLS.identity(M.field, n, M.min_prec())
    return (adjoint_sp(M, pairing) @ M) == ident


# -- beta and Weyl representatives ------------------------------------------


def beta_monomial(N: int) -> Monomial:
    """The element beta: e_j -> -e_{j+1} (j <= N), +e_{j+1} (j > N), and
    e_2N -> t^{-1} e_1; satisfies beta^2N = (-1)^N t^{-1}."""
    n2 = 2 * N
    perm = [0] * n2
    vals = [0] * n2
    signs = [1] * n2
    for j in range(n2 - 1):
        perm[j] = j + 1
        signs[j] = -1 if j < N else 1
    perm[n2 - 1] = 0
    vals[n2 - 1] = -1
    return Monomial(tuple(perm), tuple(vals), tuple(signs))


def beta_matrix(N: int, field: Fq, prec: int = DEFAULT_PREC) -> MatLS:
    return monomial_to_matls(beta_monomial(N), field, prec)


def beta_X_monomial(N: int) -> Monomial:
    """beta acting diagonally on X = W + V + W*."""
    b = beta_monomial(N)
    n2 = 2 * N
    perm, vals, signs = [], [], []
    for blk in range(3):
        off = blk * n2
        perm.extend(off + p for p in b.perm)
        vals.extend(b.vals)
        signs.extend(b.signs)
    return Monomial(tuple(perm), tuple(vals), tuple(signs))


def weyl_gl1_monomials(N: int) -> tuple[Monomial, Monomial]:
    """t_0 and t_1 in Sp(2N+2), with t_0 t_1 = diag(t, I, t^-1)."""
    n = 2 * N + 2
    last = n - 1
    perm = list(range(n))
    vals = [0] * n
    signs = [1] * n
    perm[0], perm[last] = last, 0
    signs[0] = -1  # t_0 e_0 = -e_last, t_0 e_last = e_0
    t0 = Monomial(tuple(perm), tuple(vals), tuple(signs))
    perm = list(range(n))
    vals = [0] * n
    signs = [1] * n
    perm[0], perm[last] = last, 0
    vals[0], vals[last] = 1, -1
    signs[last] = -1  # t_1 e_0 = t e_last, t_1 e_last = -t^-1 e_0
    t1 = Monomial(tuple(perm), tuple(vals), tuple(signs))
    return t0, t1


def weyl_gl1(N: int, field: Fq, prec: int = DEFAULT_PREC) -> tuple[MatLS, MatLS]:
    t0, t1 = weyl_gl1_monomials(N)
    return monomial_to_matls(t0, field, prec), monomial_to_matls(t1, field, prec)


def weyl_gl2n_monomials(N: int) -> tuple[Monomial, Monomial]:
    """w_0 and w_1 in Sp(X), with w_0 w_1 = diag(-beta^-1, I, beta)."""
    n2 = 2 * N
    n = 6 * N
    # w_0 swaps the W and W* blocks and fixes V
    perm = [4 * N + i if i < n2 else (i - 4 * N if i >= 4 * N else i) for i in range(n)]
    vals = [0] * n
    signs = [1] * n
    w0 = Monomial(tuple(perm), tuple(vals), tuple(signs))
    b = beta_monomial(N)
    binv = b.inv()
    perm = [0] * n
    vals = [0] * n
    signs = [1] * n
    for j in range(n2):  # W column: w_1 e_j = -beta^-1 e_j in the W* block
        perm[j] = 4 * N + binv.perm[j]
        vals[j] = binv.vals[j]
        signs[j] = -binv.signs[j]
    for j in range(n2, 4 * N):  # V fixed
        perm[j] = j
    for j in range(n2):  # W* column: w_1 e_{4N+j} = beta e_j in the W block
        perm[4 * N + j] = b.perm[j]
        vals[4 * N + j] = b.vals[j]
        signs[4 * N + j] = b.signs[j]
    w1 = Monomial(tuple(perm), tuple(vals), tuple(signs))
    return w0, w1


def weyl_gl2n(N: int, field: Fq, prec: int = DEFAULT_PREC) -> tuple[MatLS, MatLS]:
    w0, w1 = weyl_gl2n_monomials(N)
    return monomial_to_matls(w0, field, prec), monomial_to_matls(w1, field, prec)


# -- congruence subgroups and psi_beta ----------------------------------------


def in_filtration(M: MatLS, lam: LatticeSeq, r: int) -> bool:
    """M in A_r(Lambda), with a precision guard on zero entries."""
    bounds = order_filtration(lam, r).bounds
    for i in range(M.rows):
        for j in range(M.cols):
            entry = M.e[i][j]
            v = entry.val_or_none()
            if v is None:
                if entry.prec < bounds[i][j]:
                    raise PrecisionError(
                        f"entry ({i},{j}) known only to O(t^{entry.prec}), "
                        f"bound is {bounds[i][j]}"
                    )
            elif v < bounds[i][j]:
                return False
    return True


def is_in_group(M: MatLS, pairing: Pairing, r: int, lam: LatticeSeq) -> bool:
    """Form preservation to precision plus M - I in A_r(Lambda)."""
    ident = MatLS.identity(M.field, M.rows, M.min_prec())
    return is_symplectic(M, pairing) and in_filtration(M - ident, lam, r)


def psi_beta(
    x: MatLS,
    N: int,
    a: int = 1,
    multiplier: int = 1,
    check: bool = True,
) -> CycNum:
    """psi_beta(x) = psi(tr(beta (x - 1))), via the t^0 residue of the trace.

    multiplier 2 gives psi_{2 beta}, the GL(2N) simple character.  With check
    on, x must lie in I_2N(1) (symplectic and congruent to 1 mod A_1).
    """
    field = x.field
    if x.rows != 2 * N or x.cols != 2 * N:
        raise ShapeError(f"expected a 2N x 2N matrix with N={N}")
    if check:
        lam = standard_chain_2N(N)
        if not is_in_group(x, pairing_h(2 * N), 1, lam):
            raise ConstraintError("x is not in I_2N(1) to precision")
    beta = beta_matrix(N, field, x.min_prec() + 2)
    diff = x - MatLS.identity(field, 2 * N, x.min_prec())
    s = (beta @ diff).trace()
    c0 = s.residue_at(0)
    return psi(field, field.mul(field.from_int(multiplier), c0), a)


# -- Iwahori decomposition solvers ---------------------------------------------


def _sym_constraint(D: MatLS, Z: MatLS, pairing: Pairing) -> bool:
    aZ = adjoint_sp(Z, pairing)
    aD = adjoint_sp(D, pairing)
    return (Z + aZ + (aD @ D)).is_zero()


def solve_inf(D: MatLS, Z: MatLS, pairing: Pairing) -> dict:
    """Solve equation (inf): factor the lower unipotent with blocks (D, -aD, Z)
    through w_0; solvable iff Z is invertible.

    Returns the blocks m, g, B1, B2, E1, E2, F1, F2 of the factorization.
    """
    if not _sym_constraint(D, Z, pairing):
        raise ConstraintError("Z + aZ + aD D != 0 to precision")
    try:
        Zi = Z.inv()
    except SingularToPrecision as exc:
        raise SingularToPrecision("equation (inf) needs invertible Z") from exc
    aD = adjoint_sp(D, pairing)
    ident = MatLS.identity(D.field, D.rows, min(D.min_prec(), Z.min_prec()))
    g = ident + (D @ Zi @ aD)
    gi = g.inv()
    return {
        "m": Z,
        "g": g,
        "B1": Zi @ aD @ gi,
        "B2": -(Zi @ aD),
        "E1": Zi,
        "E2": Zi,
        "F1": D @ Zi,
        "F2": -(gi @ D @ Zi),
    }


def solve_sup(D: MatLS, Z: MatLS, pairing: Pairing, N: int) -> dict:
    """Solve equation (sup): factor the upper unipotent with blocks (-aD, Z, D)
    through w_1 = (0,0,beta; 0,I,0; -beta^-1,0,0); solvable iff Z is invertible.
    """
    if not _sym_constraint(D, Z, pairing):
        raise ConstraintError("Z + aZ + aD D != 0 to precision")
    try:
        Zi = Z.inv()
    except SingularToPrecision as exc:
        raise SingularToPrecision("equation (sup) needs invertible Z") from exc
    field = D.field
    beta = beta_matrix(N, field, D.min_prec() + 4)
    aD = adjoint_sp(D, pairing)
    aZi = adjoint_sp(Zi, pairing)
    m = -(beta @ aZi)  # from a(m^-1) = beta^-1 Z
    ident = MatLS.identity(field, D.rows, min(D.min_prec(), Z.min_prec()))
    g = ident + (D @ Zi @ aD)
    gi = g.inv()
    return {
        "m": m,
        "g": g,
        "B1": Zi @ aD @ gi,
        "B2": -(Zi @ aD),
        "E1": Zi,
        "E2": Zi,
        "F1": D @ Zi,
        "F2": -(gi @ D @ Zi),
    }


def _adj_inv(M: MatLS, pairing: Pairing) -> MatLS:
    return adjoint_sp(M.inv(), pairing)


def reconstruct_inf_blocks(sol: dict, D: MatLS, Z: MatLS, pairing: Pairing) -> bool:
    """Check the nine block identities of equation (inf) exactly to precision."""
    m, g = sol["m"], sol["g"]
    B1, B2 = sol["B1"], sol["B2"]
    E1, E2 = sol["E1"], sol["E2"]
    F1, F2 = sol["F1"], sol["F2"]
    aD = adjoint_sp(D, pairing)
    am_inv = _adj_inv(m, pairing)
    n = D.rows
    ident = MatLS.identity(D.field, n, min(D.min_prec(), Z.min_prec()))
    H = -aD
    checks = [
        (E1 @ m) == ident,
        ((E1 @ m @ B2) + (B1 @ g)).is_zero(),
        ((E1 @ m @ E2) + (B1 @ g @ F2) + am_inv).is_zero(),
        (F1 @ m) == D,
        ((F1 @ m @ B2) + g) == ident,
        ((F1 @ m @ E2) + (g @ F2)).is_zero(),
        m == Z,
        (m @ B2) == H,
        (m @ E2) == ident,
    ]
    return all(checks)


def reconstruct_sup_blocks(sol: dict, D: MatLS, Z: MatLS, pairing: Pairing, N: int) -> bool:
    """Check the nine block identities of equation (sup) exactly to precision."""
    m, g = sol["m"], sol["g"]
    B1, B2 = sol["B1"], sol["B2"]
    E1, E2 = sol["E1"], sol["E2"]
    F1, F2 = sol["F1"], sol["F2"]
    field = D.field
    beta = beta_matrix(N, field, D.min_prec() + 4)
    binv = monomial_to_matls(beta_monomial(N).inv(), field, D.min_prec() + 4)
    aD = adjoint_sp(D, pairing)
    am_inv = _adj_inv(m, pairing)
    core = beta @ am_inv
    n = D.rows
    ident = MatLS.identity(field, n, min(D.min_prec(), Z.min_prec()))
    H = -aD
    checks = [
        (core @ E2) == ident,
        (core @ B2) == H,
        core == Z,
        ((g @ F2) + (F1 @ core @ E2)).is_zero(),
        (g + (F1 @ core @ B2)) == ident,
        (F1 @ core) == D,
        ((-(binv @ m)) + (B1 @ g @ F2) + (E1 @ core @ E2)).is_zero(),
        ((B1 @ g) + (E1 @ core @ B2)).is_zero(),
        (E1 @ core) == ident,
    ]
    return all(checks)


def upper_unipotent_X(field: Fq, X12: MatLS, X13: MatLS, X23: MatLS) -> MatLS:
    """[[I, X12, X13], [0, I, X23], [0, 0, I]] in block form."""
    n = X12.rows
    prec = min(X12.min_prec(), X13.min_prec(), X23.min_prec())
    ident = MatLS.identity(field, n, prec)
    zero = MatLS.zeros(field, n, n, prec)
    return block_matrix([[ident, X12, X13], [zero, ident, X23], [zero, zero, ident]])


def lower_unipotent_X(field: Fq, X21: MatLS, X31: MatLS, X32: MatLS) -> MatLS:
    """[[I, 0, 0], [X21, I, 0], [X31, X32, I]] in block form."""
    n = X21.rows
    prec = min(X21.min_prec(), X31.min_prec(), X32.min_prec())
    ident = MatLS.identity(field, n, prec)
    zero = MatLS.zeros(field, n, n, prec)
    return block_matrix([[ident, zero, zero], [X21, ident, zero], [X31, X32, ident]])


def inf_product_full(sol: dict, D: MatLS, Z: MatLS, pairing: Pairing, N: int) -> bool:
    """Full 6N x 6N reconstruction of equation (inf): U1 w0 diag(m,g,am^-1) U2
    equals the lower unipotent with blocks (D, -aD, Z)."""
    field = D.field
    m, g = sol["m"], sol["g"]
    am_inv = _adj_inv(m, pairing)
    prec = min(D.min_prec(), Z.min_prec())
    zero = MatLS.zeros(field, D.rows, D.rows, prec)
    U1 = upper_unipotent_X(field, sol["B1"], sol["E1"], sol["F1"])
    U2 = upper_unipotent_X(field, sol["B2"], sol["E2"], sol["F2"])
    w0 = monomial_to_matls(weyl_gl2n_monomials(N)[0], field, prec)
    mid = block_matrix([[m, zero, zero], [zero, g, zero], [zero, zero, am_inv]])
    aD = adjoint_sp(D, pairing)
    lhs = lower_unipotent_X(field, D, Z, -aD)
    return (U1 @ w0 @ mid @ U2) == lhs


def sup_product_full(sol: dict, D: MatLS, Z: MatLS, pairing: Pairing, N: int) -> bool:
    """Full 6N x 6N reconstruction of equation (sup): L1 w1 diag(m,g,am^-1) L2
    equals the upper unipotent with blocks (-aD, Z, D)."""
    field = D.field
    m, g = sol["m"], sol["g"]
    am_inv = _adj_inv(m, pairing)
    prec = min(D.min_prec(), Z.min_prec())
    zero = MatLS.zeros(field, D.rows, D.rows, prec)
    L1 = lower_unipotent_X(field, sol["F1"], sol["E1"], sol["B1"])
    L2 = lower_unipotent_X(field, sol["F2"], sol["E2"], sol["B2"])
    w1 = monomial_to_matls(weyl_gl2n_monomials(N)[1], field, prec)
    mid = block_matrix([[m, zero, zero], [zero, g, zero], [zero, zero, am_inv]])
    aD = adjoint_sp(D, pairing)
    lhs = upper_unipotent_X(field, -aD, Z, D)
    return (L1 @ w1 @ mid @ L2) == lhs


# -- GL(1)-case block relations ------------------------------------------------


def tau_column(B: MatLS) -> MatLS:
    """B^tau: the column with c_i = b_{2N-i+1} (i <= N), -b_{2N-i+1} (i > N)."""
    n2 = B.cols
    if B.rows != 1 or n2 % 2:
        raise ShapeError("tau expects a 1 x 2N row")
    N = n2 // 2
    col = []
    for i in range(n2):
        src = B.e[0][n2 - 1 - i]
        col.append([src if i < N else -src])
    return MatLS(B.field, col)


def gl1_relations(B: MatLS, C: MatLS) -> bool:
    """The symplectic relations of the corner blocks: C = B^tau and BC = 0."""
    if C.rows != B.cols or C.cols != 1:
        raise ShapeError("C must be a 2N x 1 column")
    return (C == tau_column(B)) and (B @ C).is_zero()


def gl1_upper_element(z: LSeries, B: MatLS, C: MatLS) -> MatLS:
    """The (2N+2) x (2N+2) matrix (1, B, z; 0, I, C; 0, 0, 1)."""
    field = B.field
    n2 = B.cols
    prec = min(z.prec, B.min_prec(), C.min_prec())
    one = LSeries.one(field, prec)
    zer = LSeries.zero(field, prec)
    rows = [[one] + list(B.e[0]) + [z]]
    for i in range(n2):
        rows.append([zer] + [LSeries.one(field, prec) if j == i else zer for j in range(n2)] + [C.e[i][0]])
    rows.append([zer] * (n2 + 1) + [one])
    return MatLS(field, rows)


def gl1_lower_element(u: LSeries, D: MatLS, H: MatLS) -> MatLS:
    """The (2N+2) x (2N+2) matrix (1, 0, 0; D, I, 0; u, H, 1)."""
    field = D.field
    n2 = D.rows
    prec = min(u.prec, D.min_prec(), H.min_prec())
    one = LSeries.one(field, prec)
    zer = LSeries.zero(field, prec)
    rows = [[one] + [zer] * (n2 + 1)]
    for i in range(n2):
        rows.append([D.e[i][0]] + [LSeries.one(field, prec) if j == i else zer for j in range(n2)] + [zer])
    rows.append([u] + list(H.e[0]) + [one])
    return MatLS(field, rows)


def gamma_membership(case: str, **blocks) -> bool:
    """The displayed characterizations of the coset-support sets.

    case "upper" (the b_1 set Gamma): z = t^-1 u with u a unit, B integral,
    and the element symplectic.  case "lower" (the b_0 set Gamma'): corner u
    a unit, H in p^N x o^N, D = -H^tau, element symplectic.
    """
    if case == "upper":
        z, B, C = blocks["z"], blocks["B"], blocks["C"]
        if z.val_or_none() != -1:
            return False
        if any(b.val_or_none() is not None and b.val() < 0 for b in B.e[0]):
            return False
        return gl1_relations(B, C)
    if case == "lower":
        u, D, H = blocks["u"], blocks["D"], blocks["H"]
        if not u.is_unit():
            return False
        n2 = H.cols
        N = n2 // 2
        for i, h in enumerate(H.e[0]):
            need = 1 if i < N else 0
            v = h.val_or_none()
            if v is not None and v < need:
                return False
        return D == -tau_column(H)
    raise ValueError(f"unknown case {case!r}")


# -- trace identities ----------------------------------------------------------


def diag_trace_forms(field: Fq, dvals, N: int, prec: int = DEFAULT_PREC):
    """tr(aD D) and tr(beta D beta^-1 aD) for diagonal D, by matrix arithmetic."""
    D = MatLS.diag(field, dvals, prec)
    pairing = pairing_h(2 * N)
    aD = adjoint_sp(D, pairing)
    t1 = (aD @ D).trace().residue_at(0)
    beta = beta_matrix(N, field, prec)
    binv = monomial_to_matls(beta_monomial(N).inv(), field, prec)
    t2 = (beta @ D @ binv @ aD).trace().residue_at(0)
    return t1, t2


def diag_trace_forms_closed(field: Fq, dvals, N: int):
    """The displayed closed forms of the two traces for diagonal D."""
    n2 = 2 * N
    two = field.from_int(2)
    t1 = 0
    for i in range(N):
        t1 = field.add(t1, field.mul(dvals[i], dvals[n2 - 1 - i]))
    t1 = field.mul(two, t1)
    t2 = field.add(
        field.mul(dvals[n2 - 1], dvals[n2 - 1]), field.mul(dvals[N - 1], dvals[N - 1])
    )
    cross = 0
    for i in range(N - 1):
        cross = field.add(cross, field.mul(dvals[i], dvals[n2 - 2 - i]))
    t2 = field.add(t2, field.mul(two, cross))
    return t1, t2


def conj_diag_by_beta(field: Fq, dvals, N: int, prec: int = DEFAULT_PREC):
    """The diagonal of beta D beta^-1, which must be the cyclic shift
    (d_2N, d_1, ..., d_{2N-1})."""
    D = MatLS.diag(field, dvals, prec)
    beta = beta_matrix(N, field, prec)
    binv = monomial_to_matls(beta_monomial(N).inv(), field, prec)
    M = beta @ D @ binv
    return tuple(M.e[i][i].residue_at(0) for i in range(2 * N))


# -- I(1) coordinate representatives -------------------------------------------


def coordinate_rep(j: int, u: int, N: int, field: Fq, prec: int = DEFAULT_PREC) -> MatLS:
    """A symplectic representative of the j-th coordinate of I(1)/I(2) = k^(N+1).

    Coordinates are indexed 0..N: for j < N-1 the root element pairs the
    (j, j+1) entry with its mirror, j = N-1 is the short coordinate E_{N,N+1},
    and j = N is the deep corner t * E_{2N,1}.
    """
    n2 = 2 * N
    x = MatLS.identity(field, n2, prec)
    c = LSeries.constant(field, u, prec)
    if 0 <= j < N - 1:
        x.e[j][j + 1] = c
        x.e[n2 - 2 - j][n2 - 1 - j] = -c
    elif j == N - 1:
        x.e[N - 1][N] = c
    elif j == N:
        x.e[n2 - 1][0] = LSeries(field, 1, (u % field.q,), prec)
    else:
        raise ValueError(f"coordinate index {j} out of range 0..{N}")
    return x


def random_I1_element(rng, N: int, field: Fq, prec: int = DEFAULT_PREC) -> MatLS:
    """A seeded element of I_2N(1) via the Cayley transform of a random
    anti-selfadjoint element of A_1 (p odd makes the transform defined)."""
    n2 = 2 * N
    lam = standard_chain_2N(N)
    pairing = pairing_h(n2)
    bounds = order_filtration(lam, 1).bounds
    entries = []
    for i in range(n2):
        row = []
        for j in range(n2):
            lo = bounds[i][j]
            pairs = []
            for k in range(lo, lo + 3):
                c = rng.randrange(field.q)
                if c:
                    pairs.append((k, c))
            row.append(LSeries.from_pairs(field, pairs, prec))
        entries.append(row)
    B = MatLS(field, entries)
    A = B - adjoint_sp(B, pairing)  # aA = -A, still in A_1
    half = field.inv(field.from_int(2))
    halfA = A.scale_const(half)
    ident = MatLS.identity(field, n2, prec)
    return (ident + halfA) @ (ident - halfA).inv()


# -- seeded instance generation -------------------------------------------------


def random_series(rng, field: Fq, prec: int, unit: bool = False, depth: int = 0) -> LSeries:
    """A random integral series: constant term plus up to `depth` higher terms."""
    c0 = rng.randrange(1, field.q) if unit else rng.randrange(field.q)
    pairs = [(0, c0)]
    for k in range(1, depth + 1):
        c = rng.randrange(field.q)
        if c:
            pairs.append((k, c))
    return LSeries.from_pairs(field, pairs, prec)


def random_solver_instance(rng, N: int, field: Fq, prec: int = 12, depth_prob: float = 0.2):
    """A seeded (D, Z) pair meeting the symplectic constraint exactly.

    D is biased toward invertibility; the a-symmetric part of Z is forced to
    -aD D / 2 (p odd) and the antisymmetric part is random.  Retries until Z
    is invertible to precision.
    """
    n2 = 2 * N
    pairing = pairing_h(n2)
    inv2 = field.inv(field.from_int(2))
    while True:
        depth = 2 if rng.random() < depth_prob else 0
        D = MatLS(
            field,
            [
                [random_series(rng, field, prec, unit=(i == j), depth=depth) for j in range(n2)]
                for i in range(n2)
            ],
        )
        A = MatLS(
            field,
            [
                [random_series(rng, field, prec, depth=depth) for _ in range(n2)]
                for _ in range(n2)
            ],
        )
        A = A - adjoint_sp(A, pairing)  # antisymmetric part: aA = -A
        aD = adjoint_sp(D, pairing)
        Z = A - (aD @ D).scale_const(inv2)
        if not _sym_constraint(D, Z, pairing):
            raise ConstraintError("instance generator broke the constraint")
        try:
            Z.inv()
        except SingularToPrecision:
            continue
        return D, Z
