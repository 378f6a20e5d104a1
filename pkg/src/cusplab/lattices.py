"""Standard-split lattice sequences in F^n and their hereditary-order
filtrations, reduced to integer matrix arithmetic.

A sequence is a periodic table of exponent vectors: Lambda(k) is the direct
sum of p^(a_i(k)) e_i, with a(k+e) = a(k) + 1.  All sequences appearing here
are standard-split in the fixed basis, so duals, dilations, sums and the
order filtrations A_r(Lambda) are exact computations on integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import ShapeError, ZeroInput


@dataclass(frozen=True)
class LatticeSeq:
    n: int
    period: int
    table: tuple[tuple[int, ...], ...]  # exponent vectors a(0), ..., a(e-1)

    def __post_init__(self):
        if len(self.table) != self.period:
            raise ShapeError("table length must equal the period")
        for k in range(self.period):
            nxt = self.exps(k + 1)
            if any(b < a for a, b in zip(self.table[k], nxt)):
                raise ShapeError(f"sequence not decreasing at index {k}")

    def exps(self, k: int) -> tuple[int, ...]:
        """Exponent vector of Lambda(k), any integer k."""
        q, r = divmod(k, self.period)
        return tuple(a + q for a in self.table[r])

    def jumps_in_period(self) -> list[int]:
        """Indices k in [0, period) with Lambda(k) != Lambda(k+1)."""
        return [k for k in range(self.period) if self.exps(k) != self.exps(k + 1)]

    def val_vector(self, k: int) -> tuple[int, ...]:
        return self.exps(k)


@dataclass(frozen=True)
class Pairing:
    """A perfect pairing with monomial Gram matrix: h(e_i, e_{sigma(i)}) is the
    only nonzero pairing of e_i, with value sign_i * t^(g_i)."""

    sigma: tuple[int, ...]
    g: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.sigma)


def pairing_h(n2: int) -> Pairing:
    """The alternating form x_1 y_{2N} + ... + x_N y_{N+1} - x_{N+1} y_N - ...

    on F^(2N); n2 = 2N.
    """
    if n2 % 2:
        raise ShapeError("the symplectic form needs even dimension")
    N = n2 // 2
    sigma = tuple(n2 - 1 - i for i in range(n2))
    signs = tuple(1 if i < N else -1 for i in range(n2))
    return Pairing(sigma, (0,) * n2, signs)


def pairing_h2() -> Pairing:
    """The rank-2 form x_0 y_1 - x_1 y_0 on W + W* inside Sp(2N+2)."""
    return Pairing((1, 0), (0, 0), (1, -1))


def pairing_direct_sum(p1: Pairing, p2: Pairing) -> Pairing:
    """The orthogonal sum of two pairings, in block coordinate order."""
    n1 = p1.n
    sigma = p1.sigma + tuple(n1 + s for s in p2.sigma)
    return Pairing(sigma, p1.g + p2.g, p1.signs + p2.signs)


def pairing_hX(N: int) -> Pairing:
    """The form h(a,c') + h(b,b') + h(c,a') on X = W + V + W*, each of
    dimension 2N."""
    base = pairing_h(2 * N)
    n2 = 2 * N
    sigma = []
    signs = []
    for block in (0, 1, 2):
        partner = {0: 2 * n2, 1: n2, 2: 0}[block]  # W pairs W*, V pairs V
        for i in range(n2):
            sigma.append(partner + base.sigma[i])
            signs.append(base.signs[i])
    return Pairing(tuple(sigma), (0,) * (3 * n2), tuple(signs))


# -- constructions ----------------------------------------------------------


def sigma_chain_2N(N: int) -> LatticeSeq:
    """The strict chain Sigma_2N of period 2N: the columns of the standard
    Iwahori order, right to left."""
    n2 = 2 * N
    table = tuple((0,) * (n2 - k) + (1,) * k for k in range(n2))
    return LatticeSeq(n2, n2, table)


def standard_chain_2N(N: int) -> LatticeSeq:
    """The self-dual sequence Lambda_2N: period 4N, jumps at odd integers,
    Lambda(0) = Lambda(1) = (o^N, p^N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    n2 = 2 * N
    table = []
    for k in range(4 * N):
        m = N - k // 2
        if m >= 1:
            table.append((0,) * m + (1,) * (n2 - m))
        else:
            table.append((1,) * (n2 + m) + (2,) * (-m))
    return LatticeSeq(n2, 4 * N, tuple(table))


def lattice_m(N: int, kind: int) -> LatticeSeq:
    """The rank-2 sequences m_0 (kind 0, built on (o,o)) and m_1 (kind 1,
    built on (o,p)), both of period 4N and duality invariant 1."""
    e = 4 * N
    table = []
    if kind == 0:
        for k in range(e):
            c = -(-k // e)  # ceil(k/e): 0 at k=0, then 1
            table.append((c, c))
    elif kind == 1:
        for k in range(e):
            table.append(((k + 2 * N - 1) // e, (k + 6 * N - 1) // e))
    else:
        raise ValueError("kind must be 0 or 1")
    return LatticeSeq(2, e, tuple(table))


def lattice_lambda2(N: int) -> LatticeSeq:
    """The rank-2 sequence Lambda_2: period 4N, constant (o,p) on [-N+1, N],
    jumps at N + 2NZ."""
    e = 4 * N
    table = []
    for k in range(e):
        if k <= N:
            table.append((0, 1))
        elif k <= 3 * N:
            table.append((1, 1))
        else:
            table.append((1, 2))
    return LatticeSeq(2, e, tuple(table))


def dilate(lam: LatticeSeq, m: int) -> LatticeSeq:
    """(m Lambda)(s) = Lambda(ceil(s/m))."""
    if m < 1:
        raise ValueError("dilation factor must be positive")
    e = lam.period * m
    table = tuple(lam.exps(-(-s // m)) for s in range(e))
    return LatticeSeq(lam.n, e, table)


def translate(lam: LatticeSeq, c: int) -> LatticeSeq:
    """(Lambda + c)(t) = Lambda(t + c); the paper's 'Lambda - d' is c = -d."""
    table = tuple(lam.exps(k + c) for k in range(lam.period))
    return LatticeSeq(lam.n, lam.period, table)


def direct_sum(*lams: LatticeSeq) -> LatticeSeq:
    periods = {lam.period for lam in lams}
    if len(periods) != 1:
        raise ShapeError(f"direct_sum needs equal periods, got {sorted(periods)}")
    e = periods.pop()
    n = sum(lam.n for lam in lams)
    table = tuple(sum((lam.table[k] for lam in lams), ()) for k in range(e))
    return LatticeSeq(n, e, table)


def lambda_X(N: int) -> LatticeSeq:
    """Lambda_X = (3 Lambda_W - 2) + (3 Lambda_V) + (3 Lambda_W* + 2), the
    period-12N self-dual sequence underlying the GL(2N) cover."""
    lam = standard_chain_2N(N)
    return direct_sum(
        translate(dilate(lam, 3), -2),
        dilate(lam, 3),
        translate(dilate(lam, 3), 2),
    )


def lambda_X_pieces(N: int) -> tuple[LatticeSeq, LatticeSeq, LatticeSeq]:
    """The three summands (3 Lambda_W - 2), 3 Lambda_V, (3 Lambda_W* + 2)."""
    lam = standard_chain_2N(N)
    return (
        translate(dilate(lam, 3), -2),
        dilate(lam, 3),
        translate(dilate(lam, 3), 2),
    )


def big_M_gl1(N: int, i: int) -> LatticeSeq:
    """The GL(1)-case sequences M_i = m_i + Lambda_2N on F^(2N+2), in the
    coordinate order (W, W*, V)."""
    return direct_sum(lattice_m(N, i), standard_chain_2N(N))


def big_M_gl2n(N: int, i: int, beta_inv: "Monomial") -> LatticeSeq:
    """The GL(2N)-case self-dual sequences of period 2 over E:

      M_0(2k + r) = pi_E^k Lambda_X(r),         r in {0, 1},
      M_1(2k + r) = pi_E^k Lambda_X(-2 or 3),

    realized as o_F-sequences of period 4N via the monomial pi_E = beta^-1
    acting diagonally on X."""
    lamx = lambda_X(N)
    c0, c1 = (0, 1) if i == 0 else (-2, 3)
    table = []
    for m in range(4 * N):
        k, r = divmod(m, 2)
        base = lamx.exps(c0 if r == 0 else c1)
        pw = beta_inv**k
        table.append(pw.apply_to_exponents(base))
    return LatticeSeq(lamx.n, 4 * N, tuple(table))


# -- duality ----------------------------------------------------------------


def dual_exponents(lam: LatticeSeq, pairing: Pairing, k: int) -> tuple[int, ...]:
    """Exponent vector of the dual lattice Lambda(k)# = {x : h(x, Lambda(k)) in p}."""
    if pairing.n != lam.n:
        raise ShapeError("pairing dimension mismatch")
    a = lam.exps(k)
    return tuple(1 - a[pairing.sigma[i]] - pairing.g[i] for i in range(lam.n))


def dual(lam: LatticeSeq, pairing: Pairing) -> LatticeSeq:
    """The dual sequence k -> Lambda(-k)#.

    The lattice-level dual reverses the index direction, so the sequence
    convention evaluates at -k; dual_exponents gives Lambda(k)# itself.
    dual is an involution whenever g_i + g_{sigma(i)} = 0 (true for all the
    forms used here, where g = 0).
    """
    table = tuple(dual_exponents(lam, pairing, -k) for k in range(lam.period))
    return LatticeSeq(lam.n, lam.period, table)


def duality_invariant(lam: LatticeSeq, pairing: Pairing) -> int | None:
    """The integer d with Lambda(k)# = Lambda(d - k) for all k, if one exists."""
    target = dual_exponents(lam, pairing, 0)
    for d in range(-2 * lam.period, 2 * lam.period + 1):
        if lam.exps(d) == target:
            if all(
                dual_exponents(lam, pairing, k) == lam.exps(d - k)
                for k in range(lam.period)
            ):
                return d
    return None


# -- order filtrations --------------------------------------------------------


@dataclass(frozen=True)
class ValMatrix:
    """Entrywise valuation bounds: the lattice {M : val(M_ij) >= bounds[i][j]}."""

    rows: int
    cols: int
    bounds: tuple[tuple[int, ...], ...]

    def contains_vals(self, vals) -> bool:
        """vals[i][j] is an integer valuation or None for zero-to-precision."""
        for i in range(self.rows):
            bi = self.bounds[i]
            for j in range(self.cols):
                v = vals[i][j]
                if v is not None and v < bi[j]:
                    return False
        return True

    def includes(self, other: "ValMatrix") -> bool:
        """Set inclusion other <= self (larger bounds cut smaller lattices)."""
        return all(
            ob >= sb
            for orow, srow in zip(other.bounds, self.bounds)
            for ob, sb in zip(orow, srow)
        )

    def shift(self, c: int) -> "ValMatrix":
        return ValMatrix(
            self.rows, self.cols, tuple(tuple(b + c for b in row) for row in self.bounds)
        )

    def render(self) -> str:
        """Grid of p^k entries, the CLI pretty-printer."""
        cells = [[f"p^{b}" if b else "o" for b in row] for row in self.bounds]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def order_filtration(lam: LatticeSeq, r: int) -> ValMatrix:
    """A_r(Lambda) = {M : M Lambda(k) inside Lambda(k+r) for all k}."""
    return hom_block_lattice(lam, lam, r)


def hom_block_lattice(src: LatticeSeq, dst: LatticeSeq, r: int) -> ValMatrix:
    """Valuation bounds for {b in Hom(F^src, F^dst) : b src(k) inside dst(k+r)}."""
    e = lcm(src.period, dst.period)
    bounds = []
    src_exps = [src.exps(k) for k in range(e)]
    dst_exps = [dst.exps(k + r) for k in range(e)]
    for i in range(dst.n):
        row = []
        for j in range(src.n):
            row.append(max(dst_exps[k][i] - src_exps[k][j] for k in range(e)))
        bounds.append(tuple(row))
    return ValMatrix(dst.n, src.n, tuple(bounds))


def val_wrt(lam: LatticeSeq, vals) -> int:
    """max r with M in A_r(Lambda), from the matrix of entry valuations
    (None marks an entry that is zero to precision)."""
    n = lam.n
    e = lam.period
    base = [order_filtration(lam, r0).bounds for r0 in range(e)]
    best = None
    for i in range(n):
        for j in range(n):
            v = vals[i][j]
            if v is None:
                continue
            # bounds grow by 1 per period: max r = r0 + e*(v - B(r0)_ij) over r0
            r_entry = max(r0 + e * (v - base[r0][i][j]) for r0 in range(e))
            best = r_entry if best is None else min(best, r_entry)
    if best is None:
        raise ZeroInput("valuation of the zero matrix")
    return best


def minplus(a: ValMatrix, b: ValMatrix) -> ValMatrix:
    """Min-plus product: the valuation bounds guaranteed for products A*B."""
    if a.cols != b.rows:
        raise ShapeError("min-plus shape mismatch")
    bounds = tuple(
        tuple(
            min(a.bounds[i][k] + b.bounds[k][j] for k in range(a.cols))
            for j in range(b.cols)
        )
        for i in range(a.rows)
    )
    return ValMatrix(a.rows, b.cols, bounds)


@dataclass(frozen=True)
class Monomial:
    """A monomial matrix: e_j -> sign_j * t^(vals_j) * e_{perm[j]}.

    Powers of beta, the Weyl representatives and the Gram matrices are all
    monomial, which lets lattice-level membership checks stay in integers.
    """

    perm: tuple[int, ...]
    vals: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "Monomial":
        return cls(tuple(range(n)), (0,) * n, (1,) * n)

    def __mul__(self, other: "Monomial") -> "Monomial":
        """Matrix product self @ other."""
        perm = tuple(self.perm[other.perm[j]] for j in range(self.n))
        vals = tuple(other.vals[j] + self.vals[other.perm[j]] for j in range(self.n))
        signs = tuple(other.signs[j] * self.signs[other.perm[j]] for j in range(self.n))
        return Monomial(perm, vals, signs)

    def inv(self) -> "Monomial":
        n = self.n
        perm = [0] * n
        vals = [0] * n
        signs = [1] * n
        for j in range(n):
            i = self.perm[j]
            perm[i] = j
            vals[i] = -self.vals[j]
            signs[i] = self.signs[j]
        return Monomial(tuple(perm), tuple(vals), tuple(signs))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            return self.inv() ** (-k)
        out = Monomial.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def apply_to_exponents(self, a: tuple[int, ...]) -> tuple[int, ...]:
        """Image of the standard lattice with exponent vector a."""
        out = [0] * self.n
        for j in range(self.n):
            out[self.perm[j]] = a[j] + self.vals[j]
        return tuple(out)

    def stabilizes(self, lam: LatticeSeq) -> bool:
        """True iff M Lambda(k) = Lambda(k) for every k."""
        return all(
            self.apply_to_exponents(lam.table[k]) == lam.table[k]
            for k in range(lam.period)
        )


def monomial_from_lattice_action(m: Monomial, lam: LatticeSeq) -> LatticeSeq:
    """The sequence k -> M Lambda(k) for a monomial M."""
    table = tuple(m.apply_to_exponents(lam.table[k]) for k in range(lam.period))
    return LatticeSeq(lam.n, lam.period, table)
