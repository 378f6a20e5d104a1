"""The Hecke-coefficient computations: exact character sums for b_0 and b_1 in
the GL(1) and GL(2N) cases, their Gauss-sum reductions, the quadratic-relation
bookkeeping, and the selection rule for the self-dual point with highest
reducibility value.

Every "equal up to a positive constant" step of the derivation is sharpened
here to an exact closed form ((q-1) G, q^(2N-1)(q-1) G, ...) so that sign
errors cannot hide inside a ray class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import ConstraintError, TermBudgetExceeded, TrivialDeltaError
from .exactnum import CycNum, RayClass
from .lattices import order_filtration, pairing_h, standard_chain_2N
from .localfield import LSeries
from .residue import Fq, delta, gauss_sum
from .sympgroups import MatLS, adjoint_sp, psi_beta


# -- relation bookkeeping ------------------------------------------------------


@dataclass(frozen=True)
class QuadRelation:
    """The normalized quadratic relation (T + 1)(T - q^r) = 0, i.e.
    T^2 = b T + c with b = q^r - 1 >= 0 and c = q^r > 0."""

    q: int
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ConstraintError("the exponent r must be nonnegative")

    @property
    def b(self) -> Fraction:
        return Fraction(self.q**self.r - 1)

    @property
    def c(self) -> Fraction:
        return Fraction(self.q**self.r)

    @property
    def roots(self) -> tuple[Fraction, Fraction]:
        return (Fraction(self.q**self.r), Fraction(-1))

    @property
    def root_quotient(self) -> Fraction:
        return Fraction(-(self.q**self.r))


@dataclass
class GeneratorPair:
    """Normalized generator values at the two Weyl representatives."""

    T0: RayClass
    T1: RayClass
    r0: int
    r1: int

    def __post_init__(self):
        if self.r0 < 0 or self.r1 < 0:
            raise ConstraintError("generator exponents must be nonnegative")


@dataclass
class MethodState:
    """The normalization of the commutative-algebra generator Psi as a ray
    class, twisted consistently by unramified characters."""

    psi_norm: RayClass

    def twisted(self, chi_at_pi: CycNum) -> "MethodState":
        return MethodState(twist_value(self.psi_norm, chi_at_pi))


def twist_value(zeta: RayClass, chi_at_pi: CycNum) -> RayClass:
    """Unramified twisting multiplies the value at Psi by chi(Pi)^(-1)."""
    if chi_at_pi.is_zero():
        raise ConstraintError("twist value must be nonzero")
    return RayClass(zeta.rep * chi_at_pi.inv())


# -- GL(1) case ------------------------------------------------------------------


def b1_gl1(field: Fq, a: int = 1) -> CycNum:
    """sum over units u and x in k of delta(-u) psi^a(u^-1 x^2), exact."""
    p = field.p
    counts = [0] * p
    m1 = field.neg(1)
    for u in field.units():
        s = delta(field, field.mul(m1, u))
        ui = field.inv(u)
        for x in field.elements():
            e = field.trace(field.mul(a, field.mul(ui, field.mul(x, x))))
            counts[e] += s
    return CycNum.from_counts(p, counts)


def b0_gl1(field: Fq, a: int = 1) -> CycNum:
    """sum over units u and x in k of delta(-u) psi^a(-u^-1 x^2), exact."""
    p = field.p
    counts = [0] * p
    m1 = field.neg(1)
    for u in field.units():
        s = delta(field, field.mul(m1, u))
        ui = field.inv(u)
        for x in field.elements():
            e = field.trace(field.mul(a, field.neg(field.mul(ui, field.mul(x, x)))))
            counts[e] += s
    return CycNum.from_counts(p, counts)


def gl1_generator_norms(field: Fq, a: int = 1) -> GeneratorPair:
    """T_1(t_1) = xi and T_0(t_0) = delta(-1) xi, both with relation
    (T - q)(T + 1) = 0; represented by ray classes of Gauss sums."""
    G = gauss_sum(field, a)
    d_m1 = delta(field, field.neg(1))
    return GeneratorPair(
        T0=RayClass(G * d_m1),
        T1=RayClass(G),
        r0=1,
        r1=1,
    )


# -- GL(2N) case ------------------------------------------------------------------


def b0_gl2n(field: Fq, chi_m1: int) -> CycNum:
    """sum of delta(a) chi(-1) over pairs of units with 2a + u^2 = 0, exact;
    equals (q-1) chi(-1) delta(-2)."""
    if chi_m1 not in (1, -1):
        raise ConstraintError("chi(-1) must be +1 or -1")
    two = field.from_int(2)
    total = 0
    for u in field.units():
        a = field.neg(field.mul(field.inv(two), field.mul(u, u)))
        total += delta(field, a) * chi_m1
    return CycNum.rational(field.p, total)


def b1_gl2n_reduced(field: Fq, a: int = 1, delta_kind: str = "quadratic") -> CycNum:
    """The eliminated-variable form: sum over d in k, z in k^x of
    delta(z) psi^a(z^-1 d^2)."""
    p = field.p
    counts = [0] * p
    for z in field.units():
        s = delta(field, z) if delta_kind == "quadratic" else 1
        zi = field.inv(z)
        for d in field.elements():
            counts[field.trace(field.mul(a, field.mul(zi, field.mul(d, d))))] += s
    return CycNum.from_counts(p, counts)


def b1_gl2n_full(
    field: Fq,
    N: int,
    delta_kind: str = "quadratic",
    a: int = 1,
    term_budget: int = 10**8,
) -> CycNum:
    """The full 2N-variable sum of the T_1 computation:

      sum over d_1..d_2N in k, z in k^x of  delta(z) psi^a(z^-1 Q(d)),

    Q(d) = d_2N^2 + d_N^2 + 2(d_1 d_{2N-1} + ... + d_{N-1} d_{N+1})
           - 2(d_1 d_2N + ... + d_N d_{N+1}).

    Zero for trivial delta; for the quadratic delta it collapses to
    q^(2N-1) (q-1) G(delta, psi^a).
    """
    if delta_kind not in ("quadratic", "trivial"):
        raise ConstraintError(f"unknown delta kind {delta_kind!r}")
    q = field.q
    n2 = 2 * N
    terms = q**n2 * (q - 1)
    if terms > term_budget:
        raise TermBudgetExceeded(f"{terms} terms exceed the budget {term_budget}")
    p = field.p
    # inner z-sum for each value of Q: S[v] = sum_z delta(z) zeta^Tr(a v / z)
    inner = []
    for v in field.elements():
        counts = [0] * p
        for z in field.units():
            s = delta(field, z) if delta_kind == "quadratic" else 1
            counts[field.trace(field.mul(a, field.mul(field.inv(z), v)))] += s
        inner.append(tuple(counts))
    mul = field.mul
    add = field.add
    neg = field.neg
    two = field.from_int(2)
    totals = [0] * p
    for d in product(field.elements(), repeat=n2):
        qval = add(mul(d[n2 - 1], d[n2 - 1]), mul(d[N - 1], d[N - 1]))
        cross = 0
        for i in range(N - 1):
            cross = add(cross, mul(d[i], d[n2 - 2 - i]))
        for i in range(N):
            cross = add(cross, neg(mul(d[i], d[n2 - 1 - i])))
        qval = add(qval, mul(two, cross))
        row = inner[qval]
        for e in range(p):
            totals[e] += row[e]
    return CycNum.from_counts(p, totals)


def gl2n_generator_norms(field: Fq, N: int, chi_m1: int, a: int = 1) -> GeneratorPair:
    """T_0(w_0) = chi(-1) delta(-2) and T_1(w_1) = xi^(-1), both with relation
    (T - q)(T + 1) = 0; raises for the trivial twisting character, whose
    relation branch T^2 = 1 admits no reducibility at 1."""
    if chi_m1 not in (1, -1):
        raise ConstraintError("chi(-1) must be +1 or -1")
    G = gauss_sum(field, a)
    d = delta(field, field.neg(field.from_int(2)))
    return GeneratorPair(
        T0=RayClass(CycNum.rational(field.p, chi_m1 * d)),
        T1=RayClass(G.conj()),  # xi^(-1) = conj(xi), same ray as conj(G)
        r0=1,
        r1=1,
    )


def gl2n_generator_norms_trivial_delta(field: Fq, N: int) -> None:
    """The trivial-delta branch: b_1 = 0, relation T^2 = 1, no normalization."""
    raise TrivialDeltaError(
        "trivial delta gives b_1 = 0: the T_1 relation is T^2 = 1 and there "
        "is no reducibility at 1"
    )


# -- method bookkeeping -----------------------------------------------------------


def four_values(r0: int, r1: int, q: int) -> tuple[Fraction, ...]:
    """The possible values at Psi of characters inducing reducibly:
    {1, -q^r0, -q^r1, q^(r0+r1)}."""
    return (
        Fraction(1),
        Fraction(-(q**r0)),
        Fraction(-(q**r1)),
        Fraction(q ** (r0 + r1)),
    )


def reducibility_exponents(r0: int, r1: int, v: int) -> tuple[Fraction, Fraction]:
    """(s_a, s_b) with |det pi_E|^(-2 s_a) = q^(r0+r1) and
    |det pi_E|^(-2 s_b) = q^|r0-r1|, where v = val(det pi_E)."""
    if v < 1:
        raise ConstraintError("v = val(det pi_E) must be >= 1")
    return Fraction(r0 + r1, 2 * v), Fraction(abs(r0 - r1), 2 * v)


@dataclass
class SelfdualSelection:
    lambda_a: RayClass
    lambda_b: RayClass
    degenerate: bool  # r0 r1 = 0: both self-dual points share the value


def select_selfdual(pair: GeneratorPair) -> SelfdualSelection:
    """The highest-reducibility self-dual point: lambda_a = T0 T1 up to a
    positive constant, the other is its negative; degenerate when one
    exponent vanishes."""
    lam = pair.T0 * pair.T1
    return SelfdualSelection(
        lambda_a=lam,
        lambda_b=-lam,
        degenerate=(pair.r0 * pair.r1 == 0),
    )


# -- brute-force coset oracle for the b_0 sum (equation (bibi)) --------------------


def _filtration_coeff_slots(N: int, lo_level: int, hi_level: int):
    """Free coefficient positions of A_lo / A_hi for Lambda_2N."""
    lam = standard_chain_2N(N)
    lo = order_filtration(lam, lo_level).bounds
    hi = order_filtration(lam, hi_level).bounds
    slots = []
    for i in range(2 * N):
        for j in range(2 * N):
            for k in range(lo[i][j], hi[i][j]):
                slots.append((i, j, k))
    return slots


def _chi_psi_beta_value(g: MatLS, N: int, chi_m1: int) -> CycNum:
    """(chi tensor psi_beta)(g) for g in Z I(1): extract the central sign."""
    field = g.field
    lam = standard_chain_2N(N)
    bounds = order_filtration(lam, 1).bounds
    for sign, cand in ((1, g), (-1, -g)):
        diff = cand - MatLS.identity(field, 2 * N, cand.min_prec())
        ok = True
        for i in range(2 * N):
            for j in range(2 * N):
                v = diff.e[i][j].val_or_none()
                if v is not None and v < bounds[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            value = psi_beta(cand, N, check=False)
            return value if (sign == 1 or chi_m1 == 1) else -value
    raise ConstraintError("g is not in Z I(1) at residue level")


def b0_coset_oracle(field: Fq, N: int, chi_m1: int, prec: int = 6) -> dict:
    """Exhaustive residue-level model of the b_0 coset sum.

    Enumerates Z = a(1+z), D = u(1+d) with z, d over representatives of
    A_1/A_3 and the symplectic constraint imposed mod A_3, evaluates
    lambda_X(d_0(x)) = (delta x psi_2beta)(Z) (chi x psi_beta)(g) with
    g = -D Z^-1 aZ D^-1, and returns the total, the per-(a,u) fibre sizes,
    and the per-solution values.  Feasible only for tiny q and N.
    """
    n2 = 2 * N
    pairing = pairing_h(n2)
    lam = standard_chain_2N(N)
    b3 = order_filtration(lam, 3).bounds
    slots = _filtration_coeff_slots(N, 1, 3)
    if field.q ** len(slots) > 10**6:
        raise TermBudgetExceeded("the coset oracle supports only tiny parameters")

    def matrices():
        for combo in product(field.elements(), repeat=len(slots)):
            entries = [[[] for _ in range(n2)] for _ in range(n2)]
            for (i, j, k), c in zip(slots, combo):
                if c:
                    entries[i][j].append((k, c))
            yield MatLS(
                field,
                [
                    [LSeries.from_pairs(field, entries[i][j], prec) for j in range(n2)]
                    for i in range(n2)
                ],
            )

    def in_A3(M: MatLS) -> bool:
        for i in range(n2):
            for j in range(n2):
                v = M.e[i][j].val_or_none()
                if v is not None and v < b3[i][j]:
                    return False
        return True

    zs = list(matrices())
    total = CycNum.rational(field.p, 0)
    fibres: dict[tuple[int, int], int] = {}
    values = []
    ident = MatLS.identity(field, n2, prec)
    for a in field.units():
        for u in field.units():
            for z in zs:
                Z = (ident + z).scale(LSeries.constant(field, a, prec))
                aZ = adjoint_sp(Z, pairing)
                for d in zs:
                    D = (ident + d).scale(LSeries.constant(field, u, prec))
                    aD = adjoint_sp(D, pairing)
                    if not in_A3(Z + aZ + (aD @ D)):
                        continue
                    g = -(D @ Z.inv() @ aZ @ D.inv())
                    val = psi_beta(ident + z, N, multiplier=2, check=False) * delta(
                        field, a
                    ) * _chi_psi_beta_value(g, N, chi_m1)
                    total = total + val
                    fibres[(a, u)] = fibres.get((a, u), 0) + 1
                    values.append(((a, u), val))
    return {"total": total, "fibres": fibres, "values": values}
