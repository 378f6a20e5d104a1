"""Affine generic characters as residue-parameter tuples, torus conjugation,
orbit classification (2(q-1) orbits, 4(q-1) simple cuspidals), and the
GSp-twist between the two square-class sectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ZeroInput
from .residue import Fq, delta


@dataclass(frozen=True)
class AffGenChar:
    """Parameters (alpha_1, ..., alpha_N; alpha'_2N) of an affine generic
    character, stored as residues: the alpha_i are units and alpha'_2N is the
    residue of t * alpha_2N (alpha_2N has valuation -1)."""

    field: Fq
    alpha: tuple[int, ...]
    alpha2n: int

    def __post_init__(self):
        if any(a % self.field.q == 0 for a in self.alpha) or self.alpha2n % self.field.q == 0:
            raise ZeroInput("affine generic parameters must be units")

    @property
    def N(self) -> int:
        return len(self.alpha)

    def params(self) -> tuple[int, ...]:
        return self.alpha + (self.alpha2n,)


def from_beta(field: Fq, N: int) -> AffGenChar:
    """The parameters of psi_beta: (-2, ..., -2, -1; 1)."""
    m2 = field.neg(field.from_int(2))
    alpha = tuple(m2 for _ in range(N - 1)) + (field.neg(1),)
    return AffGenChar(field, alpha, 1)


def conj_by_torus(lam: AffGenChar, d: tuple[int, ...]) -> AffGenChar:
    """Conjugation by diag(d_1, ..., d_N, 1/d_N, ..., 1/d_1): multiplies
    alpha_i by d_i/d_{i+1} (i < N), alpha_N by d_N^2, alpha_2N by 1/d_1^2."""
    f = lam.field
    N = lam.N
    if len(d) != N or any(x % f.q == 0 for x in d):
        raise ZeroInput("torus entries must be N units")
    alpha = list(lam.alpha)
    for i in range(N - 1):
        alpha[i] = f.mul(alpha[i], f.mul(d[i], f.inv(d[i + 1])))
    alpha[N - 1] = f.mul(alpha[N - 1], f.mul(d[N - 1], d[N - 1]))
    a2n = f.mul(lam.alpha2n, f.inv(f.mul(d[0], d[0])))
    return AffGenChar(f, tuple(alpha), a2n)


def orbit_invariants(lam: AffGenChar):
    """(square class of alpha_N, square class of alpha'_2N, the product
    (alpha_1...alpha_{N-1})^2 alpha_N alpha'_2N) - the criteria (i)(ii)(iii)."""
    f = lam.field
    head = 1
    for a in lam.alpha[:-1]:
        head = f.mul(head, a)
    prod = f.mul(f.mul(head, head), f.mul(lam.alpha[-1], lam.alpha2n))
    return delta(f, lam.alpha[-1]), delta(f, lam.alpha2n), prod


def same_orbit(a: AffGenChar, b: AffGenChar) -> bool:
    """Torus conjugacy via criteria (i) alpha_N mod squares, (ii) alpha_2N mod
    squares, (iii) the invariant product; given (iii), (i) iff (ii)."""
    if a.field != b.field or a.N != b.N:
        return False
    return orbit_invariants(a) == orbit_invariants(b)


def _orbit_of(lam: AffGenChar) -> frozenset:
    """Brute-force torus orbit as a set of parameter tuples."""
    f = lam.field
    N = lam.N
    out = set()
    for d in product(f.units(), repeat=N):
        out.add(conj_by_torus(lam, d).params())
    return frozenset(out)


def orbit_count(field: Fq, N: int) -> int:
    """Number of torus orbits of affine generic characters, by exhaustive
    enumeration, cross-checked against the criteria; equals 2(q-1)."""
    seen: dict[tuple, int] = {}
    orbit_ids: list[frozenset] = []
    chars = []
    for params in product(field.units(), repeat=N + 1):
        lam = AffGenChar(field, params[:N], params[N])
        chars.append(lam)
        if params in seen:
            continue
        orb = _orbit_of(lam)
        for q in orb:
            seen[q] = len(orbit_ids)
        orbit_ids.append(orb)
    # the membership criteria must induce exactly the same partition
    for lam in chars:
        for mu in chars:
            brute = seen[lam.params()] == seen[mu.params()]
            if brute != same_orbit(lam, mu):
                raise AssertionError(
                    f"criteria disagree with brute force at {lam.params()} vs {mu.params()}"
                )
    count = len(orbit_ids)
    if count != 2 * (field.q - 1):
        raise AssertionError(f"orbit count {count} != 2(q-1)")
    return count


def cuspidal_count(field: Fq, N: int) -> int:
    """Isomorphism classes of simple cuspidals: the central character doubles
    the orbit count to 4(q-1)."""
    return 2 * orbit_count(field, N)


def gsp_twist(lam: AffGenChar, eps: int | None = None) -> AffGenChar:
    """Conjugation by d_eps in GSp(2N): multiplies alpha_N by eps and
    alpha'_2N by 1/eps, swapping the two square-class sectors."""
    f = lam.field
    if eps is None:
        eps = f.smallest_nonsquare()
    if delta(f, eps) != -1:
        raise ZeroInput("the GSp twist needs a nonsquare unit")
    alpha = lam.alpha[:-1] + (f.mul(lam.alpha[-1], eps),)
    return AffGenChar(f, alpha, f.mul(lam.alpha2n, f.inv(eps)))


def canonical_rep(lam: AffGenChar, eps: int | None = None) -> AffGenChar:
    """The orbit representative with alpha_i = -1 (i < N) and alpha_N in
    {-1, -eps}; alpha'_2N then carries the invariant product."""
    f = lam.field
    if eps is None:
        eps = f.smallest_nonsquare()
    m1 = f.neg(1)
    sq_n, _, prod = orbit_invariants(lam)
    aN = m1 if sq_n == delta(f, m1) else f.mul(m1, eps)
    lead = 1
    for _ in range(lam.N - 1):
        lead = f.mul(lead, m1)
    # solve (lead^2 aN) * a2n = prod for a2n
    a2n = f.mul(prod, f.inv(f.mul(f.mul(lead, lead), aN)))
    rep = AffGenChar(f, (m1,) * (lam.N - 1) + (aN,), a2n)
    if not same_orbit(rep, lam):
        raise AssertionError("canonical representative left the orbit")
    return rep


def all_orbit_reps(field: Fq, N: int, eps: int | None = None) -> list[AffGenChar]:
    """One canonical representative per orbit, in a deterministic order."""
    if eps is None:
        eps = field.smallest_nonsquare()
    reps = []
    seen = set()
    for params in product(field.units(), repeat=N + 1):
        lam = AffGenChar(field, params[:N], params[N])
        rep = canonical_rep(lam, eps)
        if rep.params() not in seen:
            seen.add(rep.params())
            reps.append(rep)
    reps.sort(key=lambda r: r.params())
    return reps
