"""Assembly of the main results: the Jordan set of a simple cuspidal of
Sp(2N, F), the epsilon-factor product identity, and the parameter-side
consistency checks.  Each quantity is computed by two independent routes
(closed formula vs transport through the Hecke generator normalizations)
and the routes are required to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstraintError
from .exactnum import FourthRoot
from .hecke import (
    gl1_generator_norms,
    gl2n_generator_norms,
    reducibility_exponents,
    select_selfdual,
)
from .lattices import Monomial
from .residue import Fq, delta, xi
from .sympgroups import beta_monomial


@dataclass(frozen=True)
class SimpleCuspidalData:
    """Input data of a simple cuspidal: rank N, residue field, central
    character value chi(-1), and the additive-character twist a."""

    N: int
    field: Fq
    chi_m1: int
    a: int = 1

    def __post_init__(self):
        if self.N < 1:
            raise ConstraintError("N must be >= 1")
        if self.chi_m1 not in (1, -1):
            raise ConstraintError("chi(-1) must be +1 or -1")
        if self.a % self.field.q == 0:
            raise ConstraintError("the psi twist must be a unit")


@dataclass(frozen=True)
class JordanSet:
    """Jord(pi) = {(eps_1, 1), (sigma, 1)}: the ramified quadratic character
    through its value on the norms of F[beta], and sigma through tau(beta)."""

    N: int
    q: int
    chi_m1: int
    eps1_on_norms: int
    tau_beta: FourthRoot
    reducibility_points: tuple[Fraction, Fraction]
    eps_product: int

    def to_dict(self) -> dict:
        fmt = {1: "+1", -1: "-1"}
        return {
            "N": self.N,
            "q": self.q,
            "chi_m1": fmt[self.chi_m1],
            "eps1_on_norms": fmt[self.eps1_on_norms],
            "tau_beta": str(self.tau_beta),
            "reducibility_points": [
                str(self.reducibility_points[0]),
                str(self.reducibility_points[1]),
            ],
            "eps_product": fmt[self.eps_product],
        }


def det_val_uniformizer(N: int) -> int:
    """val(det pi_E) for pi_E = beta^(-1), from the monomial of beta."""
    binv: Monomial = beta_monomial(N).inv()
    return sum(binv.vals)


def epsilon1(data: SimpleCuspidalData) -> int:
    """eps_1 on N_{E/F}(beta), by both derivations.

    Closed form: (-1)^((N+1)(q-1)/2).  Transport: eps_1(pi_F) = 1 comes from
    the ray class of T_0(t_0) T_1(t_1), and N(beta) = (-1)^(N+1) pi_F^(-1)
    moves the value to delta(-1)^(N+1).
    """
    q = data.field.q
    closed = -1 if ((data.N + 1) * ((q - 1) // 2)) % 2 else 1
    pair = gl1_generator_norms(data.field, data.a)
    sel = select_selfdual(pair)
    eps1_at_pi = sel.lambda_a.fourth_root()
    if eps1_at_pi != FourthRoot.one():
        raise ConstraintError(f"eps_1(pi_F) = {eps1_at_pi}, expected 1")
    d_m1 = delta(data.field, data.field.neg(1))
    transported = (d_m1 ** (data.N + 1)) * eps1_at_pi.sign()
    if transported != closed:
        raise ConstraintError("the two derivations of eps_1 disagree")
    return closed


def tau_beta(data: SimpleCuspidalData) -> FourthRoot:
    """tau(beta) = chi(-1) delta(2) xi, by both derivations.

    Transport: the highest-reducibility point lambda_a is tau(-beta^(-1));
    removing tau(-1) = delta(-1) and inverting gives tau(beta).
    """
    f = data.field
    d2 = delta(f, f.from_int(2))
    closed = FourthRoot.from_sign(data.chi_m1 * d2) * xi(f, data.a)
    pair = gl2n_generator_norms(f, data.N, data.chi_m1, data.a)
    sel = select_selfdual(pair)
    tau_minus_beta_inv = sel.lambda_a.fourth_root()
    d_m1 = delta(f, f.neg(1))
    transported = (tau_minus_beta_inv * FourthRoot.from_sign(d_m1).inv()).inv()
    if transported != closed:
        raise ConstraintError("the two derivations of tau(beta) disagree")
    # tau(-beta^2) = 1, i.e. tau(beta)^2 = delta(-1)
    if closed * closed != FourthRoot.from_sign(d_m1):
        raise ConstraintError("tau(-beta^2) != 1")
    return closed


def tau_on(data: SimpleCuspidalData, unit_residue: int, beta_power: int) -> FourthRoot:
    """tau(u beta^k) for a unit residue u: the quadratic character on units
    times tau(beta)^k."""
    f = data.field
    return FourthRoot.from_sign(delta(f, unit_residue)) * (tau_beta(data) ** beta_power)


def eps_factor_product(data: SimpleCuspidalData) -> int:
    """The identity eps(eps_1, 1/2, psi) eps(sigma, 1/2, psi) = chi(-1),
    exact in the fourth-root group."""
    f = data.field
    eps_eps1 = xi(f, data.a)
    tau_2beta = tau_on(data, f.from_int(2), 1)
    product = eps_eps1 * tau_2beta.inv()
    if product != FourthRoot.from_sign(data.chi_m1):
        raise ConstraintError(f"epsilon product {product} != chi(-1) = {data.chi_m1}")
    return data.chi_m1


def jordan_set(data: SimpleCuspidalData) -> JordanSet:
    """The Jordan set: both reducibility points are 1, eps_1 is pinned by its
    value on the norms of F[beta], sigma by tau(beta)."""
    v = det_val_uniformizer(data.N)
    s_a, s_b = reducibility_exponents(1, 1, v)
    if (s_a, s_b) != (Fraction(1), Fraction(0)):
        raise ConstraintError(f"reducibility exponents ({s_a}, {s_b}) unexpected")
    return JordanSet(
        N=data.N,
        q=data.field.q,
        chi_m1=data.chi_m1,
        eps1_on_norms=epsilon1(data),
        tau_beta=tau_beta(data),
        reducibility_points=(Fraction(1), Fraction(1)),
        eps_product=eps_factor_product(data),
    )


def langlands_descriptor(data: SimpleCuspidalData) -> dict:
    """The parameter as a descriptor: omega = eps_1 plus an irreducible
    orthogonal 2N-dimensional piece, with the class-field-theory
    consistency checks of the alternative derivation."""
    f = data.field
    d_m1 = delta(f, f.neg(1))
    eps1_val = epsilon1(data)
    # omega(N(beta)) = omega(-1)^(N-1), with omega(-1) = delta(-1)
    omega_side = d_m1 ** (data.N - 1)
    if omega_side != eps1_val:
        raise ConstraintError("omega(N(beta)) != omega(-1)^(N-1)")
    # a = tau(2 beta) satisfies a^2 = omega(-1)
    a_val = tau_on(data, f.from_int(2), 1)
    if (a_val * a_val) != FourthRoot.from_sign(d_m1):
        raise ConstraintError("tau(2 beta)^2 != omega(-1)")
    return {
        "omega": {
            "kind": "quadratic ramified",
            "on_norms_of_F_beta": eps1_val,
            "on_minus_one": d_m1,
        },
        "tau_component": {
            "dimension": 2 * data.N,
            "kind": "irreducible orthogonal",
            "tau_beta": str(tau_beta(data)),
            "a_squared_is_omega_minus_one": True,
        },
    }
