"""cusplab: exact verification of the character-sum and lattice computations
behind Jordan sets of simple cuspidal representations of Sp(2N, F)."""

from .exactnum import (
    CycNum,
    FourthRoot,
    RayClass,
    abs_squared,
    as_fourth_root,
    is_positive_real,
    ray_equiv,
)
from .genchars import AffGenChar, cuspidal_count, from_beta, gsp_twist, orbit_count, same_orbit
from .hecke import (
    GeneratorPair,
    QuadRelation,
    b0_gl1,
    b0_gl2n,
    b1_gl1,
    b1_gl2n_full,
    four_values,
    gl1_generator_norms,
    gl2n_generator_norms,
    reducibility_exponents,
    select_selfdual,
)
from .jordan import JordanSet, SimpleCuspidalData, eps_factor_product, epsilon1, jordan_set, tau_beta
from .lattices import (
    LatticeSeq,
    Monomial,
    Pairing,
    ValMatrix,
    dilate,
    direct_sum,
    dual,
    dual_exponents,
    duality_invariant,
    hom_block_lattice,
    lambda_X,
    order_filtration,
    pairing_h,
    standard_chain_2N,
    translate,
    val_wrt,
)
from .localfield import LSeries
from .residue import Fq, delta, gauss_sum, psi, xi, zolotarev
from .sympgroups import (
    MatLS,
    adjoint_gl,
    adjoint_sp,
    beta_matrix,
    gamma_membership,
    gl1_relations,
    is_in_group,
    is_symplectic,
    psi_beta,
    solve_inf,
    solve_sup,
    weyl_gl1,
    weyl_gl2n,
)

__all__ = [
    "AffGenChar",
    "CycNum",
    "Fq",
    "FourthRoot",
    "GeneratorPair",
    "JordanSet",
    "LSeries",
    "LatticeSeq",
    "MatLS",
    "Monomial",
    "Pairing",
    "QuadRelation",
    "RayClass",
    "SimpleCuspidalData",
    "ValMatrix",
    "abs_squared",
    "adjoint_gl",
    "adjoint_sp",
    "as_fourth_root",
    "b0_gl1",
    "b0_gl2n",
    "b1_gl1",
    "b1_gl2n_full",
    "beta_matrix",
    "cuspidal_count",
    "delta",
    "dilate",
    "direct_sum",
    "dual",
    "dual_exponents",
    "duality_invariant",
    "eps_factor_product",
    "epsilon1",
    "four_values",
    "from_beta",
    "gamma_membership",
    "gauss_sum",
    "gl1_generator_norms",
    "gl1_relations",
    "gl2n_generator_norms",
    "gsp_twist",
    "hom_block_lattice",
    "is_in_group",
    "is_positive_real",
    "is_symplectic",
    "jordan_set",
    "lambda_X",
    "orbit_count",
    "order_filtration",
    "pairing_h",
    "psi",
    "psi_beta",
    "ray_equiv",
    "reducibility_exponents",
    "same_orbit",
    "select_selfdual",
    "solve_inf",
    "solve_sup",
    "standard_chain_2N",
    "tau_beta",
    "translate",
    "val_wrt",
    "weyl_gl1",
    "weyl_gl2n",
    "xi",
    "zolotarev",
]

__version__ = "0.1.0"
