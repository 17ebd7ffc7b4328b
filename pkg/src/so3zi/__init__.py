"""Exact arithmetic for the orthogonal lattice over the Gaussian integers,
its Ford-type fundamental domains, and covolume verification."""

from .zi import (
    Cyc8,
    GaussInt,
    ResidueSystem,
    StandardForm,
    factor,
    gcd,
    gcd_bezout,
    ord_at,
    reduce_mod,
    residue_reps,
    rt,
    sq_kernel,
    standardize,
    unit_group,
)
from .spin import Mat2, conj3, conj_eta, tilde_conj
from .lattice import (
    CosetLabel,
    LatticeElem,
    RealLatticeElem,
    XiClass,
    classify,
    coset_of,
    coset_reps,
    hecke_decompose,
    inv,
    is_member_oracle,
    is_member_real,
    mul,
    xi_classify,
)
from .halfspace import (
    H2Point,
    H3Point,
    Region,
    above_sphere,
    act,
    act_h2,
    delta1,
    height_after,
    in_triangle,
    iwasawa,
)
from .domains import (
    DomainKind,
    DomainSpec,
    GAMMA_H3,
    GAMMA_INT_H2,
    PICARD_H3,
    ReductionResult,
    SL2Z_H2,
    contains,
    in_F1,
    in_G,
    reduce,
    relation_check,
    stabilizer_reduce,
)
from .covol import (
    VolumeReport,
    ZetaValue,
    covolume_gamma,
    covolume_gamma_int,
    covolume_sl_n,
    covolume_sl_n_real,
    hyp_volume,
    index_ratio_covolume,
    lambda_zeta_q,
    lambda_zeta_qi,
    zeta_qi,
)

__version__ = "0.1.0"
