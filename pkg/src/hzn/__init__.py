"""Evaluation and machine verification of a family of log-kernel integrals.

The package evaluates

    F(z;u,v)   = int_0^1 log(1 - u t^z) / (1/v - t) dt
    F(z;u,v,w) = int_0^1 log(1 - u t^z) log(1 - w t^z) / (1/v - t) dt
    F_k(z;u,v) = int_0^1 log^k(1 - u t^z) / (1/v - t) dt
    J(z)       = int_0^1 log(1 + t^z) / (1 + t) dt

by three independent routes -- adaptive tanh-sinh quadrature, collapsed
multi-series continuation, and closed-form polylogarithm expressions --
and cross-verifies every functional equation relating them.
"""

from ._kernels import BACKEND as kernel_backend
from .closedform import (
    closed_dilog_pair_integral,
    closed_logsq_integral,
    f3_at_1,
    f3_at_1_over_n_uvu,
    f3_at_1_uvu,
    f3_at_p_over_q,
    f3_formula_domain_ok,
    f3_u1_at_1_over_n,
    f_at_1_uuu,
    f_at_m_over_n,
    fk_at_1,
    fk_at_1_over_n,
    fk_at_1_uu,
    fk_formula_domain_ok,
    fk_u1_at_1_over_n,
    j_reflection,
    lemma_formula_domain_ok,
)
from .domains import (
    EvalParams,
    RegionFlags,
    RootsOfUnity,
    membership,
    partial_fraction_sum,
    principal_root,
    roots_of_unity,
)
from .errors import (
    BranchCutError,
    ConvergenceError,
    DegenerateParameterError,
    DomainError,
    HznError,
    NearPoleError,
    PoleError,
    PoleProximityError,
    ResourceLimitError,
)
from .identity import (
    TABLE1_ROWS,
    IdentityReport,
    IdentitySpec,
    UnknownIdentityError,
    get_identity,
    list_identities,
    run_identity,
    table1_oracle,
)
from .polylog import (
    LIMIT_FROM_ABOVE,
    LIMIT_FROM_BELOW,
    PRINCIPAL,
    abel_residual,
    alt_mzv_31,
    alt_mzv_31_tail_bound,
    li,
    li_derivative_check,
    rogers_residual,
)
from .quadrature import (
    QuadConfig,
    ValueWithError,
    integrate_f,
    integrate_f3,
    integrate_f_substituted,
    integrate_fk,
    integrate_j,
)
from .series import LogPowerCoeffs, SeriesConfig, logpower_coeffs, series_f3, series_fk

__version__ = "0.1.0"
