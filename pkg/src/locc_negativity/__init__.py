"""Logarithmic-negativity certificates for single-copy LOCC indistinguishability of 2x2 state families."""
from .certifier import (
    EPS_CERT,
    Verdict,
    VerdictKind,
    certify_four,
    certify_three,
    classify_case,
)
from .linalg import (
    Spectrum,
    adjoint,
    as_matrix,
    eigh_stack,
    hermitian_eigenvalues,
    is_hermitian,
    jacobi_eigh,
    kron,
    mat_mul,
    trace_norm_hermitian,
)
from .measures import (
    EnResult,
    condition3,
    condition4,
    en_eta_closed_form,
    en_eta_verbatim,
    en_rho_closed_form,
    log_negativity,
    negativity,
)
from .qstate import (
    AC_BD,
    BELL_PARAMS,
    PRODUCT_PARAMS,
    Cut,
    Ensemble,
    FamilyParams,
    PureState,
    a_state,
    bell_state,
    build_eta,
    build_rho,
    mix_ensemble,
    partial_transpose,
    projector,
    tensor,
)
from .scanner import ScanRecord, ValidationReport, cross_validate, sweep_grid, sweep_points

__version__ = "0.1.0"
