"""Matrix-variate gamma, beta and Kober operator numerics."""

from ._mvsf import (
    BetaRepresentation,
    DomainError,
    Error,
    McEstimate,
    NonconvergedQuadrature,
    NonconvergentTail,
    NormTooLarge,
    RejectionTooLow,
    UnsupportedOrder,
    beta_integral_complex_p2,
    beta_integral_real_p2,
    complex_matrix_beta,
    complex_multigamma,
    density,
    empirical_mean,
    gamma_integral_complex_p2,
    gamma_integral_real_p2,
    hyp_pfq,
    kober1_case1,
    kober2_power,
    mc_beta_integral,
    mc_gamma_integral,
    normalization_check,
    real_matrix_beta,
    real_multigamma,
    run_cli,
    sample,
    zonal_c,
)

__all__ = [name for name in dir() if not name.startswith("_")]
