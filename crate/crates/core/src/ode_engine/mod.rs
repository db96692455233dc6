//! Recurrences from the beta = 2 and beta = 4 density equations.
//!
//! All series entries are pi-free polynomials in p, q over Q(i) with the
//! power of pi kept alongside.

mod beta2;
mod beta4;
mod maps;
mod operator;
mod residual;
mod series;

pub use beta2::{
    alpha_ratio_closed, alpha_ratio_of, b_series, bessel_asymptotic_c2n, c2n_closed_form, c_even_series,
    d_series_beta2, e_from_d, e_series_beta2, fourier_ode_beta2_residual, vanishing_product, verify_d_solves_ode,
    verify_d_structure, verify_d_vs_closed_form, BesselAsymCoeffs,
};
pub use beta4::{
    beta1_from_beta4, beta1_from_beta4_with, g_series_beta4, g_tilde_2_variant, g_tilde_series_beta4,
    g_tilde_series_with_seed, verify_g_solves_ode,
};
pub use maps::{
    cross_check_beta1, cross_check_beta2, cross_check_beta4, cross_check_e_beta2, map_to_h, map_to_h_tilde,
};
pub use operator::{FourierOperator, FourierTerm, LinearOde, OdeTerm};
pub use residual::{ode_residual, ode_residual_beta2, ode_residual_beta4, residual_grid, ResidualReport};
pub use series::{compose, p_tilde_beta4, PiPoly, RecurrenceSeries, SeriesKind};
