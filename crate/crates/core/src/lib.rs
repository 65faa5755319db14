//! Finite-sum identities for the alternating zeta function ζ*(s).
//!
//! The crate evaluates the partial sums ζ_N(s) and ζ*_N(s), the band sum
//! Σ_{n=N+1}^{2N} n^{−s}, and the defect d_N(s) between ∫₀¹(1+x)^{−s}dx and
//! its right-endpoint Riemann sum. From these it checks the exact identities
//! that tie them together, shows numerically that ζ*(s) vanishes at
//! s = 1 + 2kπi/ln 2 (k ≠ 0) while ζ*(1) = ln 2, and measures how fast d_N
//! decays.
//!
//! All arithmetic is binary64 with fixed-order compensated summation, so
//! every result is a deterministic function of its inputs.

pub mod config;
pub mod convergence;
pub mod error;
pub mod identities;
pub mod kernel;
pub mod ladder;
pub mod partial_sums;
pub mod zeros;

pub use convergence::{defect_ladder, fit_decay, strip_sweep, DecayFit, StripSample};
pub use error::{Error, Result};
pub use identities::{
    defect, integral_closed_form, residual_eq2, residual_eq3, residual_eq4, residuals, riemann_sum,
    Residual, ResidualSet,
};
pub use kernel::{pow_neg, sum_fixed_order, ComplexValue, SumResult};
pub use ladder::doubling_ladder;
pub use partial_sums::{band_sum, eta_partial, zeta_partial, PartialSumRequest};
pub use zeros::{
    eta_limit_demo, eta_reference, eta_richardson, zero_check, zero_point, ExtrapolationRoute,
    ZeroCheck, ZeroPoint,
};
