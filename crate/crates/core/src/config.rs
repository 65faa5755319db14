//! Default limits and tolerances.
//!
//! Every threshold the library and CLI use lives here so a run can print
//! the complete set it was judged against.

/// Largest term count accepted by the partial-sum routines.
pub const MAX_TERMS: usize = 10_000_000;

/// Largest |k| exposed for the zeros 1 + 2kπi/ln 2.
pub const MAX_ZERO_INDEX: i64 = 16;

/// Upper limit on accelerated terms used by the reference oracle.
pub const MAX_ORACLE_TERMS: usize = 10_000;

/// Smallest tolerance the reference oracle accepts.
pub const ORACLE_TOL_FLOOR: f64 = 1e-13;

/// |s − 1| below which the integral closed form switches to its series.
pub const SERIES_THRESHOLD: f64 = 1e-4;

/// Relative truncation point for the series branch.
pub const SERIES_CUTOFF: f64 = 1e-20;

/// Smallest |d_N| admitted into a log–log fit.
pub const DEGENERACY_FLOOR: f64 = 10.0 * f64::EPSILON;

/// Minimum number of ladder entries for ladders and fits.
pub const MIN_LADDER: usize = 3;

/// Relative tolerance for the finite-sum identity residuals.
pub const RESIDUAL_TOL: f64 = 1e-12;

/// Absolute tolerance handed to the reference oracle by the zeros demo.
pub const REFERENCE_TOL: f64 = 1e-10;

/// Tolerances and limits bundled for callers that override them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub residual: f64,
    pub reference: f64,
    pub degeneracy_floor: f64,
    pub series_threshold: f64,
    pub max_terms: usize,
    pub max_oracle_terms: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            residual: RESIDUAL_TOL,
            reference: REFERENCE_TOL,
            degeneracy_floor: DEGENERACY_FLOOR,
            series_threshold: SERIES_THRESHOLD,
            max_terms: MAX_TERMS,
            max_oracle_terms: MAX_ORACLE_TERMS,
        }
    }
}
