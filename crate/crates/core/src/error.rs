use thiserror::Error;

/// Failures surfaced by the library. Every contract violation maps to one
/// of these; no operation returns a non-finite value silently.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite input: {0}")]
    NonFiniteInput(&'static str),

    #[error("non-finite term at index {index}")]
    NonFiniteTerm { index: usize },

    #[error("term count must be at least 1")]
    ZeroTerms,

    #[error("term count {n} exceeds the configured maximum {max}")]
    TooManyTerms { n: usize, max: usize },

    #[error("excluded point: s = 1 is not a zero (ζ*(1) = log 2)")]
    ExcludedPoint,

    #[error("|k| = {k} exceeds the configured range {max}")]
    ZeroIndexOutOfRange { k: i64, max: i64 },

    #[error("ladder needs at least {min} entries, got {len}")]
    LadderTooShort { len: usize, min: usize },

    #[error(
        "ladder must be strictly increasing and start at N >= 1 (offending entry at index {index})"
    )]
    LadderNotIncreasing { index: usize },

    #[error(
        "defect at machine-noise level; increase s or decrease N (|d_N| = {value:e} at N = {n})"
    )]
    DegenerateDefect { n: usize, value: f64 },

    #[error("sigma = {0} lies outside the critical strip 0 < Re(s) < 1")]
    OutsideStrip(f64),

    #[error("Re(s) = {0} must be positive")]
    NonPositiveReal(f64),

    #[error("tolerance {tol:e} is below the floor {floor:e}")]
    ToleranceTooSmall { tol: f64, floor: f64 },

    #[error("tolerance {tol:e} unreachable: bound {bound:e} with {terms} terms (max {max})")]
    ToleranceUnreachable {
        tol: f64,
        bound: f64,
        terms: usize,
        max: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
