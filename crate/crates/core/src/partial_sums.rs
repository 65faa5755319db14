//! Finite Dirichlet sums: ζ_N(s), ζ*_N(s) and the band Σ_{n=N+1}^{2N} n^{−s}.
//!
//! All sums run in ascending n. No state is kept between calls.

use crate::config::MAX_TERMS;
use crate::error::{Error, Result};
use crate::kernel::{ensure_finite, pow_neg, sum_fixed_order, ComplexValue, SumResult};

/// A term count paired with the exponent it is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumRequest {
    pub n: usize,
    pub s: ComplexValue,
}

impl PartialSumRequest {
    pub fn new(n: usize, s: ComplexValue) -> Result<Self> {
        check_terms(n)?;
        ensure_finite(s, "s")?;
        Ok(Self { n, s })
    }
}

/// Rejects N = 0 and N above the configured maximum.
pub fn check_terms(n: usize) -> Result<()> {
    check_terms_with(n, MAX_TERMS)
}

pub fn check_terms_with(n: usize, max: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroTerms)
    } else if n > max {
        Err(Error::TooManyTerms { n, max })
    } else {
        Ok(())
    }
}

fn sum_range(lo: u64, hi: u64, s: ComplexValue, alternating: bool) -> Result<SumResult> {
    sum_fixed_order((lo..=hi).map(|n| {
        let term = pow_neg(n, s);
        if alternating && n % 2 == 0 {
            -term
        } else {
            term
        }
    }))
}

/// ζ_N(s) = Σ_{n=1}^{N} n^{−s}.
pub fn zeta_partial(n: usize, s: ComplexValue) -> Result<SumResult> {
    let req = PartialSumRequest::new(n, s)?;
    sum_range(1, req.n as u64, req.s, false)
}

/// ζ*_N(s) = Σ_{n=1}^{N} (−1)^{n−1} n^{−s}.
pub fn eta_partial(n: usize, s: ComplexValue) -> Result<SumResult> {
    let req = PartialSumRequest::new(n, s)?;
    sum_range(1, req.n as u64, req.s, true)
}

/// Σ_{n=N+1}^{2N} n^{−s}, the upper half of ζ_{2N}(s).
pub fn band_sum(n: usize, s: ComplexValue) -> Result<SumResult> {
    let req = PartialSumRequest::new(n, s)?;
    check_terms(2 * req.n)?;
    sum_range(req.n as u64 + 1, 2 * req.n as u64, req.s, false)
}
