//! Zeros of ζ*(s) on Re(s) = 1.
//!
//! At s_k = 1 + 2kπi/ln 2 (k ≠ 0) the factor 1 − 2^{1−s} vanishes and the
//! finite identity collapses to ζ*_{2N}(s_k) = −N^{−it}·d_N(s_k). Since
//! |N^{−it}| = 1 and d_N → 0, the partial sums at s_k go to zero. This
//! module evaluates both sides independently and tracks the decay; the
//! oracles in [`reference`] confirm the limiting values.

mod gamma;
pub mod reference;

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::config::MAX_ZERO_INDEX;
use crate::error::{Error, Result};
use crate::identities::defect;
use crate::kernel::{unit_phase, ComplexValue};
use crate::ladder::validate_ladder;
use crate::partial_sums::eta_partial;

pub use gamma::ln_abs_gamma;
pub use reference::{
    eta_reference, eta_reference_with, eta_richardson, richardson_table, ExtrapolationRoute,
    ReferenceValue,
};

/// 2π / ln 2, the spacing of the zeros along Re(s) = 1.
pub const ZERO_SPACING: f64 = 2.0 * PI / LN_2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroPoint {
    pub k: i64,
    pub s: ComplexValue,
}

impl ZeroPoint {
    pub fn t(&self) -> f64 {
        self.s.im
    }
}

/// s_k = 1 + (2kπ/ln 2)i for 0 < |k| ≤ [`MAX_ZERO_INDEX`].
pub fn zero_point(k: i64) -> Result<ZeroPoint> {
    if k == 0 {
        return Err(Error::ExcludedPoint);
    }
    if k.abs() > MAX_ZERO_INDEX {
        return Err(Error::ZeroIndexOutOfRange {
            k,
            max: MAX_ZERO_INDEX,
        });
    }
    Ok(ZeroPoint {
        k,
        s: Complex64::new(1.0, ZERO_SPACING * k as f64),
    })
}

/// Both sides of ζ*_{2N}(s_k) = −N^{−it}·d_N(s_k) at one N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroCheck {
    pub point: ZeroPoint,
    pub n: usize,
    /// ζ*_{2N}(s_k)
    pub eta_value: ComplexValue,
    /// −N^{−it}·d_N(s_k)
    pub predicted: ComplexValue,
    pub defect: ComplexValue,
    pub identity_diff: f64,
    /// |ζ*_{2N}(s_k)|
    pub magnitude: f64,
}

pub fn zero_check(k: i64, n: usize) -> Result<ZeroCheck> {
    let point = zero_point(k)?;
    let eta_value = eta_partial(2 * n, point.s)?.value;
    let d = defect(n, point.s)?;
    let predicted = -unit_phase(n as u64, point.t()) * d;
    Ok(ZeroCheck {
        point,
        n,
        eta_value,
        predicted,
        defect: d,
        identity_diff: (eta_value - predicted).norm(),
        magnitude: eta_value.norm(),
    })
}

/// Per ladder entry N: |ζ*_{2N}(s_k)| for k ≠ 0. The sentinel k = 0 instead
/// yields |ζ*_{2N}(1) − ln 2|, which equals |d_N(1)|.
pub fn eta_limit_demo(k: i64, ladder: &[usize]) -> Result<Vec<(usize, f64)>> {
    validate_ladder(ladder)?;
    let s = if k == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        zero_point(k)?.s
    };
    let limit = if k == 0 { LN_2 } else { 0.0 };
    ladder
        .par_iter()
        .map(|&n| Ok((n, (eta_partial(2 * n, s)?.value - limit).norm())))
        .collect()
}
