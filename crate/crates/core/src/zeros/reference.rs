//! Independent evaluations of ζ*(s) for Re(s) > 0.
//!
//! [`eta_reference`] is the primary oracle: the alternating series weighted
//! by shifted Chebyshev polynomial coefficients, with a rigorous remainder
//! bound that fixes the number of terms. Writing (k+1)^{−s} as a moment
//! ∫₀¹ x^k w(x) dx with w(x) = (−ln x)^{s−1}/Γ(s), the weighted sum of n
//! terms misses ζ*(s) by at most 2·(3+√8)^{−n}·∫₀¹|w| = 2·(3+√8)^{−n}·Γ(σ)/|Γ(s)|.
//!
//! [`eta_richardson`] is the cruder guard: Richardson extrapolation of the
//! averaged consecutive partial sums, whose error expands in M^{−(s+1+2j)}.

use std::f64::consts::LN_2;

use num_complex::Complex64;

use super::gamma::ln_abs_gamma;
use crate::config::{MAX_ORACLE_TERMS, ORACLE_TOL_FLOOR};
use crate::error::{Error, Result};
use crate::identities::residual_eq4;
use crate::kernel::{ensure_finite, pow_neg, CompensatedSum, ComplexValue, UNIT_ROUNDOFF};
use crate::partial_sums::eta_partial;

/// An oracle value with the bound that certified it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceValue {
    pub value: ComplexValue,
    /// Truncation bound plus rounding budget.
    pub error_bound: f64,
    pub terms: usize,
}

fn ln_convergence_rate() -> f64 {
    (3.0 + 8f64.sqrt()).ln()
}

fn ln_truncation_bound(s: ComplexValue, terms: usize) -> f64 {
    let ln_mass = ln_abs_gamma(Complex64::new(s.re, 0.0)) - ln_abs_gamma(s);
    LN_2 + ln_mass - terms as f64 * ln_convergence_rate()
}

/// (d_n − d_k)/d_n for k = 0..n−1, with d_k the partial sums of the
/// shifted Chebyshev coefficients of degree n.
fn chebyshev_weights(n: usize) -> Vec<f64> {
    const RESCALE_AT: f64 = 1e200;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut c = 1.0f64;
    coeffs.push(c);
    for i in 0..n {
        let (nf, i_f) = (n as f64, i as f64);
        c *= 2.0 * (nf + i_f) * (nf - i_f) / ((2.0 * i_f + 1.0) * (i_f + 1.0));
        if c > RESCALE_AT {
            coeffs.iter_mut().for_each(|x| *x /= RESCALE_AT);
            c /= RESCALE_AT;
        }
        coeffs.push(c);
    }
    let mut tails = vec![0.0; n + 1];
    let mut acc = 0.0;
    for k in (0..n).rev() {
        acc += coeffs[k + 1];
        tails[k] = acc;
    }
    let total = acc + coeffs[0];
    tails.truncate(n);
    tails.iter_mut().for_each(|t| *t /= total);
    tails
}

/// ζ*(s) to within `target_abs_tol`, or an explicit failure.
pub fn eta_reference(s: ComplexValue, target_abs_tol: f64) -> Result<ComplexValue> {
    eta_reference_with(s, target_abs_tol, MAX_ORACLE_TERMS).map(|r| r.value)
}

pub fn eta_reference_with(
    s: ComplexValue,
    target_abs_tol: f64,
    max_terms: usize,
) -> Result<ReferenceValue> {
    ensure_finite(s, "s")?;
    if s.re <= 0.0 {
        return Err(Error::NonPositiveReal(s.re));
    }
    if !target_abs_tol.is_finite() || target_abs_tol < ORACLE_TOL_FLOOR {
        return Err(Error::ToleranceTooSmall {
            tol: target_abs_tol,
            floor: ORACLE_TOL_FLOOR,
        });
    }

    // Half the budget goes to truncation, the rest to rounding.
    let ln_target = (0.5 * target_abs_tol).ln();
    let ln_bound_one = ln_truncation_bound(s, 0);
    let needed = ((ln_bound_one - ln_target) / ln_convergence_rate())
        .ceil()
        .max(1.0);
    if needed > max_terms as f64 {
        return Err(Error::ToleranceUnreachable {
            tol: target_abs_tol,
            bound: ln_truncation_bound(s, max_terms).exp(),
            terms: max_terms,
            max: max_terms,
        });
    }
    let n = needed as usize;

    let weights = chebyshev_weights(n);
    let mut acc = CompensatedSum::new();
    for (k, w) in weights.iter().enumerate() {
        let term = pow_neg(k as u64 + 1, s) * *w;
        acc.add(if k % 2 == 0 { term } else { -term });
    }
    let sum = acc.finish();
    let rounding = sum.err_bound + (n as f64 + 4.0) * UNIT_ROUNDOFF * sum.magnitude;
    let error_bound = ln_truncation_bound(s, n).exp() + rounding;
    if !sum.value.is_finite() || error_bound > target_abs_tol {
        return Err(Error::ToleranceUnreachable {
            tol: target_abs_tol,
            bound: error_bound,
            terms: n,
            max: max_terms,
        });
    }
    Ok(ReferenceValue {
        value: sum.value,
        error_bound,
        terms: n,
    })
}

/// Which sequence feeds the Richardson table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtrapolationRoute {
    /// (ζ*_{M−1}(s) + ζ*_M(s)) / 2 from raw partial sums.
    AveragedPartialSums,
    /// The same average with ζ*_M rebuilt from the right side of the
    /// integral-form identity at N = M/2.
    IdentityReconstruction,
}

/// Richardson extrapolation of the averaged partial sums at
/// M = base·2^i, i = 0..levels. `base` must be even.
pub fn eta_richardson(
    s: ComplexValue,
    route: ExtrapolationRoute,
    base: usize,
    levels: usize,
) -> Result<ComplexValue> {
    ensure_finite(s, "s")?;
    if s.re <= 0.0 {
        return Err(Error::NonPositiveReal(s.re));
    }
    assert!(base >= 2 && base.is_multiple_of(2), "base must be even");
    let samples = (0..=levels)
        .map(|i| {
            let m = base << i;
            let tail_half = pow_neg(m as u64, s) * 0.5;
            let eta_m = match route {
                ExtrapolationRoute::AveragedPartialSums => eta_partial(m, s)?.value,
                ExtrapolationRoute::IdentityReconstruction => residual_eq4(m / 2, s)?.rhs,
            };
            // M even: ζ*_{M−1} = ζ*_M + M^{−s}
            Ok(eta_m + tail_half)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(richardson_table(&samples, |j| s + 1.0 + 2.0 * j as f64))
}

/// Eliminates error terms c_j·M^{−p_j} from samples taken at M, 2M, 4M, ….
/// Returns the most extrapolated entry.
pub fn richardson_table<F>(samples: &[ComplexValue], exponent: F) -> ComplexValue
where
    F: Fn(usize) -> ComplexValue,
{
    assert!(!samples.is_empty());
    let mut row = samples.to_vec();
    for j in 0..samples.len() - 1 {
        let factor = (exponent(j) * LN_2).exp();
        let denom = factor - 1.0;
        row = row
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / denom)
            .collect();
    }
    row[0]
}
