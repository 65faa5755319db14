//! Decay measurements for the defect d_N(s).
//!
//! A log–log least-squares fit of |d_N(s)| ≈ C·N^{−β} over an N ladder, and
//! a sweep of such fits across the critical strip 0 < Re(s) < 1. These are
//! measurements only; no interpretation is attached to the exponents.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::config::DEGENERACY_FLOOR;
use crate::error::{Error, Result};
use crate::identities::defect;
use crate::kernel::{ensure_finite, ComplexValue};
use crate::ladder::validate_ladder;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayFit {
    /// Fitted exponent β (the negated slope).
    pub beta: f64,
    /// Fitted ln C.
    pub log_c: f64,
    pub rms_residual: f64,
    pub points_used: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripSample {
    pub s: ComplexValue,
    pub fit: DecayFit,
}

/// d_N(s) for each N in the ladder, in ladder order.
pub fn defect_ladder(s: ComplexValue, ladder: &[usize]) -> Result<Vec<(usize, ComplexValue)>> {
    ensure_finite(s, "s")?;
    validate_ladder(ladder)?;
    ladder.par_iter().map(|&n| Ok((n, defect(n, s)?))).collect()
}

/// Ordinary least squares on (ln N, ln |d_N|).
pub fn fit_decay(samples: &[(usize, ComplexValue)]) -> Result<DecayFit> {
    fit_decay_with_floor(samples, DEGENERACY_FLOOR)
}

pub fn fit_decay_with_floor(samples: &[(usize, ComplexValue)], floor: f64) -> Result<DecayFit> {
    let ladder: Vec<usize> = samples.iter().map(|&(n, _)| n).collect();
    validate_ladder(&ladder)?;
    if let Some(&(n, d)) = samples
        .iter()
        .find(|(_, d)| d.norm() <= floor || d.norm().is_nan())
    {
        return Err(Error::DegenerateDefect { n, value: d.norm() });
    }

    let points: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(n, d)| ((n as f64).ln(), d.norm().ln()))
        .collect();
    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let (sxx, sxy) = points.iter().fold((0.0, 0.0), |(sxx, sxy), &(x, y)| {
        let dx = x - mean_x;
        (sxx + dx * dx, sxy + dx * (y - mean_y))
    });
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let sse: f64 = points
        .iter()
        .map(|&(x, y)| (y - intercept - slope * x).powi(2))
        .sum();

    Ok(DecayFit {
        beta: -slope,
        log_c: intercept,
        rms_residual: (sse / count).sqrt(),
        points_used: points.len(),
    })
}

/// One decay fit per σ at s = σ + it, ordered as the grid.
pub fn strip_sweep(sigma_grid: &[f64], t: f64, ladder: &[usize]) -> Result<Vec<StripSample>> {
    if !t.is_finite() {
        return Err(Error::NonFiniteInput("t"));
    }
    if let Some(&sigma) = sigma_grid.iter().find(|&&x| !(x > 0.0 && x < 1.0)) {
        return Err(Error::OutsideStrip(sigma));
    }
    if sigma_grid.is_empty() {
        return Ok(Vec::new());
    }
    validate_ladder(ladder)?;
    sigma_grid
        .par_iter()
        .map(|&sigma| {
            let s = Complex64::new(sigma, t);
            let samples = defect_ladder(s, ladder)?;
            Ok(StripSample {
                s,
                fit: fit_decay(&samples)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::doubling_ladder;
    use std::f64::consts::LN_2;

    fn c(re: f64, im: f64) -> ComplexValue {
        Complex64::new(re, im)
    }

    #[test]
    fn ladder_examples() {
        let rows = defect_ladder(c(1.0, 0.0), &[1, 2, 4]).unwrap();
        assert_eq!(rows[0].1.re, 0.1931471805599453);
        assert_eq!(rows[0].1.re, LN_2 - 0.5);
        assert!(rows[1].1.norm() < rows[0].1.norm() && rows[2].1.norm() < rows[1].1.norm());

        let zeros = defect_ladder(c(0.0, 0.0), &[3, 17, 400]).unwrap();
        assert!(zeros.iter().all(|(_, d)| d.norm() <= 4.0 * f64::EPSILON));

        let rows = defect_ladder(c(2.0, 0.0), &[1, 2, 4]).unwrap();
        assert!((rows[0].1.re - 0.25).abs() <= f64::EPSILON);
    }

    #[test]
    fn ladder_contract() {
        assert!(matches!(
            defect_ladder(c(1.0, 0.0), &[4, 2, 8]),
            Err(Error::LadderNotIncreasing { index: 1 })
        ));
        assert!(matches!(
            defect_ladder(c(1.0, 0.0), &[4, 8]),
            Err(Error::LadderTooShort { .. })
        ));
    }

    #[test]
    fn fits_unit_exponent() {
        let ladder = doubling_ladder(16, 1 << 14);
        let fit = fit_decay(&defect_ladder(c(1.0, 0.0), &ladder).unwrap()).unwrap();
        assert!((fit.beta - 1.0).abs() <= 0.05, "{fit:?}");
        assert_eq!(fit.points_used, 11);

        let fit = fit_decay(&defect_ladder(c(2.0, 0.0), &ladder).unwrap()).unwrap();
        assert!((fit.beta - 1.0).abs() <= 0.05, "{fit:?}");
        // C ≈ (1 − 2^{−2})/2 = 3/8
        assert!((fit.log_c.exp() - 0.375).abs() < 0.02, "{fit:?}");
    }

    #[test]
    fn exact_power_law_is_recovered() {
        let samples: Vec<_> = [2usize, 4, 8, 16]
            .iter()
            .map(|&n| (n, c(3.0 * (n as f64).powf(-1.5), 0.0)))
            .collect();
        let fit = fit_decay(&samples).unwrap();
        assert!((fit.beta - 1.5).abs() < 1e-12);
        assert!((fit.log_c - 3f64.ln()).abs() < 1e-12);
        assert!(fit.rms_residual < 1e-12);
    }

    #[test]
    fn degenerate_defect_at_zero_exponent() {
        let samples = defect_ladder(c(0.0, 0.0), &[16, 32, 64]).unwrap();
        let err = fit_decay(&samples).unwrap_err();
        assert!(matches!(err, Error::DegenerateDefect { n: 16, .. }));
        assert!(err
            .to_string()
            .starts_with("defect at machine-noise level; increase s or decrease N"));
    }

    #[test]
    fn sweep_examples() {
        let ladder = doubling_ladder(16, 1 << 12);
        let rows = strip_sweep(&[0.25, 0.5, 0.75], 0.0, &ladder).unwrap();
        assert_eq!(rows.len(), 3);
        for (row, sigma) in rows.iter().zip([0.25, 0.5, 0.75]) {
            assert_eq!(row.s.re, sigma);
            assert!((row.fit.beta - 1.0).abs() <= 0.1, "{row:?}");
        }
        assert!(strip_sweep(&[], 0.0, &ladder).unwrap().is_empty());
        assert_eq!(
            strip_sweep(&[0.5, 1.5], 0.0, &ladder).unwrap_err(),
            Error::OutsideStrip(1.5)
        );
        assert_eq!(
            strip_sweep(&[0.0], 0.0, &ladder).unwrap_err(),
            Error::OutsideStrip(0.0)
        );
    }
}
