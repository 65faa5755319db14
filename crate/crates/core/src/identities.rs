//! The integral ∫₀¹(1+x)^{−s}dx, its right-endpoint Riemann sum, the defect
//! d_N(s) between them, and residual checks of the three finite-sum
//! identities relating ζ*_{2N}, ζ_{2N}, ζ_N and the band sum.
//!
//! The identities are exact algebra, so every residual is pure rounding.
//! Each [`Residual`] carries a `scale`, the sum of magnitudes of all terms
//! that went into either side, against which `abs_diff` is judged.

use std::f64::consts::LN_2;

use num_complex::Complex64;

use crate::config::{SERIES_CUTOFF, SERIES_THRESHOLD};
use crate::error::Result;
use crate::kernel::{
    ensure_finite, expm1, pow_neg, pow_neg_real, sum_fixed_order, ComplexValue, SumResult,
    UNIT_ROUNDOFF,
};
use crate::partial_sums::{band_sum, check_terms, eta_partial, zeta_partial};

/// One evaluated identity instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub abs_diff: f64,
    /// Σ of magnitudes of all constituent terms.
    pub scale: f64,
}

impl Residual {
    fn new(lhs: ComplexValue, rhs: ComplexValue, scale: f64) -> Self {
        Self {
            lhs,
            rhs,
            abs_diff: (lhs - rhs).norm(),
            scale,
        }
    }

    /// `abs_diff ≤ tol · max(scale, 1)`.
    pub fn within(&self, tol: f64) -> bool {
        self.abs_diff <= tol * self.scale.max(1.0)
    }
}

/// ∫₀¹ (1+x)^{−s} dx in closed form.
///
/// Away from s = 1 this is (1 − 2^{1−s})/(s − 1), with the numerator taken
/// through a complex expm1. Within [`SERIES_THRESHOLD`] of s = 1 it is
/// ln 2 · (1 − e^{−u})/u, u = (s − 1) ln 2, summed as a power series.
pub fn integral_closed_form(s: ComplexValue) -> ComplexValue {
    let w = s - 1.0;
    if w.norm() < SERIES_THRESHOLD {
        integral_series(s)
    } else {
        integral_direct(s)
    }
}

pub(crate) fn integral_direct(s: ComplexValue) -> ComplexValue {
    let w = s - 1.0;
    -expm1(-w * LN_2) / w
}

/// ln 2 · Σ_{j≥0} (−u)^j / (j+1)!
pub(crate) fn integral_series(s: ComplexValue) -> ComplexValue {
    let u = (s - 1.0) * LN_2;
    let mut term = Complex64::new(1.0, 0.0);
    let mut acc = term;
    for j in 1..64 {
        term *= -u / (j + 1) as f64;
        acc += term;
        if term.norm() < SERIES_CUTOFF * acc.norm() {
            break;
        }
    }
    acc * LN_2
}

/// (1/N) Σ_{k=1}^{N} (1 + k/N)^{−s}, nodes in ascending k.
pub fn riemann_sum(n: usize, s: ComplexValue) -> Result<SumResult> {
    check_terms(n)?;
    ensure_finite(s, "s")?;
    let nf = n as f64;
    let raw = sum_fixed_order((1..=n).map(|k| pow_neg_real(1.0 + k as f64 / nf, s)))?;
    let value = raw.value / nf;
    Ok(SumResult {
        value,
        err_bound: raw.err_bound / nf + UNIT_ROUNDOFF * value.norm(),
        terms: raw.terms,
        magnitude: raw.magnitude / nf,
    })
}

/// d_N(s) = ∫₀¹(1+x)^{−s}dx − (1/N) Σ_{k=1}^{N} (1 + k/N)^{−s}.
pub fn defect(n: usize, s: ComplexValue) -> Result<ComplexValue> {
    let r = riemann_sum(n, s)?;
    Ok(integral_closed_form(s) - r.value)
}

/// Every sum and factor the three identities are assembled from.
#[derive(Debug, Clone, Copy)]
struct IdentityTerms {
    eta_2n: SumResult,
    zeta_2n: SumResult,
    zeta_n: SumResult,
    band: SumResult,
    riemann: SumResult,
    integral: ComplexValue,
    defect: ComplexValue,
    /// 2^{1−s}
    two_pow: ComplexValue,
    /// (2N)^{1−s}, evaluated directly rather than as 2^{1−s}·N^{1−s}
    two_n_pow: ComplexValue,
}

impl IdentityTerms {
    fn compute(n: usize, s: ComplexValue) -> Result<Self> {
        check_terms(2 * n)?;
        let riemann = riemann_sum(n, s)?;
        let integral = integral_closed_form(s);
        let two_pow = pow_neg(2, s - 1.0);
        let two_n_pow = pow_neg(2 * n as u64, s - 1.0);
        ensure_finite(two_pow, "2^(1-s)")?;
        ensure_finite(two_n_pow, "(2N)^(1-s)")?;
        Ok(Self {
            eta_2n: eta_partial(2 * n, s)?,
            zeta_2n: zeta_partial(2 * n, s)?,
            zeta_n: zeta_partial(n, s)?,
            band: band_sum(n, s)?,
            riemann,
            integral,
            defect: integral - riemann.value,
            two_pow,
            two_n_pow,
        })
    }

    fn factor(&self) -> ComplexValue {
        1.0 - self.two_pow
    }

    /// Σ|terms| of (1 − 2^{1−s})·ζ_{2N}, counting both pieces of the factor.
    fn factor_scale(&self) -> f64 {
        (1.0 + self.two_pow.norm()) * self.zeta_2n.magnitude
    }

    fn eq2(&self) -> Residual {
        let lhs = self.eta_2n.value - self.zeta_2n.value;
        let rhs = -self.two_pow * self.zeta_n.value;
        let scale = self.eta_2n.magnitude
            + self.zeta_2n.magnitude
            + self.two_pow.norm() * self.zeta_n.magnitude;
        Residual::new(lhs, rhs, scale)
    }

    fn eq3(&self) -> Residual {
        let lhs = self.eta_2n.value;
        let rhs = self.factor() * self.zeta_2n.value + self.two_pow * self.band.value;
        let scale =
            self.eta_2n.magnitude + self.factor_scale() + self.two_pow.norm() * self.band.magnitude;
        Residual::new(lhs, rhs, scale)
    }

    fn eq4(&self) -> Residual {
        let lhs = self.eta_2n.value;
        let rhs =
            self.factor() * self.zeta_2n.value + self.two_n_pow * (self.integral - self.defect);
        let budget = self.integral.norm() + self.defect.norm() + self.riemann.magnitude;
        let scale = self.eta_2n.magnitude + self.factor_scale() + self.two_n_pow.norm() * budget;
        Residual::new(lhs, rhs, scale)
    }
}

/// ζ*_{2N}(s) − ζ_{2N}(s) = −2^{1−s} ζ_N(s).
pub fn residual_eq2(n: usize, s: ComplexValue) -> Result<Residual> {
    Ok(IdentityTerms::compute(n, s)?.eq2())
}

/// ζ*_{2N}(s) = (1 − 2^{1−s}) ζ_{2N}(s) + 2^{1−s} Σ_{n=N+1}^{2N} n^{−s}.
pub fn residual_eq3(n: usize, s: ComplexValue) -> Result<Residual> {
    Ok(IdentityTerms::compute(n, s)?.eq3())
}

/// ζ*_{2N}(s) = (1 − 2^{1−s}) ζ_{2N}(s) + (2N)^{1−s} {∫₀¹(1+x)^{−s}dx − d_N(s)}.
pub fn residual_eq4(n: usize, s: ComplexValue) -> Result<Residual> {
    Ok(IdentityTerms::compute(n, s)?.eq4())
}

/// All three residuals for one (N, s), sharing the underlying sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualSet {
    pub eq2: Residual,
    pub eq3: Residual,
    pub eq4: Residual,
}

impl ResidualSet {
    pub fn as_array(&self) -> [(&'static str, Residual); 3] {
        [("eq2", self.eq2), ("eq3", self.eq3), ("eq4", self.eq4)]
    }

    pub fn within(&self, tol: f64) -> bool {
        self.as_array().iter().all(|(_, r)| r.within(tol))
    }
}

pub fn residuals(n: usize, s: ComplexValue) -> Result<ResidualSet> {
    let terms = IdentityTerms::compute(n, s)?;
    Ok(ResidualSet {
        eq2: terms.eq2(),
        eq3: terms.eq3(),
        eq4: terms.eq4(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ulps_between;

    fn c(re: f64, im: f64) -> ComplexValue {
        Complex64::new(re, im)
    }

    #[test]
    fn integral_examples() {
        assert_eq!(integral_closed_form(c(1.0, 0.0)), c(LN_2, 0.0));
        let at_zero = integral_closed_form(c(0.0, 0.0));
        assert!(ulps_between(at_zero.re, 1.0) <= 1 && at_zero.im == 0.0);
        let at_two = integral_closed_form(c(2.0, 0.0));
        assert!(ulps_between(at_two.re, 0.5) <= 1 && at_two.im == 0.0);
    }

    #[test]
    fn integral_branches_meet_at_threshold() {
        for angle in [0.0, 0.7, 1.9, 3.1, 4.4, 5.5] {
            for r in [
                SERIES_THRESHOLD * (1.0 - 1e-3),
                SERIES_THRESHOLD * (1.0 + 1e-3),
            ] {
                let s = c(1.0 + r * f64::cos(angle), r * f64::sin(angle));
                let d = integral_direct(s);
                let ser = integral_series(s);
                assert!((d - ser).norm() <= 1e-14, "{s}: {d} vs {ser}");
                assert!(ulps_between(d.re, ser.re) <= 8, "{s}: {d} vs {ser}");
            }
        }
    }

    #[test]
    fn riemann_sum_examples() {
        assert_eq!(riemann_sum(1, c(1.0, 0.0)).unwrap().value, c(0.5, 0.0));
        assert_eq!(riemann_sum(2, c(0.0, 0.0)).unwrap().value, c(1.0, 0.0));
        // (1/2)(2/3 + 1/2) = 7/12
        let r = riemann_sum(2, c(1.0, 0.0)).unwrap();
        assert!((r.value.re - 7.0 / 12.0).abs() <= r.err_bound + f64::EPSILON);
    }

    #[test]
    fn defect_examples() {
        let d = defect(1, c(1.0, 0.0)).unwrap();
        assert_eq!(d, c(LN_2 - 0.5, 0.0));
        assert_eq!(d.re, 0.1931471805599453);
        for n in [1, 7, 100, 4096] {
            assert!(defect(n, c(0.0, 0.0)).unwrap().norm() <= 4.0 * f64::EPSILON);
        }
        let d = defect(1, c(2.0, 0.0)).unwrap();
        assert!((d.re - 0.25).abs() <= f64::EPSILON && d.im == 0.0);
    }

    #[test]
    fn eq2_examples() {
        let r = residual_eq2(1, c(0.0, 0.0)).unwrap();
        assert_eq!(r.lhs, c(-2.0, 0.0));
        assert_eq!(r.rhs, c(-2.0, 0.0));
        assert_eq!(r.abs_diff, 0.0);
        let r = residual_eq2(5, c(1.0, 0.0)).unwrap();
        assert!(r.abs_diff <= 1e-14 * r.scale, "{r:?}");
        let r = residual_eq2(100, c(0.5, 14.1)).unwrap();
        assert!(r.abs_diff <= 1e-12 * r.scale, "{r:?}");
    }

    #[test]
    fn eq3_examples() {
        let r = residual_eq3(1, c(0.0, 0.0)).unwrap();
        assert_eq!(r.abs_diff, 0.0);
        let r = residual_eq3(1, c(1.0, 0.0)).unwrap();
        assert_eq!(r.lhs, c(0.5, 0.0));
        assert!(r.abs_diff <= 1e-15 * r.scale);
        let r = residual_eq3(64, c(2.0, 3.0)).unwrap();
        assert!(r.abs_diff <= 1e-12 * r.scale, "{r:?}");
    }

    #[test]
    fn eq4_examples() {
        let r = residual_eq4(1, c(1.0, 0.0)).unwrap();
        assert_eq!(r.lhs, c(0.5, 0.0));
        assert!((r.rhs - c(0.5, 0.0)).norm() <= 1e-15);
        assert!(r.abs_diff <= 1e-15);
        let r = residual_eq4(1, c(0.0, 0.0)).unwrap();
        assert!(r.abs_diff <= 4.0 * f64::EPSILON, "{r:?}");
        let r = residual_eq4(1000, c(0.5, 0.0)).unwrap();
        assert!(r.abs_diff <= 1e-11 * r.scale, "{r:?}");
    }

    #[test]
    fn residual_set_matches_individual_calls() {
        let s = c(-2.0, 25.0);
        let set = residuals(37, s).unwrap();
        assert_eq!(set.eq2, residual_eq2(37, s).unwrap());
        assert_eq!(set.eq3, residual_eq3(37, s).unwrap());
        assert_eq!(set.eq4, residual_eq4(37, s).unwrap());
        assert!(set.within(1e-12));
    }

    #[test]
    fn eq4_uses_an_independent_power() {
        // (2N)^{1−s} and 2^{1−s}·N^{1−s} round differently for generic s,
        // so eq4 is not eq3 in disguise.
        let s = c(0.5, 14.1);
        let differs = (2..200u64).any(|n| {
            let direct = pow_neg(2 * n, s - 1.0);
            let factored = pow_neg(2, s - 1.0) * pow_neg(n, s - 1.0);
            direct != factored
        });
        assert!(differs);
    }
}
