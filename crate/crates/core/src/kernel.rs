//! Deterministic complex primitives: the power term n^{−s} and fixed-order
//! compensated summation.
//!
//! Everything downstream is built from these two pieces. Results depend only
//! on the inputs and the order in which terms are supplied.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A complex number in binary64. Houses s = σ + it and every sum value.
pub type ComplexValue = Complex64;

/// Unit roundoff of binary64.
pub const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

/// Value of a finite sum together with its rounding budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumResult {
    pub value: ComplexValue,
    /// First-order bound on the accumulated rounding error of `value`.
    pub err_bound: f64,
    /// Number of terms actually summed.
    pub terms: usize,
    /// Σ|term|, the magnitude budget used for relative comparisons.
    pub magnitude: f64,
}

impl SumResult {
    pub const EMPTY: SumResult = SumResult {
        value: Complex64::new(0.0, 0.0),
        err_bound: 0.0,
        terms: 0,
        magnitude: 0.0,
    };
}

/// Neumaier-compensated accumulator, one per component.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    re: f64,
    re_comp: f64,
    im: f64,
    im_comp: f64,
    abs_components: f64,
    magnitude: f64,
    terms: usize,
}

#[inline]
fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one term. The caller guarantees finiteness; see [`sum_fixed_order`].
    #[inline]
    pub fn add(&mut self, z: ComplexValue) {
        neumaier(&mut self.re, &mut self.re_comp, z.re);
        neumaier(&mut self.im, &mut self.im_comp, z.im);
        self.abs_components += z.re.abs() + z.im.abs();
        self.magnitude += z.norm();
        self.terms += 1;
    }

    pub fn value(&self) -> ComplexValue {
        Complex64::new(self.re + self.re_comp, self.im + self.im_comp)
    }

    pub fn finish(&self) -> SumResult {
        let u = UNIT_ROUNDOFF;
        let n = self.terms as f64;
        SumResult {
            value: self.value(),
            err_bound: (2.0 * u + 2.0 * n * u * u) * self.abs_components,
            terms: self.terms,
            magnitude: self.magnitude,
        }
    }
}

/// Sums `terms` in the order given with compensated accumulation.
///
/// Fails on the first non-finite term, reporting its index.
pub fn sum_fixed_order<I>(terms: I) -> Result<SumResult>
where
    I: IntoIterator<Item = ComplexValue>,
{
    let mut acc = CompensatedSum::new();
    for (index, z) in terms.into_iter().enumerate() {
        if !z.is_finite() {
            return Err(Error::NonFiniteTerm { index });
        }
        acc.add(z);
    }
    Ok(acc.finish())
}

/// n^{−s} = exp(−s·ln n).
///
/// The modulus is taken as n^{−σ} from the real power function and the
/// phase as −t·ln n. The phase is evaluated at |t| and its sign applied
/// afterwards, so conjugating s conjugates the result bit for bit.
#[inline]
pub fn pow_neg(n: u64, s: ComplexValue) -> ComplexValue {
    debug_assert!(n >= 1);
    pow_neg_real(n as f64, s)
}

/// x^{−s} for a positive real base.
#[inline]
pub fn pow_neg_real(x: f64, s: ComplexValue) -> ComplexValue {
    debug_assert!(x > 0.0 && s.is_finite());
    let modulus = x.powf(-s.re);
    if s.im == 0.0 {
        return Complex64::new(modulus, 0.0);
    }
    let (sin, cos) = (s.im.abs() * x.ln()).sin_cos();
    let im = if s.im > 0.0 { -sin } else { sin };
    Complex64::new(modulus * cos, modulus * im)
}

/// e^{−iθ} with θ = t·ln n, the unimodular factor n^{−it}.
#[inline]
pub fn unit_phase(n: u64, t: f64) -> ComplexValue {
    pow_neg(n, Complex64::new(0.0, t))
}

/// e^z − 1 without cancellation near z = 0.
pub fn expm1(z: ComplexValue) -> ComplexValue {
    let em1 = z.re.exp_m1();
    let (sin, cos) = z.im.sin_cos();
    let half = (0.5 * z.im).sin();
    // e^x cos y − 1 = expm1(x)·cos y − 2 sin²(y/2)
    Complex64::new(em1 * cos - 2.0 * half * half, z.re.exp() * sin)
}

pub fn ensure_finite(z: ComplexValue, what: &'static str) -> Result<()> {
    if z.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteInput(what))
    }
}

/// Distance between two finite doubles in units in the last place.
pub fn ulps_between(a: f64, b: f64) -> u64 {
    fn ordered(x: f64) -> i64 {
        let bits = x.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    }
    ordered(a).abs_diff(ordered(b))
}
