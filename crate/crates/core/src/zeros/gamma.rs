//! ln|Γ(z)| for Re(z) > 0, used only to size the oracle's remainder bound.

use std::f64::consts::PI;

use num_complex::Complex64;

// B_{2j} / (2j (2j − 1)), j = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// ln|Γ(z)| by the Stirling series after shifting |z| past 20.
pub fn ln_abs_gamma(z: Complex64) -> f64 {
    debug_assert!(z.re > 0.0);
    let mut w = z;
    let mut shift = 0.0;
    while w.norm() < 20.0 {
        shift += w.norm().ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for coeff in STIRLING {
        series += pow * coeff;
        pow *= inv2;
    }
    let main = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series;
    main.re - shift
}
