use altzeta::config::{Tolerances, MIN_LADDER};
use altzeta::kernel::ComplexValue;
use altzeta::{
    defect, defect_ladder, doubling_ladder, eta_partial, eta_reference, integral_closed_form,
    residuals, strip_sweep, zero_check, zero_point, zeta_partial, Error,
};
use num_complex::Complex64;

use crate::csv::{g17, Table};

/// Whether computed checks met their tolerances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

pub type CommandResult = Result<(String, Outcome), Error>;

/// First N of the convergence ladders.
pub const LADDER_START: usize = 16;

fn preamble(table: &mut Table, command: &str, params: &str, tol: &Tolerances) {
    table.comment(format!("altzeta {command} {params}"));
    table.comment(format!(
        "tolerances residual={} reference={} degeneracy_floor={} series_threshold={} max_terms={} max_oracle_terms={}",
        g17(tol.residual),
        g17(tol.reference),
        g17(tol.degeneracy_floor),
        g17(tol.series_threshold),
        tol.max_terms,
        tol.max_oracle_terms,
    ));
}

fn point(sigma: f64, t: f64) -> ComplexValue {
    Complex64::new(sigma, t)
}

fn complex_fields(z: ComplexValue) -> [String; 2] {
    [g17(z.re), g17(z.im)]
}

pub fn eval(sigma: f64, t: f64, n: usize, tol: &Tolerances) -> CommandResult {
    altzeta::partial_sums::check_terms_with(n, tol.max_terms)?;
    let s = point(sigma, t);
    let zeta = zeta_partial(n, s)?.value;
    let eta = eta_partial(n, s)?.value;
    let d = defect(n, s)?;
    let integral = integral_closed_form(s);

    let mut table = Table::new();
    preamble(
        &mut table,
        "eval",
        &format!("sigma={} t={} n={n}", g17(sigma), g17(t)),
        tol,
    );
    table.row([
        "n",
        "zeta_re",
        "zeta_im",
        "eta_re",
        "eta_im",
        "defect_re",
        "defect_im",
        "integral_re",
        "integral_im",
    ]);
    let mut row = vec![n.to_string()];
    for z in [zeta, eta, d, integral] {
        row.extend(complex_fields(z));
    }
    table.row(row);
    Ok((table.into_string(), Outcome::Pass))
}

pub fn residuals_cmd(sigma: f64, t: f64, n_max: usize, tol: &Tolerances) -> CommandResult {
    altzeta::partial_sums::check_terms_with(2 * n_max, tol.max_terms)?;
    let s = point(sigma, t);
    let mut table = Table::new();
    preamble(
        &mut table,
        "residuals",
        &format!("sigma={} t={} n_max={n_max}", g17(sigma), g17(t)),
        tol,
    );
    table.row([
        "n", "identity", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_diff", "scale", "pass",
    ]);
    let mut outcome = Outcome::Pass;
    for n in doubling_ladder(1, n_max) {
        for (name, r) in residuals(n, s)?.as_array() {
            let pass = r.within(tol.residual);
            if !pass {
                outcome = Outcome::Fail;
            }
            let mut row = vec![n.to_string(), name.to_string()];
            row.extend(complex_fields(r.lhs));
            row.extend(complex_fields(r.rhs));
            row.push(g17(r.abs_diff));
            row.push(g17(r.scale));
            row.push(pass.to_string());
            table.row(row);
        }
    }
    Ok((table.into_string(), outcome))
}

pub fn zeros(k: i64, n_max: usize, tol: &Tolerances) -> CommandResult {
    let p = zero_point(k)?;
    altzeta::partial_sums::check_terms_with(2 * n_max, tol.max_terms)?;
    let ladder = doubling_ladder(1, n_max);
    if ladder.len() < MIN_LADDER {
        return Err(Error::LadderTooShort {
            len: ladder.len(),
            min: MIN_LADDER,
        });
    }

    let mut table = Table::new();
    preamble(
        &mut table,
        "zeros",
        &format!(
            "k={k} n_max={n_max} sigma={} t={}",
            g17(p.s.re),
            g17(p.s.im)
        ),
        tol,
    );
    table.row(["kind", "n", "eta_abs", "identity_diff", "defect_abs"]);
    let mut decreasing = true;
    let mut prev = f64::INFINITY;
    for n in ladder {
        let z = zero_check(k, n)?;
        decreasing &= z.magnitude < prev;
        prev = z.magnitude;
        table.row([
            "partial".to_string(),
            n.to_string(),
            g17(z.magnitude),
            g17(z.identity_diff),
            g17(z.defect.norm()),
        ]);
    }
    let reference = eta_reference(p.s, tol.reference)?.norm();
    table.row([
        "reference".to_string(),
        String::new(),
        g17(reference),
        String::new(),
        String::new(),
    ]);
    let pass = decreasing && reference <= tol.reference;
    Ok((
        table.into_string(),
        if pass { Outcome::Pass } else { Outcome::Fail },
    ))
}

pub fn converge(sigma: f64, t: f64, n_max: usize, tol: &Tolerances) -> CommandResult {
    altzeta::partial_sums::check_terms_with(n_max, tol.max_terms)?;
    let s = point(sigma, t);
    let samples = defect_ladder(s, &doubling_ladder(LADDER_START, n_max))?;
    let fit = altzeta::convergence::fit_decay_with_floor(&samples, tol.degeneracy_floor)?;

    let mut table = Table::new();
    preamble(
        &mut table,
        "converge",
        &format!("sigma={} t={} n_max={n_max}", g17(sigma), g17(t)),
        tol,
    );
    table.row([
        "n",
        "defect_re",
        "defect_im",
        "defect_abs",
        "n_times_defect_abs",
    ]);
    for (n, d) in &samples {
        let mut row = vec![n.to_string()];
        row.extend(complex_fields(*d));
        row.push(g17(d.norm()));
        row.push(g17(*n as f64 * d.norm()));
        table.row(row);
    }
    let lead = (1.0 - altzeta::pow_neg(2, s)) / 2.0;
    table.comment(format!(
        "fit beta={} log_c={} rms_residual={} points_used={}",
        g17(fit.beta),
        g17(fit.log_c),
        g17(fit.rms_residual),
        fit.points_used
    ));
    table.comment(format!(
        "leading_constant re={} im={}",
        g17(lead.re),
        g17(lead.im)
    ));
    Ok((table.into_string(), Outcome::Pass))
}

/// σ_min, σ_min + step, … ≤ σ_max, each point computed from its index.
pub fn sigma_grid(min: f64, max: f64, step: f64) -> Vec<f64> {
    assert!(step > 0.0);
    let slack = 1e-9 * step;
    (0..)
        .map(|i| min + i as f64 * step)
        .take_while(|&x| x <= max + slack)
        .collect()
}

pub fn sweep(
    sigma_min: f64,
    sigma_max: f64,
    sigma_step: f64,
    t: f64,
    n_max: usize,
    tol: &Tolerances,
) -> CommandResult {
    altzeta::partial_sums::check_terms_with(n_max, tol.max_terms)?;
    let grid = sigma_grid(sigma_min, sigma_max, sigma_step);
    let rows = strip_sweep(&grid, t, &doubling_ladder(LADDER_START, n_max))?;

    let mut table = Table::new();
    preamble(
        &mut table,
        "sweep",
        &format!(
            "sigma_min={} sigma_max={} sigma_step={} t={} n_max={n_max}",
            g17(sigma_min),
            g17(sigma_max),
            g17(sigma_step),
            g17(t)
        ),
        tol,
    );
    table.row(["sigma", "t", "beta", "logC", "rms_residual", "points_used"]);
    for r in rows {
        table.row([
            g17(r.s.re),
            g17(r.s.im),
            g17(r.fit.beta),
            g17(r.fit.log_c),
            g17(r.fit.rms_residual),
            r.fit.points_used.to_string(),
        ]);
    }
    Ok((table.into_string(), Outcome::Pass))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data_rows(csv: &str) -> Vec<Vec<String>> {
        csv.lines()
            .filter(|l| !l.starts_with('#'))
            .skip(1)
            .map(|l| l.split(',').map(str::to_string).collect())
            .collect()
    }

    #[test]
    fn eval_rows() {
        let tol = Tolerances::default();
        let (out, _) = eval(1.0, 0.0, 2, &tol).unwrap();
        let row = &data_rows(&out)[0];
        assert_eq!(row[1], "1.5");
        assert_eq!(row[3], "0.5");

        let (out, _) = eval(0.0, 0.0, 3, &tol).unwrap();
        let row = &data_rows(&out)[0];
        assert_eq!(
            (row[1].as_str(), row[3].as_str(), row[5].as_str()),
            ("3", "1", "0")
        );

        let (out, _) = eval(1.0, 0.0, 1, &tol).unwrap();
        assert_eq!(data_rows(&out)[0][5], "0.19314718055994529");
    }

    #[test]
    fn residual_rows() {
        let tol = Tolerances::default();
        let (out, outcome) = residuals_cmd(1.0, 0.0, 1, &tol).unwrap();
        assert_eq!(outcome, Outcome::Pass);
        let eq4 = data_rows(&out).into_iter().find(|r| r[1] == "eq4").unwrap();
        assert_eq!(eq4[2], "0.5");

        let strict = Tolerances {
            residual: 0.0,
            ..tol
        };
        let (_, outcome) = residuals_cmd(0.5, 14.1, 64, &strict).unwrap();
        assert_eq!(outcome, Outcome::Fail);
    }

    #[test]
    fn grid_spacing() {
        let g = sigma_grid(0.1, 0.9, 0.1);
        assert_eq!(g.len(), 9);
        assert_eq!(g[0], 0.1);
        assert!((g[8] - 0.9).abs() < 1e-15);
        assert!(sigma_grid(0.5, 0.4, 0.1).is_empty());
    }

    #[test]
    fn zeros_rejects_excluded_point() {
        assert_eq!(
            zeros(0, 64, &Tolerances::default()).unwrap_err(),
            Error::ExcludedPoint
        );
    }
}
