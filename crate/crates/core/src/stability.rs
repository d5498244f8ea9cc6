//! Numerical Hurwitz-stability oracle.
//!
//! Finds every complex root with Aberth–Ehrlich simultaneous iteration and
//! compares real parts against a margin. It shares no code path with the
//! determinant criteria, which is what makes it useful as a cross-check.

use num::complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::poly::{to_f64, Polynomial};
use crate::transform::require_degree;

pub const MAX_ITERATIONS: usize = 2000;
/// Relative margin; multiplied by the Cauchy bound of the monic polynomial.
pub const RELATIVE_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StabilityVerdict {
    #[serde(rename = "STABLE")]
    Stable,
    #[serde(rename = "NOT_STABLE")]
    NotStable,
    #[serde(rename = "INDETERMINATE")]
    Indeterminate,
}

impl StabilityVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            StabilityVerdict::Stable => "STABLE",
            StabilityVerdict::NotStable => "NOT_STABLE",
            StabilityVerdict::Indeterminate => "INDETERMINATE",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootApproximation {
    pub roots: Vec<Complex64>,
    pub converged: bool,
    pub iterations: usize,
    /// Cauchy bound of the monic polynomial, used to scale tolerances.
    pub scale: f64,
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Rounding-error bound for evaluating `coeffs` at `z` with Horner.
fn eval_error_bound(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let abs_sum = coeffs.iter().fold(0.0, |acc, c| acc * r + c.abs());
    4.0 * coeffs.len() as f64 * f64::EPSILON * abs_sum
}

/// Approximates all complex roots of `p`.
pub fn aberth_roots(p: &Polynomial) -> Result<RootApproximation> {
    require_degree(p, 1)?;
    let monic = p.monic();
    let coeffs: Vec<f64> = monic.coeffs().iter().map(to_f64).collect();
    let n = monic.degree();
    let scale = to_f64(&monic.cauchy_bound());

    // initial guesses on a circle of radius ~ geometric-mean root modulus
    let radius = coeffs[n].abs().powf(1.0 / n as f64).max(1e-3 * scale).min(scale);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];

    for it in 0..MAX_ITERATIONS {
        if done.iter().all(|&d| d) {
            return Ok(RootApproximation { roots: z, converged: true, iterations: it, scale });
        }
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (pv, dpv) = horner(&coeffs, z[i]);
            if pv.norm() <= eval_error_bound(&coeffs, z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = pv / dpv;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE) {
                done[i] = true;
            }
        }
    }
    let converged = done.iter().all(|&d| d);
    Ok(RootApproximation { roots: z, converged, iterations: MAX_ITERATIONS, scale })
}

/// Three-valued Hurwitz stability verdict with margin `1e-9 * scale`.
pub fn stability_oracle(p: &Polynomial) -> Result<StabilityVerdict> {
    let approx = aberth_roots(p)?;
    if !approx.converged {
        return Ok(StabilityVerdict::Indeterminate);
    }
    let margin = RELATIVE_MARGIN * approx.scale;
    if approx.roots.iter().any(|z| z.re > margin) {
        Ok(StabilityVerdict::NotStable)
    } else if approx.roots.iter().all(|z| z.re < -margin) {
        Ok(StabilityVerdict::Stable)
    } else {
        Ok(StabilityVerdict::Indeterminate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Polynomial {
        text.parse().unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(stability_oracle(&p("1 1 2")).unwrap(), StabilityVerdict::Stable);
        assert_eq!(stability_oracle(&p("1 0 1")).unwrap(), StabilityVerdict::Indeterminate);
        assert_eq!(stability_oracle(&p("1 -1")).unwrap(), StabilityVerdict::NotStable);
        assert_eq!(stability_oracle(&p("1 2 1")).unwrap(), StabilityVerdict::Stable);
        assert_eq!(stability_oracle(&p("1 2 5 6")).unwrap(), StabilityVerdict::Stable);
        assert_eq!(stability_oracle(&p("1 -2 -5 6")).unwrap(), StabilityVerdict::NotStable);
        assert!(stability_oracle(&p("3")).is_err());
    }

    #[test]
    fn roots_of_cubic() {
        let approx = aberth_roots(&p("1 -2 -5 6")).unwrap();
        assert!(approx.converged);
        let mut re: Vec<f64> = approx.roots.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        for (got, want) in re.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn zero_root_is_not_stable() {
        assert_eq!(stability_oracle(&p("1 1 0")).unwrap(), StabilityVerdict::Indeterminate);
    }
}
