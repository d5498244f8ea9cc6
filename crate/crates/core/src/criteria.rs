//! Determinant and Hankel criteria for self-interlacing and stability, and
//! the consolidated classification report that cross-checks them against
//! the root oracles.
//!
//! Every criterion accepts `a_0 < 0` and negates first. A vanishing minor
//! makes a criterion return `false`; `classify` reports it as a boundary
//! case.

use std::collections::BTreeMap;

use num::complex::Complex64;
use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::hankel::{r_function, r_hankel};
use crate::hurwitz::{delta, has_zero_minor, leading_minors};
use crate::poly::{neg_one_pow, rational_str, Polynomial, Rational};
use crate::roots::{isolate_real_roots, refine, si_oracle, IsolatingInterval, SiKind, SiVerdict};
use crate::stability::{stability_oracle, StabilityVerdict};
use crate::transform::{dual, even_odd_split, reflect, require_degree};

fn normalized(p: &Polynomial) -> Result<Polynomial> {
    require_degree(p, 1)?;
    Ok(p.with_positive_leading().0)
}

/// `(-1)^{j(j+1)/2} a_j` for `j = 0..n`, i.e. the coefficients of `dual(p)`.
fn stodola_terms(p: &Polynomial) -> Vec<Rational> {
    (0..=p.degree()).map(|j| neg_one_pow(j * (j + 1) / 2) * p.a(j)).collect()
}

/// `(-1)^j Δ_{2j-1}` for `j = 1..l`.
fn odd_minor_terms(deltas: &[Rational], l: usize) -> Vec<Rational> {
    (1..=l).map(|j| neg_one_pow(j) * delta(deltas, 2 * j as i64 - 1)).collect()
}

/// `(-1)^{j(j+1)/2} D_j(R)` for `j = 1..n`.
fn signed_r_minors(d: &[Rational]) -> Vec<Rational> {
    d.iter().enumerate().map(|(i, x)| neg_one_pow((i + 1) * (i + 2) / 2) * x).collect()
}

fn all_positive(xs: &[Rational]) -> bool {
    xs.iter().all(|x| x.is_positive())
}

/// Sign pattern `(-1)^{j(j+1)/2} a_j > 0` for `j = 0..n`, necessary for kind I.
pub fn stodola_check(p: &Polynomial) -> Result<bool> {
    Ok(all_positive(&stodola_terms(&normalized(p)?)))
}

/// `(-1)^j Δ_{2j-1} > 0` for `j = 1..l` and `Δ_{2j} > 0` for `j = 1..r`.
pub fn si_hurwitz_criterion(p: &Polynomial) -> Result<bool> {
    let p = normalized(p)?;
    let deltas = leading_minors(&p)?;
    let even = (1..=p.r()).map(|j| delta(&deltas, 2 * j as i64)).collect::<Vec<_>>();
    Ok(all_positive(&odd_minor_terms(&deltas, p.l())) && all_positive(&even))
}

/// `(-1)^j Δ_{2j-1} > 0` for `j = 1..l` and `(-1)^j a_{2j} > 0` for `j = 1..r`.
pub fn si_lienard_chipart(p: &Polynomial) -> Result<bool> {
    let p = normalized(p)?;
    let deltas = leading_minors(&p)?;
    let coeffs = (1..=p.r()).map(|j| neg_one_pow(j) * p.a(2 * j)).collect::<Vec<_>>();
    Ok(all_positive(&odd_minor_terms(&deltas, p.l())) && all_positive(&coeffs))
}

/// `Δ_j > 0` for `j = 1..n`.
pub fn hurwitz_classic(p: &Polynomial) -> Result<bool> {
    Ok(all_positive(&leading_minors(&normalized(p)?)?))
}

/// `(-1)^{j(j+1)/2} D_j(R) > 0` for `j = 1..n`.
pub fn stability_hankel_criterion(p: &Polynomial) -> Result<bool> {
    let h = r_hankel(&normalized(p)?)?;
    Ok(all_positive(&signed_r_minors(&h.d)))
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscProbe {
    pub samples: usize,
    pub evaluated: usize,
    pub max_abs: f64,
    pub below_one: bool,
}

/// Deterministic sample points in the open right half-plane, spread over
/// several orders of magnitude in both coordinates.
pub fn rhp_sample_points(samples: usize) -> Vec<Complex64> {
    // additive recurrences with irrational steps fill the unit square evenly
    const A: f64 = 0.618_033_988_749_894_9;
    const B: f64 = 0.754_877_666_246_692_7;
    (0..samples)
        .map(|k| {
            let u = (0.5 + k as f64 * A).fract();
            let v = (0.5 + k as f64 * B).fract();
            let x = 10f64.powf(-3.0 + 6.0 * u);
            let y = (2.0 * v - 1.0) * 10f64.powf(-3.0 + 6.0 * v.max(1.0 - v));
            Complex64::new(x, y)
        })
        .collect()
}

/// Largest `|R(z)|` over `points`; poles and non-finite values are skipped.
pub fn max_abs_r(p: &Polynomial, points: &[Complex64]) -> Result<DiscProbe> {
    let r = r_function(p)?;
    let mut max_abs = 0.0f64;
    let mut evaluated = 0;
    for &z in points {
        let v = r.eval_f64(z).norm();
        if v.is_finite() {
            max_abs = max_abs.max(v);
            evaluated += 1;
        }
    }
    Ok(DiscProbe { samples: points.len(), evaluated, max_abs, below_one: max_abs < 1.0 })
}

/// Advisory float check that `R` maps the right half-plane into the unit disc.
pub fn rhp_unit_disc_probe(p: &Polynomial, samples: usize) -> Result<DiscProbe> {
    max_abs_r(p, &rhp_sample_points(samples))
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityResidual {
    pub interval: IsolatingInterval,
    #[serde(with = "rational_str")]
    pub midpoint: Rational,
    /// `min(|Re q(it) - Im q(it)|, |Re q(it) + Im q(it)|)` at the midpoint
    #[serde(with = "rational_str")]
    pub residual: Rational,
    /// Mean-value constant `C`; the check is `residual <= C * width`.
    #[serde(with = "rational_str")]
    pub constant: Rational,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    #[serde(with = "rational_str")]
    pub width: Rational,
    pub roots: Vec<DualityResidual>,
    pub all_pass: bool,
}

/// `Re q(it) + Im q(it)` and `Re q(it) - Im q(it)` as real polynomials in `t`.
fn rotated_parts(q: &Polynomial) -> (Polynomial, Polynomial) {
    let parts = even_odd_split(q);
    let re = parts.even.compose_neg().compose_square();
    let im = parts.odd.compose_neg().compose_square().shift(1);
    (&re + &im, &re - &im)
}

/// `sum |k c_k| M^{k-1}`, a Lipschitz constant of `f` on `[-M, M]`.
fn lipschitz_bound(f: &Polynomial, m: &Rational) -> Rational {
    let d = f.derivative();
    d.coeffs().iter().fold(Rational::zero(), |acc, c| acc * m + c.abs())
}

/// At every real root `λ` of a kind I polynomial, `q = dual(p)` satisfies
/// `Re q(iλ) = ±Im q(iλ)`. Each root is refined to `width` and the residual
/// at the midpoint is compared with `C * width`.
pub fn duality_argument_check(p: &Polynomial, width: &Rational) -> Result<DualityReport> {
    if !width.is_positive() {
        return domain("width must be positive");
    }
    let p = normalized(p)?;
    if si_oracle(&p)?.kind != SiKind::SiI {
        return domain("duality argument check needs a kind I self-interlacing polynomial");
    }
    let (plus, minus) = rotated_parts(&dual(&p));
    let mut roots = Vec::new();
    for iv in isolate_real_roots(&p)? {
        let iv = refine(&p, &iv, width);
        let mid = iv.midpoint();
        let residual = std::cmp::min(plus.eval(&mid).abs(), minus.eval(&mid).abs());
        let m = std::cmp::max(iv.lo.abs(), iv.hi.abs());
        let constant = std::cmp::max(lipschitz_bound(&plus, &m), lipschitz_bound(&minus, &m));
        let pass = residual <= &constant * width;
        roots.push(DualityResidual { interval: iv, midpoint: mid, residual, constant, pass });
    }
    let all_pass = roots.iter().all(|r| r.pass);
    Ok(DualityReport { width: width.clone(), roots, all_pass })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub verdict: bool,
    pub witness: Vec<String>,
}

fn result(verdict: bool, witness: &[Rational]) -> CriterionResult {
    CriterionResult { verdict, witness: witness.iter().map(|x| x.to_string()).collect() }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleVerdicts {
    pub si: SiKind,
    pub stability: StabilityVerdict,
    #[serde(skip)]
    pub si_detail: SiVerdict,
}

pub const FLAG_NORMALIZED: &str = "sign_normalized";
pub const FLAG_BOUNDARY: &str = "boundary_zero_minor";
pub const FLAG_SHARED_ROOTS: &str = "p_and_reflection_share_roots";
pub const FLAG_STABILITY_INDETERMINATE: &str = "stability_indeterminate";
pub const FLAG_SI_INDETERMINATE: &str = "si_magnitude_indeterminate";

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub input: String,
    pub normalized: bool,
    pub criteria: BTreeMap<String, CriterionResult>,
    pub oracle: OracleVerdicts,
    /// Kind according to the determinant criteria on `p` and `p(-z)`.
    pub si_kind: SiKind,
    /// `hurwitz_classic` on `p`.
    pub stable: bool,
    /// `hurwitz_classic` on `dual(p)`.
    pub dual_stable: bool,
    pub consistent: bool,
    pub flags: Vec<String>,
}

impl ClassificationReport {
    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.criteria.get(name).map(|c| c.verdict)
    }

    pub fn has_flag(&self, flag: &str) -> bool {
        self.flags.iter().any(|f| f == flag)
    }

    /// No boundary or indeterminate flag was raised.
    pub fn is_decisive(&self) -> bool {
        self.flags.iter().all(|f| f == FLAG_NORMALIZED)
    }
}

/// Runs every criterion on `p` and `dual(p)` together with both oracles.
pub fn classify(p: &Polynomial) -> Result<ClassificationReport> {
    require_degree(p, 1)?;
    let (q, was_negated) = p.with_positive_leading();
    let deltas = leading_minors(&q)?;
    let boundary = has_zero_minor(&deltas);
    let d_r = r_hankel(&q)?.d;
    let dual_q = dual(&q);
    let dual_deltas = leading_minors(&dual_q)?;

    let stodola = stodola_check(&q)?;
    let si_hurwitz = si_hurwitz_criterion(&q)?;
    let si_lc = si_lienard_chipart(&q)?;
    let classic = hurwitz_classic(&q)?;
    let hankel = stability_hankel_criterion(&q)?;
    let dual_stable = hurwitz_classic(&dual_q)?;
    let si_kind = if si_hurwitz {
        SiKind::SiI
    } else if si_hurwitz_criterion(&reflect(&q))? {
        SiKind::SiII
    } else {
        SiKind::NotSi
    };

    let mut criteria = BTreeMap::new();
    criteria.insert("stodola".to_string(), result(stodola, &stodola_terms(&q)));
    criteria.insert("si_hurwitz".to_string(), result(si_hurwitz, &deltas));
    let mut lc_witness = odd_minor_terms(&deltas, q.l());
    lc_witness.extend((1..=q.r()).map(|j| neg_one_pow(j) * q.a(2 * j)));
    criteria.insert("si_lienard_chipart".to_string(), result(si_lc, &lc_witness));
    criteria.insert("hurwitz_classic".to_string(), result(classic, &deltas));
    criteria.insert("stability_hankel".to_string(), result(hankel, &d_r));
    criteria.insert("duality_consistency".to_string(), result(si_hurwitz == dual_stable, &dual_deltas));

    let si_detail = si_oracle(&q)?;
    let stability = stability_oracle(&q)?;

    let mut flags = Vec::new();
    if was_negated {
        flags.push(FLAG_NORMALIZED.to_string());
    }
    if boundary {
        flags.push(FLAG_BOUNDARY.to_string());
    }
    if q.gcd(&q.compose_neg()).degree() > 0 {
        flags.push(FLAG_SHARED_ROOTS.to_string());
    }
    if stability == StabilityVerdict::Indeterminate {
        flags.push(FLAG_STABILITY_INDETERMINATE.to_string());
    }
    if si_detail.indeterminate {
        flags.push(FLAG_SI_INDETERMINATE.to_string());
    }

    let mut consistent = classic == hankel && si_hurwitz == dual_stable;
    if si_detail.kind == SiKind::SiI {
        consistent &= stodola;
    }
    if !boundary {
        consistent &= si_hurwitz == si_lc;
        if !si_detail.indeterminate {
            consistent &= si_kind == si_detail.kind;
        }
        if stability != StabilityVerdict::Indeterminate {
            consistent &= classic == (stability == StabilityVerdict::Stable);
        }
    }

    Ok(ClassificationReport {
        input: p.to_text(),
        normalized: was_negated,
        criteria,
        oracle: OracleVerdicts { si: si_detail.kind, stability, si_detail },
        si_kind,
        stable: classic,
        dual_stable,
        consistent,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, ratio};

    fn p(text: &str) -> Polynomial {
        text.parse().unwrap()
    }

    #[test]
    fn stodola_examples() {
        assert!(stodola_check(&p("1 -2 -5 6")).unwrap());
        assert!(stodola_check(&p("1 -1 -2")).unwrap());
        assert!(!stodola_check(&p("1 1 -2")).unwrap());
        assert!(stodola_check(&p("-1 2 5 -6")).unwrap());
        assert!(stodola_check(&p("5")).is_err());
    }

    #[test]
    fn si_criteria_examples() {
        assert!(si_hurwitz_criterion(&p("1 -2 -5 6")).unwrap());
        assert!(si_hurwitz_criterion(&p("1 -1 -2")).unwrap());
        assert!(!si_hurwitz_criterion(&p("1 0 1")).unwrap());
        assert!(si_lienard_chipart(&p("1 -2 -5 6")).unwrap());
        assert!(si_lienard_chipart(&p("1 -1 -2")).unwrap());
        assert!(!si_lienard_chipart(&p("1 -1 2")).unwrap());
    }

    #[test]
    fn stability_examples() {
        assert!(hurwitz_classic(&p("1 2 5 6")).unwrap());
        assert!(!hurwitz_classic(&p("1 -2 -5 6")).unwrap());
        assert!(hurwitz_classic(&p("1 2 1")).unwrap());
        assert!(stability_hankel_criterion(&p("1 1")).unwrap());
        assert!(!stability_hankel_criterion(&p("1 0 1")).unwrap());
        assert!(stability_hankel_criterion(&p("1 1 2")).unwrap());
        assert!(!stability_hankel_criterion(&p("1 -2 -5 6")).unwrap());
    }

    #[test]
    fn disc_probe_examples() {
        let probe = rhp_unit_disc_probe(&p("1 1 2"), 100).unwrap();
        assert!(probe.below_one && probe.evaluated == 100);
        let far = [Complex64::new(10.0, 0.0), Complex64::new(10.0, 1.0), Complex64::new(10.0, -2.0)];
        let probe = max_abs_r(&p("1 1"), &far).unwrap();
        assert!(probe.max_abs < 0.9);
        let near = max_abs_r(&p("1 1"), &[Complex64::new(1e-4, 0.0)]).unwrap();
        assert!(near.below_one && near.max_abs > 0.999);
        assert!(rhp_sample_points(50).iter().all(|z| z.re > 0.0));
    }

    #[test]
    fn rotated_parts_match_direct_evaluation() {
        // q = z^2 + z + 2: q(2i) = -2 + 2i and q(-i) = 1 - i
        let (plus, minus) = rotated_parts(&p("1 1 2"));
        assert_eq!(plus.eval(&int(2)), int(0));
        assert_eq!(minus.eval(&int(2)), int(-4));
        assert_eq!(plus.eval(&int(-1)), int(0));
        assert_eq!(minus.eval(&int(-1)), int(2));
        // q = z + 1: q(i) = 1 + i
        let (_, minus) = rotated_parts(&p("1 1"));
        assert_eq!(minus.eval(&int(1)), int(0));
    }

    #[test]
    fn duality_argument_examples() {
        let w = ratio(1, 1000);
        for text in ["1 -1 -2", "1 -1", "1 -2 -5 6"] {
            let r = duality_argument_check(&p(text), &w).unwrap();
            assert!(r.all_pass, "{text}");
            assert_eq!(r.roots.len(), p(text).degree());
        }
        assert!(duality_argument_check(&p("1 2 5 6"), &w).is_err());
        assert!(duality_argument_check(&p("1 -1"), &int(0)).is_err());
    }

    #[test]
    fn classify_kind_one() {
        let r = classify(&p("1 -2 -5 6")).unwrap();
        assert_eq!(r.si_kind, SiKind::SiI);
        assert_eq!(r.oracle.si, SiKind::SiI);
        assert_eq!(r.oracle.stability, StabilityVerdict::NotStable);
        assert!(r.dual_stable && !r.stable && r.consistent && r.is_decisive());
        for name in ["stodola", "si_hurwitz", "si_lienard_chipart", "duality_consistency"] {
            assert_eq!(r.verdict(name), Some(true), "{name}");
        }
        assert_eq!(r.criteria["si_hurwitz"].witness, vec!["-2", "4", "24"]);
    }

    #[test]
    fn classify_dual_is_stable() {
        let r = classify(&p("1 2 5 6")).unwrap();
        assert!(r.stable && r.consistent);
        assert_eq!(r.oracle.stability, StabilityVerdict::Stable);
        assert_eq!(r.verdict("stability_hankel"), Some(true));
        let back = classify(&dual(&p("1 2 5 6"))).unwrap();
        assert_eq!(back.si_kind, SiKind::SiI);
    }

    #[test]
    fn classify_boundary_and_kind_two() {
        let r = classify(&p("1 0 1")).unwrap();
        assert_eq!(r.si_kind, SiKind::NotSi);
        assert_eq!(r.oracle.si, SiKind::NotSi);
        assert!(!r.stable);
        assert!(r.has_flag(FLAG_BOUNDARY) && r.has_flag(FLAG_SHARED_ROOTS));
        assert!(!r.is_decisive() && r.consistent);

        // roots -3, 2, -1: kind II
        let r = classify(&p("1 2 -5 -6")).unwrap();
        assert_eq!(r.si_kind, SiKind::SiII);
        assert_eq!(r.oracle.si, SiKind::SiII);
        assert!(r.consistent);

        let r = classify(&p("-1 2 5 -6")).unwrap();
        assert!(r.normalized && r.has_flag(FLAG_NORMALIZED) && r.is_decisive());
        assert_eq!(r.si_kind, SiKind::SiI);
        assert_eq!(r.input, "-1 2 5 -6");
    }

    #[test]
    fn report_json_shape() {
        let r = classify(&p("1 -1 -2")).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["input"], "1 -1 -2");
        assert_eq!(v["normalized"], false);
        assert_eq!(v["oracle"]["si"], "SI_I");
        assert_eq!(v["oracle"]["stability"], "NOT_STABLE");
        assert_eq!(v["criteria"]["si_hurwitz"]["verdict"], true);
        assert_eq!(v["criteria"]["stability_hankel"]["witness"], serde_json::json!(["2", "8"]));
        assert_eq!(v["consistent"], true);
        assert!(v["flags"].as_array().unwrap().is_empty());
    }
}
