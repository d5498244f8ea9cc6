//! The associated functions `Φ(u)` and `R(z)`, their Laurent expansions at
//! infinity, and the Hankel minors built from the expansion coefficients.

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::hurwitz::{delta, leading_minors};
use crate::linalg::det;
use crate::poly::{int, neg_one_pow, rational_str, rational_vec, Polynomial, Rational};
use crate::roots::{isolate_real_roots, off_zero, IsolatingInterval};
use crate::transform::{even_odd_split, require_degree};

/// `num / den` with the denominator's leading coefficient kept positive.
/// No common factors are cancelled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Degenerate("zero denominator polynomial".into()));
        }
        if den.leading().is_negative() {
            Ok(RationalFunction { num: -num, den: -den })
        } else {
            Ok(RationalFunction { num, den })
        }
    }

    /// Lowest terms with a monic denominator.
    pub fn reduced(&self) -> RationalFunction {
        let g = self.num.gcd(&self.den);
        let (num, den) = if g.degree() > 0 {
            (self.num.div_rem(&g).expect("gcd").0, self.den.div_rem(&g).expect("gcd").0)
        } else {
            (self.num.clone(), self.den.clone())
        };
        let inv = den.leading().recip();
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    /// Same function, compared in lowest terms.
    pub fn same_function(&self, other: &RationalFunction) -> bool {
        // cross multiplication avoids the two gcd computations
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn is_proper(&self) -> bool {
        self.num.is_zero() || self.num.degree() < self.den.degree()
    }

    pub fn eval_f64(&self, z: num::complex::Complex64) -> num::complex::Complex64 {
        let horner = |p: &Polynomial| {
            p.to_f64_coeffs()
                .into_iter()
                .fold(num::complex::Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
        };
        horner(&self.num) / horner(&self.den)
    }
}

/// `Φ` with `z Φ(z^2) = (p(z) - (-1)^n p(-z)) / (p(z) + (-1)^n p(-z))`.
///
/// With `p(z) = E(z^2) + z O(z^2)` this is `O/E` for even degree and
/// `E / (u O)` for odd degree, so odd degree always puts a pole at zero.
pub fn associated_phi(p: &Polynomial) -> Result<RationalFunction> {
    require_degree(p, 1)?;
    let parts = even_odd_split(p);
    if parts.parity == 0 {
        RationalFunction::new(parts.odd, parts.even)
    } else {
        RationalFunction::new(parts.even, parts.odd.shift(1))
    }
}

/// `R(z) = (-1)^n p(-z) / p(z)`, without cancellation.
pub fn r_function(p: &Polynomial) -> Result<RationalFunction> {
    require_degree(p, 1)?;
    RationalFunction::new(p.compose_neg().scale(&neg_one_pow(p.degree())), p.clone())
}

/// `f(z) = constant + s_0/z + s_1/z^2 + ...`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaurentCoeffs {
    #[serde(with = "rational_str")]
    pub constant: Rational,
    #[serde(with = "rational_vec")]
    pub s: Vec<Rational>,
}

impl LaurentCoeffs {
    fn need(&self, len: usize) -> Result<()> {
        if self.s.len() < len {
            return Err(Error::InsufficientCoefficients { needed: len, have: self.s.len() });
        }
        Ok(())
    }

    /// `(constant + sum s_k z^{-k-1}) * den - num`, kept through `z^{deg den - m - 1}`.
    /// Returns the coefficients that should all vanish.
    pub fn residual(&self, f: &RationalFunction) -> Vec<Rational> {
        let m = f.den.degree();
        let mut series = vec![self.constant.clone()];
        series.extend(self.s.iter().cloned());
        (0..series.len())
            .map(|t| {
                let conv = (0..=t.min(m))
                    .map(|i| f.den.a(i) * &series[t - i])
                    .fold(Rational::zero(), |acc, x| acc + x);
                let target = if t <= m { f.num.coeff_of_power(m - t) } else { Rational::zero() };
                conv - target
            })
            .collect()
    }
}

/// `s_0..s_m` by the long-division recurrence on coefficients.
pub fn laurent_coeffs(f: &RationalFunction, m: usize) -> Result<LaurentCoeffs> {
    let deg = f.den.degree();
    if !f.num.is_zero() && f.num.degree() > deg {
        return domain("Laurent expansion at infinity needs deg num <= deg den");
    }
    let d0_inv = f.den.leading().recip();
    // e_0 is the constant term, e_{k+1} = s_k
    let mut e: Vec<Rational> = Vec::with_capacity(m + 2);
    for t in 0..=m + 1 {
        let mut acc = if t <= deg { f.num.coeff_of_power(deg - t) } else { Rational::zero() };
        for i in 1..=t.min(deg) {
            acc -= f.den.a(i) * &e[t - i];
        }
        e.push(acc * &d0_inv);
    }
    let constant = e.remove(0);
    Ok(LaurentCoeffs { constant, s: e })
}

fn hankel_window(s: &[Rational], start: usize, j: usize) -> Vec<Vec<Rational>> {
    (0..j).map(|i| (0..j).map(|k| s[start + i + k].clone()).collect()).collect()
}

/// `D_j = det (s_{i+k})_{0 <= i,k < j}`
pub fn hankel_d(s: &LaurentCoeffs, j: usize) -> Result<Rational> {
    if j == 0 {
        return domain("Hankel order must be positive");
    }
    s.need(2 * j - 1)?;
    Ok(det(&hankel_window(&s.s, 0, j)))
}

/// `D̂_j = det (s_{i+k+1})_{0 <= i,k < j}`
pub fn hankel_dhat(s: &LaurentCoeffs, j: usize) -> Result<Rational> {
    if j == 0 {
        return domain("Hankel order must be positive");
    }
    s.need(2 * j)?;
    Ok(det(&hankel_window(&s.s, 1, j)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HankelData {
    #[serde(with = "rational_vec")]
    pub s: Vec<Rational>,
    #[serde(rename = "D", with = "rational_vec")]
    pub d: Vec<Rational>,
    #[serde(rename = "Dhat", with = "rational_vec")]
    pub dhat: Vec<Rational>,
}

/// `D_1..D_count` and `D̂_1..D̂_hat_count` of `f`.
pub fn hankel_data(f: &RationalFunction, count: usize, hat_count: usize) -> Result<HankelData> {
    let needed = (2 * count).max(2 * hat_count).max(1);
    let s = laurent_coeffs(f, needed - 1)?;
    let d = (1..=count).map(|j| hankel_d(&s, j)).collect::<Result<_>>()?;
    let dhat = (1..=hat_count).map(|j| hankel_dhat(&s, j)).collect::<Result<_>>()?;
    Ok(HankelData { s: s.s, d, dhat })
}

/// Hankel data of `Φ`: `D_1..D_l` and `D̂_1..D̂_r`.
pub fn phi_hankel(p: &Polynomial) -> Result<HankelData> {
    hankel_data(&associated_phi(p)?, p.l(), p.r())
}

/// Hankel data of `R`: `D_1..D_n`.
pub fn r_hankel(p: &Polynomial) -> Result<HankelData> {
    hankel_data(&r_function(p)?, p.degree(), 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub label: String,
    pub j: usize,
    #[serde(with = "rational_str")]
    pub lhs: Rational,
    #[serde(with = "rational_str")]
    pub rhs: Rational,
    pub pass: bool,
}

impl IdentityCheck {
    pub(crate) fn new(label: &str, j: usize, lhs: Rational, rhs: Rational) -> Self {
        let pass = lhs == rhs;
        IdentityCheck { label: label.to_string(), j, lhs, rhs, pass }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub all_pass: bool,
}

impl From<Vec<IdentityCheck>> for IdentityReport {
    fn from(checks: Vec<IdentityCheck>) -> Self {
        let all_pass = checks.iter().all(|c| c.pass);
        IdentityReport { checks, all_pass }
    }
}

/// `D_j(Φ) = Δ_{2j-1} / a_0^{2j-1}` for `j <= l` and
/// `D̂_j(Φ) = (-1)^j Δ_{2j} / a_0^{2j}` for `j <= r`.
pub fn hurwitz_formula_check(p: &Polynomial) -> Result<IdentityReport> {
    let h = phi_hankel(p)?;
    let deltas = leading_minors(p)?;
    let a0 = p.leading();
    let pow = |e: usize| (0..e).fold(Rational::one(), |acc, _| acc * &a0);
    let mut checks = Vec::new();
    for j in 1..=p.l() {
        let rhs = delta(&deltas, 2 * j as i64 - 1) / pow(2 * j - 1);
        checks.push(IdentityCheck::new("D(phi)", j, h.d[j - 1].clone(), rhs));
    }
    for j in 1..=p.r() {
        let rhs = neg_one_pow(j) * delta(&deltas, 2 * j as i64) / pow(2 * j);
        checks.push(IdentityCheck::new("Dhat(phi)", j, h.dhat[j - 1].clone(), rhs));
    }
    Ok(checks.into())
}

/// `a_0^{2j} D_j(R) = (-1)^{j(j+1)/2} 2^j a_0 Δ_{j-1} Δ_j` for `j = 1..n`.
pub fn r_minor_identity_check(p: &Polynomial) -> Result<IdentityReport> {
    let h = r_hankel(p)?;
    let deltas = leading_minors(p)?;
    let a0 = p.leading();
    let checks = (1..=p.degree())
        .map(|j| {
            let a0_pow = (0..2 * j).fold(Rational::one(), |acc, _| acc * &a0);
            let lhs = a0_pow * &h.d[j - 1];
            let rhs = neg_one_pow(j * (j + 1) / 2)
                * int(1i64 << j)
                * &a0
                * delta(&deltas, j as i64 - 1)
                * delta(&deltas, j as i64);
            IdentityCheck::new("D(R)", j, lhs, rhs)
        })
        .collect::<Vec<_>>();
    Ok(checks.into())
}

#[derive(Debug, Clone, Serialize)]
pub struct PoleReport {
    /// Isolating intervals for the real poles of `Φ` (roots of its denominator).
    pub poles: Vec<IsolatingInterval>,
    pub denominator_square_free: bool,
    pub complex_poles: bool,
    pub pole_at_zero: bool,
    /// Positive poles for even degree; one pole at zero and the rest positive for odd.
    pub poles_ok: bool,
    /// `(-1)^j D_j(Φ) > 0` for `j = 1..l`.
    pub hankel_signs_ok: bool,
    pub pass: bool,
}

pub fn phi_pole_signs(p: &Polynomial) -> Result<PoleReport> {
    let phi = associated_phi(p)?;
    let den = &phi.den;
    let odd = p.degree() % 2 == 1;
    let h = phi_hankel(p)?;
    let hankel_signs_ok = h.d.iter().enumerate().all(|(i, d)| (neg_one_pow(i + 1) * d).is_positive());

    let square_free = den.is_square_free();
    if !square_free || den.degree() == 0 {
        let poles_ok = den.degree() == 0 && !odd;
        return Ok(PoleReport {
            poles: Vec::new(),
            denominator_square_free: square_free,
            complex_poles: false,
            pole_at_zero: false,
            poles_ok,
            hankel_signs_ok,
            pass: poles_ok && hankel_signs_ok,
        });
    }
    let poles: Vec<_> = isolate_real_roots(den)?.iter().map(|iv| off_zero(den, iv)).collect();
    let complex_poles = poles.len() < den.degree();
    let pole_at_zero = den.eval(&Rational::zero()).is_zero();
    let positive = |iv: &IsolatingInterval| !iv.lo.is_negative();
    let zero_pole = |iv: &IsolatingInterval| iv.contains(&Rational::zero());
    let poles_ok = !complex_poles
        && if odd {
            pole_at_zero && poles.iter().filter(|iv| !zero_pole(iv)).all(positive)
        } else {
            !pole_at_zero && poles.iter().all(positive)
        };
    Ok(PoleReport {
        poles,
        denominator_square_free: true,
        complex_poles,
        pole_at_zero,
        poles_ok,
        hankel_signs_ok,
        pass: poles_ok && hankel_signs_ok,
    })
}

/// `true` when `p(z)` and `p(-z)` share a root, which collapses the rank of `R`'s Hankel matrix.
pub fn shares_roots_with_reflection(p: &Polynomial) -> bool {
    p.gcd(&p.compose_neg()).degree() > 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Polynomial {
        text.parse().unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn phi_examples() {
        let f = associated_phi(&p("1 -1 -2")).unwrap();
        assert_eq!((f.num, f.den), (p("-1"), p("1 -2")));
        let f = associated_phi(&p("1 -2 -5 6")).unwrap();
        assert_eq!((f.num, f.den), (p("-2 6"), p("1 -5 0")));
        let f = associated_phi(&p("1 -1")).unwrap();
        assert_eq!((f.num, f.den), (p("-1"), p("1 0")));
        // leading sign is pushed to the numerator
        let f = associated_phi(&p("-1 1")).unwrap();
        assert_eq!((f.num, f.den), (p("-1"), p("1 0")));
    }

    #[test]
    fn r_examples() {
        let f = r_function(&p("1 -1")).unwrap();
        assert_eq!((f.num, f.den), (p("1 1"), p("1 -1")));
        let f = r_function(&p("1 -1 -2")).unwrap();
        assert_eq!((f.num, f.den), (p("1 1 -2"), p("1 -1 -2")));
        let f = r_function(&p("1 0 1")).unwrap();
        assert_eq!((f.num, f.den), (p("1 0 1"), p("1 0 1")));
    }

    #[test]
    fn laurent_examples() {
        let s = laurent_coeffs(&r_function(&p("1 -1")).unwrap(), 3).unwrap();
        assert_eq!((s.constant.clone(), s.s.clone()), (int(1), ints(&[2, 2, 2, 2])));
        let f = r_function(&p("1 -1 -2")).unwrap();
        let s = laurent_coeffs(&f, 3).unwrap();
        assert_eq!((s.constant.clone(), s.s.clone()), (int(1), ints(&[2, 2, 6, 10])));
        assert!(s.residual(&f).iter().all(|x| x.is_zero()));
        let phi = associated_phi(&p("1 -2 -5 6")).unwrap();
        let s = laurent_coeffs(&phi, 3).unwrap();
        assert_eq!((s.constant.clone(), s.s.clone()), (int(0), ints(&[-2, -4, -20, -100])));
        let improper = RationalFunction::new(p("1 0 0"), p("1 1")).unwrap();
        assert!(laurent_coeffs(&improper, 2).is_err());
    }

    #[test]
    fn hankel_examples() {
        let s = laurent_coeffs(&r_function(&p("1 -1 -2")).unwrap(), 3).unwrap();
        assert_eq!(hankel_d(&s, 2).unwrap(), int(8));
        assert_eq!(hankel_d(&s, 1).unwrap(), int(2));
        let s = laurent_coeffs(&associated_phi(&p("1 -2 -5 6")).unwrap(), 3).unwrap();
        assert_eq!(hankel_d(&s, 2).unwrap(), int(24));
        assert_eq!(hankel_dhat(&s, 1).unwrap(), int(-4));
        let s = laurent_coeffs(&associated_phi(&p("1 -1 -2")).unwrap(), 3).unwrap();
        assert_eq!(s.s, ints(&[-1, -2, -4, -8]));
        assert_eq!(hankel_dhat(&s, 1).unwrap(), int(-2));
        assert!(matches!(
            hankel_d(&s, 3),
            Err(Error::InsufficientCoefficients { needed: 5, have: 4 })
        ));
        assert!(hankel_dhat(&s, 2).is_ok());
        assert!(hankel_dhat(&s, 3).is_err());
    }

    #[test]
    fn hurwitz_formula_examples() {
        let r = hurwitz_formula_check(&p("1 -2 -5 6")).unwrap();
        assert!(r.all_pass);
        let vals: Vec<_> = r.checks.iter().map(|c| c.lhs.clone()).collect();
        assert_eq!(vals, ints(&[-2, 24, -4]));
        let r = hurwitz_formula_check(&p("1 -1 -2")).unwrap();
        assert!(r.all_pass);
        assert_eq!(r.checks.iter().map(|c| c.lhs.clone()).collect::<Vec<_>>(), ints(&[-1, -2]));
        let r = hurwitz_formula_check(&p("1 -1")).unwrap();
        assert!(r.all_pass && r.checks[0].lhs == int(-1));
        assert!(hurwitz_formula_check(&p("3 -1 4 1/2 -5")).unwrap().all_pass);
    }

    #[test]
    fn r_minor_identity_examples() {
        let r = r_minor_identity_check(&p("1 -1 -2")).unwrap();
        assert!(r.all_pass);
        assert_eq!(r.checks[0].rhs, int(2));
        assert_eq!(r.checks[1].lhs, int(8));
        let r = r_minor_identity_check(&p("1 -1")).unwrap();
        assert!(r.all_pass && r.checks[0].lhs == int(2));
        assert!(r_minor_identity_check(&p("-2 3/2 0 7 -1")).unwrap().all_pass);
    }

    #[test]
    fn pole_examples() {
        let r = phi_pole_signs(&p("1 -2 -5 6")).unwrap();
        assert!(r.pass && r.pole_at_zero && r.poles.len() == 2);
        assert!(r.poles.iter().any(|iv| iv.contains(&int(5))));
        let r = phi_pole_signs(&p("1 -1 -2")).unwrap();
        assert!(r.pass && r.poles.len() == 1 && r.poles[0].contains(&int(2)));
        // z^2 + z - 2: Φ = 1/(u - 2). The pole is positive but D_1(Φ) = 1 has the wrong sign.
        let r = phi_pole_signs(&p("1 1 -2")).unwrap();
        assert!(r.poles_ok && !r.hankel_signs_ok && !r.pass);
        let r = phi_pole_signs(&p("1 1 2")).unwrap();
        assert!(!r.poles_ok);
    }

    #[test]
    fn kronecker_rank_collapse() {
        let h = r_hankel(&p("1 0 1")).unwrap();
        assert!(h.d.iter().all(|d| d.is_zero()));
        assert!(shares_roots_with_reflection(&p("1 0 1")));
        // (z^2 - 4)(z - 1): gcd with the reflection has degree 2, so only D_1 survives
        let q = p("1 -1 -4 4");
        let f = r_function(&q).unwrap();
        let data = hankel_data(&f, 3, 0).unwrap();
        assert!(!data.d[0].is_zero());
        assert!(data.d[1..].iter().all(|d| d.is_zero()));
    }
}
