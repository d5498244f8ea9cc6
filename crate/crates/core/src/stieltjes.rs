//! Stieltjes continued fractions
//!
//! ```text
//! Φ(u) = 1 / (c_1 u + 1 / (c_2 + 1 / (c_3 u + 1 / (c_4 + ...))))
//! ```
//!
//! Odd-indexed coefficients multiply `u`. A fraction with an odd number of
//! terms ends on `c_m u` and is `finite`; an even count means the omitted
//! next coefficient is infinite (`infinite-last`).

use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::hankel::RationalFunction;
use crate::hurwitz::{delta, leading_minors};
use crate::poly::{int, neg_one_pow, rational_vec, Polynomial, Rational};
use crate::transform::require_degree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Terminal {
    #[serde(rename = "finite")]
    Finite,
    #[serde(rename = "infinite-last")]
    InfiniteLast,
}

impl Terminal {
    pub fn for_len(m: usize) -> Self {
        if m % 2 == 1 {
            Terminal::Finite
        } else {
            Terminal::InfiniteLast
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Terminal::Finite => "finite",
            Terminal::InfiniteLast => "infinite-last",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuedFraction {
    #[serde(with = "rational_vec")]
    pub c: Vec<Rational>,
    pub terminal: Terminal,
}

impl ContinuedFraction {
    pub fn new(c: Vec<Rational>) -> Self {
        let terminal = Terminal::for_len(c.len());
        ContinuedFraction { c, terminal }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }
}

/// Expands a proper rational function by alternating division steps.
///
/// Step `i` divides `F_{i-1}` by `F_i`; odd steps must drop exactly one
/// degree and even steps must keep it. Any other degree pattern has no
/// Stieltjes expansion.
pub fn cf_expand(f: &RationalFunction) -> Result<ContinuedFraction> {
    if !f.is_proper() {
        return domain("continued fraction needs deg num < deg den");
    }
    let u = Polynomial::x();
    let mut prev = f.den.clone();
    let mut cur = f.num.clone();
    let mut c = Vec::new();
    let mut step = 1;
    loop {
        if cur.is_zero() {
            return Err(Error::NoStieltjesExpansion { step });
        }
        let odd = step % 2 == 1;
        let drop = if odd { 1 } else { 0 };
        if prev.degree() != cur.degree() + drop {
            return Err(Error::NoStieltjesExpansion { step });
        }
        let ci = prev.leading() / cur.leading();
        let sub = if odd { &u * &cur.scale(&ci) } else { cur.scale(&ci) };
        let next = &prev - &sub;
        c.push(ci);
        if next.is_zero() {
            return Ok(ContinuedFraction::new(c));
        }
        // an even step on a constant always leaves zero, so the subtraction is safe
        let want = if odd { cur.degree() } else { cur.degree() - 1 };
        if next.degree() != want {
            return Err(Error::NoStieltjesExpansion { step: step + 1 });
        }
        prev = cur;
        cur = next;
        step += 1;
    }
}

/// `c_i = Δ_{i-1}^2 / (Δ_{i-2} Δ_i)` for `i = 1..n`, from the minors of `p / a_0`.
pub fn cf_coeffs_from_minors(p: &Polynomial) -> Result<ContinuedFraction> {
    require_degree(p, 1)?;
    let monic = p.monic();
    let deltas = leading_minors(&monic)?;
    let n = p.degree();
    let mut c = Vec::with_capacity(n);
    for i in 1..=n {
        let d = |k: i64| delta(&deltas, k);
        let k = i as i64;
        if d(k).is_zero() {
            return Err(Error::FormulaUndefined { index: i });
        }
        c.push(d(k - 1) * d(k - 1) / (d(k - 2) * d(k)));
    }
    Ok(ContinuedFraction::new(c))
}

/// Folds the fraction back into lowest terms with a monic denominator.
pub fn cf_reconstruct(cf: &ContinuedFraction) -> Result<RationalFunction> {
    if cf.is_empty() {
        return domain("empty continued fraction");
    }
    if cf.c.iter().any(|c| c.is_zero()) {
        return domain("continued fraction coefficient is zero");
    }
    let u = Polynomial::x();
    let term = |i: usize| {
        let c = Polynomial::constant(cf.c[i].clone());
        if i.is_multiple_of(2) {
            &c * &u
        } else {
            c
        }
    };
    // tail T_k = F_{k-1} / F_k kept as (num, den)
    let last = cf.len() - 1;
    let mut num = term(last);
    let mut den = Polynomial::constant(int(1));
    for i in (0..last).rev() {
        let next = &(&term(i) * &num) + &den;
        den = num;
        num = next;
    }
    Ok(RationalFunction::new(den, num)?.reduced())
}

/// `(-1)^i c_i > 0` for every `i` and exactly `n` coefficients.
pub fn cf_sign_check(cf: &ContinuedFraction, n: usize) -> bool {
    cf.len() == n
        && cf.terminal == Terminal::for_len(n)
        && cf.c.iter().enumerate().all(|(i, c)| (neg_one_pow(i + 1) * c).is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::associated_phi;
    use crate::poly::ratio;

    fn p(text: &str) -> Polynomial {
        text.parse().unwrap()
    }

    fn expand(text: &str) -> Result<ContinuedFraction> {
        cf_expand(&associated_phi(&p(text)).unwrap())
    }

    #[test]
    fn expansion_examples() {
        let cf = expand("1 -1 -2").unwrap();
        assert_eq!(cf.c, vec![int(-1), ratio(1, 2)]);
        assert_eq!(cf.terminal, Terminal::InfiniteLast);
        let cf = expand("1 -2 -5 6").unwrap();
        assert_eq!(cf.c, vec![ratio(-1, 2), int(1), ratio(-1, 3)]);
        assert_eq!(cf.terminal, Terminal::Finite);
        let cf = expand("1 -1").unwrap();
        assert_eq!(cf.c, vec![int(-1)]);
        assert_eq!(cf.terminal, Terminal::Finite);
    }

    #[test]
    fn json_shape() {
        let cf = expand("1 -2 -5 6").unwrap();
        let v = serde_json::to_value(&cf).unwrap();
        assert_eq!(v, serde_json::json!({"c": ["-1/2", "1", "-1/3"], "terminal": "finite"}));
    }

    #[test]
    fn broken_degree_pattern() {
        // Φ(z^2 + 1) = 0 / (u + 1)
        assert!(matches!(expand("1 0 1"), Err(Error::NoStieltjesExpansion { step: 1 })));
        // u / (u^2 + 1) = 1 / (u + 1/u): the remainder after step 1 is a constant
        let f = RationalFunction::new(p("1 0"), p("1 0 1")).unwrap();
        assert!(matches!(cf_expand(&f), Err(Error::NoStieltjesExpansion { step: 2 })));
        let f = RationalFunction::new(p("1"), p("1 0 1")).unwrap();
        assert!(matches!(cf_expand(&f), Err(Error::NoStieltjesExpansion { step: 1 })));
        let improper = RationalFunction::new(p("1 0"), p("1 1")).unwrap();
        assert!(matches!(cf_expand(&improper), Err(Error::Domain(_))));
    }

    #[test]
    fn minors_agree_with_expansion() {
        for text in ["1 -1 -2", "1 -2 -5 6", "1 -1", "2 -4 -10 12", "3 -1 4 1/2 -5"] {
            let from_minors = cf_coeffs_from_minors(&p(text)).unwrap();
            assert_eq!(expand(text).unwrap(), from_minors, "{text}");
        }
        assert_eq!(cf_coeffs_from_minors(&p("1 -1")).unwrap().c, vec![int(-1)]);
        assert!(matches!(
            cf_coeffs_from_minors(&p("1 0 1")),
            Err(Error::FormulaUndefined { index: 1 })
        ));
    }

    #[test]
    fn reconstruction_round_trips() {
        for text in ["1 -1 -2", "1 -2 -5 6", "1 -1", "3 -1 4 1/2 -5"] {
            let phi = associated_phi(&p(text)).unwrap();
            let back = cf_reconstruct(&expand(text).unwrap()).unwrap();
            assert!(back.same_function(&phi), "{text}");
            assert_eq!(back, phi.reduced());
        }
        let zero = ContinuedFraction::new(vec![int(1), int(0)]);
        assert!(cf_reconstruct(&zero).is_err());
        assert!(cf_reconstruct(&ContinuedFraction::new(vec![])).is_err());
    }

    #[test]
    fn sign_check_examples() {
        assert!(cf_sign_check(&expand("1 -1 -2").unwrap(), 2));
        assert!(cf_sign_check(&expand("1 -2 -5 6").unwrap(), 3));
        assert!(cf_sign_check(&expand("1 -1").unwrap(), 1));
        assert!(!cf_sign_check(&ContinuedFraction::new(vec![int(1), int(1)]), 2));
        assert!(!cf_sign_check(&ContinuedFraction::new(vec![int(-1), int(1)]), 3));
    }
}
