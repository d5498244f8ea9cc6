//! Structural transforms of a polynomial: reflection, the even/odd split,
//! the dual sign transform, derivative families, and the tridiagonal
//! characteristic polynomial.

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::poly::{neg_one_pow, to_f64, Polynomial, Rational};

/// `leading * prod (z - root)`
pub fn from_roots(roots: &[Rational], leading: &Rational) -> Polynomial {
    roots.iter().fold(Polynomial::constant(leading.clone()), |acc, root| {
        &acc * &Polynomial::new(vec![Rational::one(), -root])
    })
}

/// k-th derivative; the zero polynomial once `k > deg p`.
pub fn derivative(p: &Polynomial, k: usize) -> Polynomial {
    p.nth_derivative(k)
}

/// `p(-z)`
pub fn reflect(p: &Polynomial) -> Polynomial {
    p.compose_neg()
}

/// `p(z) = even(z^2) + z * odd(z^2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenOddParts {
    pub even: Polynomial,
    pub odd: Polynomial,
    /// `n mod 2` of the source polynomial.
    pub parity: usize,
}

impl EvenOddParts {
    /// Reassembles `even(z^2) + z * odd(z^2)`.
    pub fn expand(&self) -> Polynomial {
        &self.even.compose_square() + &self.odd.compose_square().shift(1)
    }
}

pub fn even_odd_split(p: &Polynomial) -> EvenOddParts {
    let asc = p.ascending();
    let even = asc.iter().step_by(2).cloned().collect();
    let odd = asc.iter().skip(1).step_by(2).cloned().collect();
    EvenOddParts {
        even: Polynomial::from_ascending(even),
        odd: Polynomial::from_ascending(odd),
        parity: p.degree() % 2,
    }
}

/// Sign transform `a_k -> (-1)^(k(k+1)/2) a_k` on descending coefficients.
/// It is an involution and maps kind I self-interlacing polynomials onto
/// Hurwitz stable ones.
pub fn dual(p: &Polynomial) -> Polynomial {
    Polynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| a * neg_one_pow(k * (k + 1) / 2))
            .collect(),
    )
}

/// Same map as [`dual`], computed through the even/odd parts evaluated at `-z^2`.
pub fn dual_via_rotation(p: &Polynomial) -> Polynomial {
    let parts = even_odd_split(p);
    let r = p.r();
    let even = parts.even.compose_neg().compose_square();
    let odd = parts.odd.compose_neg().compose_square().shift(1);
    if p.degree().is_multiple_of(2) {
        (&even + &odd).scale(&neg_one_pow(r))
    } else {
        (&even - &odd).scale(&neg_one_pow(r + 1))
    }
}

/// `p_j(z) = E^(j)(z^2) + z O^(j)(z^2)` where `E`, `O` are the even and odd parts.
pub fn markov_family(p: &Polynomial, j: usize) -> Result<Polynomial> {
    let n = p.degree();
    if p.is_zero() || n < 2 {
        return domain(format!("markov family needs degree >= 2, got {n}"));
    }
    let r = p.r();
    if j == 0 || j + 1 > r {
        return domain(format!("markov index {j} outside 1..={}", r.saturating_sub(1)));
    }
    let parts = even_odd_split(p);
    let shifted = EvenOddParts {
        even: parts.even.nth_derivative(j),
        odd: parts.odd.nth_derivative(j),
        parity: parts.parity,
    };
    Ok(shifted.expand())
}

/// Off-diagonal entries `b_1..b_n` of the tridiagonal matrix with diagonal
/// `(b_1, 0, ..., 0)` and symmetric sub/super diagonal `(b_2, ..., b_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TridiagonalSpec {
    b: Vec<Rational>,
}

impl TridiagonalSpec {
    pub fn new(b: Vec<Rational>) -> Result<Self> {
        if b.is_empty() {
            return domain("tridiagonal spec needs at least one entry");
        }
        if b[0].is_zero() {
            return domain("b_1 must be nonzero");
        }
        if let Some(k) = b.iter().skip(1).position(|x| !x.is_positive()) {
            return domain(format!("b_{} must be positive", k + 2));
        }
        Ok(TridiagonalSpec { b })
    }

    pub fn entries(&self) -> &[Rational] {
        &self.b
    }

    /// The explicit matrix, for cross-checks.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.b.len();
        let mut m = vec![vec![Rational::zero(); n]; n];
        m[0][0] = self.b[0].clone();
        for k in 1..n {
            m[k - 1][k] = self.b[k].clone();
            m[k][k - 1] = self.b[k].clone();
        }
        m
    }
}

/// `det(zI - J)` through the three-term recurrence on leading blocks.
pub fn tridiagonal_char_poly(spec: &TridiagonalSpec) -> Polynomial {
    let b = &spec.b;
    let mut prev = Polynomial::constant(Rational::one());
    let mut cur = Polynomial::new(vec![Rational::one(), -&b[0]]);
    for bk in &b[1..] {
        let next = &cur.shift(1) - &prev.scale(&(bk * bk));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn square_free_check(p: &Polynomial) -> bool {
    p.is_square_free()
}

/// `e_k(xs)`, the k-th elementary symmetric function.
pub fn elementary_symmetric(xs: &[Rational], k: usize) -> Result<Rational> {
    if k > xs.len() {
        return domain(format!("e_{k} undefined for {} values", xs.len()));
    }
    Ok(elementary_symmetric_all(xs).swap_remove(k))
}

/// `e_0..e_len` in one pass.
pub fn elementary_symmetric_all(xs: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); xs.len() + 1];
    e[0] = Rational::one();
    for (i, x) in xs.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let term = &e[k - 1] * x;
            e[k] += term;
        }
    }
    e
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanSum {
    /// `tan(sum atan x_k)` in floating point.
    pub lhs: f64,
    /// Alternating symmetric-function quotient, exact then rounded.
    pub rhs: f64,
}

pub const DEFAULT_TAN_MARGIN: f64 = 1e-6;

pub fn tan_sum_identity_check(xs: &[Rational]) -> Result<TanSum> {
    tan_sum_identity_check_with_margin(xs, DEFAULT_TAN_MARGIN)
}

/// Compares `tan(sum atan x_k)` with `(e_1 - e_3 + ...) / (1 - e_2 + e_4 - ...)`.
/// Inputs whose angle sum is within `margin` (measured on `|cos|`) of a pole
/// are reported as indeterminate.
pub fn tan_sum_identity_check_with_margin(xs: &[Rational], margin: f64) -> Result<TanSum> {
    let e = elementary_symmetric_all(xs);
    let alternating = |start: usize| {
        e.iter()
            .skip(start)
            .step_by(2)
            .enumerate()
            .fold(Rational::zero(), |acc, (i, v)| if i % 2 == 0 { acc + v } else { acc - v })
    };
    let num = alternating(1);
    let den = alternating(0);
    if den.is_zero() {
        return Err(Error::Indeterminate("tangent pole: denominator vanishes".into()));
    }
    let angle: f64 = xs.iter().map(|x| to_f64(x).atan()).sum();
    if angle.cos().abs() < margin {
        return Err(Error::Indeterminate(format!("angle sum {angle} is near a tangent pole")));
    }
    Ok(TanSum { lhs: angle.tan(), rhs: to_f64(&(num / den)) })
}

/// `(z + a)^n`
pub fn binomial_power(a: &Rational, n: usize) -> Polynomial {
    from_roots(&vec![-a; n], &Rational::one())
}

/// Degree check shared by the classification entry points.
pub(crate) fn require_degree(p: &Polynomial, min: usize) -> Result<()> {
    if p.is_zero() || p.degree() < min {
        return domain(format!("polynomial degree must be at least {min}"));
    }
    Ok(())
}

/// `1, -1, -1, 1, ...`: the sign multiplying `a_j` in the dual transform.
pub fn dual_sign(j: usize) -> Rational {
    neg_one_pow(j * (j + 1) / 2)
}
