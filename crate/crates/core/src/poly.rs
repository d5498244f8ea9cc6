//! Dense polynomials over exact rationals.
//!
//! Coefficients are kept in descending order, `coeffs[k]` multiplies
//! `z^(n-k)`, so `coeffs[0]` is the leading coefficient `a_0`. The zero
//! polynomial has no coefficients at all.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `+1`, `-1` or `0`.
pub fn sign(x: &Rational) -> i8 {
    match x.numer().sign() {
        Sign::Plus => 1,
        Sign::Minus => -1,
        Sign::NoSign => 0,
    }
}

/// `(-1)^e` for a nonnegative exponent.
pub fn neg_one_pow(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `a` or `a/b` into a reduced rational.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let malformed = || Error::MalformedToken(token.to_string());
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(malformed());
    }
    let num = BigInt::from_str(num).map_err(|_| malformed())?;
    let den = BigInt::from_str(den).map_err(|_| malformed())?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator(token.to_string()));
    }
    Ok(Rational::new(num, den))
}

/// Serde adapter writing a rational as its canonical `p/q` string.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a sequence of rationals.
pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from descending coefficients, stripping leading zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        Polynomial { coeffs: coeffs[first..].to_vec() }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Builds from ascending coefficients (`c[i]` multiplies `z^i`).
    pub fn from_ascending(mut coeffs: Vec<Rational>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c z^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    /// `z`
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Descending coefficients `a_0..a_n`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn ascending(&self) -> Vec<Rational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// `a_k`, the coefficient of `z^(n-k)`; zero outside `0..=n`.
    pub fn a(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Same as [`Polynomial::a`] but accepting negative indices.
    pub fn a_signed(&self, k: i64) -> Rational {
        if k < 0 {
            Rational::zero()
        } else {
            self.a(k as usize)
        }
    }

    /// Coefficient of `z^e`.
    pub fn coeff_of_power(&self, e: usize) -> Rational {
        if self.is_zero() || e > self.degree() {
            return Rational::zero();
        }
        self.coeffs[self.degree() - e].clone()
    }

    pub fn leading(&self) -> Rational {
        self.a(0)
    }

    /// `floor((n+1)/2)`
    pub fn l(&self) -> usize {
        self.degree().div_ceil(2)
    }

    /// `floor(n/2)`
    pub fn r(&self) -> usize {
        self.degree() / 2
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Flips the sign if the leading coefficient is negative.
    pub fn with_positive_leading(&self) -> (Self, bool) {
        if self.leading().is_negative() {
            (-self, true)
        } else {
            (self.clone(), false)
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_n(Rational::zero(), k));
        Polynomial { coeffs }
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc * z + to_f64(c))
    }

    pub fn sign_at(&self, z: &Rational) -> i8 {
        sign(&self.eval(z))
    }

    /// Sign at `+inf` (`positive = true`) or `-inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        let s = sign(&self.leading());
        if !positive && self.degree() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// `p(-z)`, no sign normalisation.
    pub fn compose_neg(&self) -> Self {
        let n = self.degree();
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if (n - k) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(z^2)`
    pub fn compose_square(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(2 * self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                coeffs.push(Rational::zero());
            }
            coeffs.push(c.clone());
        }
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        let n = self.degree();
        Self::new(
            self.coeffs
                .iter()
                .take(n)
                .enumerate()
                .map(|(k, c)| c * int((n - k) as i64))
                .collect(),
        )
    }

    /// k-th derivative; zero once `k` exceeds the degree.
    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// Euclidean division, `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if divisor.is_zero() {
            return crate::error::domain("division by the zero polynomial");
        }
        if self.is_zero() || self.degree() < divisor.degree() {
            return Ok((Self::zero(), self.clone()));
        }
        let dd = divisor.degree();
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let qlen = self.degree() - dd + 1;
        let mut quot = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let q = &rem[i] * &lead_inv;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quot.push(q);
        }
        Ok((Self::new(quot), Self::new(rem[qlen..].to_vec())))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// True iff `gcd(p, p')` is a constant.
    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Cauchy bound `1 + max |a_k / a_0|`; every root lies strictly inside it.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let max = self
            .coeffs
            .iter()
            .skip(1)
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max
    }

    /// Canonical text form, e.g. `1 -2 -5 6` or `1/2 0 -3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_poly(text)
    }
}

/// Parses whitespace or comma separated rationals in descending powers.
pub fn parse_poly(text: &str) -> Result<Polynomial> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Error::EmptyInput);
    }
    let coeffs = tokens.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]", self.to_text())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_poly(&text).map_err(serde::de::Error::custom)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut asc = self.ascending();
        let other = rhs.ascending();
        if other.len() > asc.len() {
            asc.resize(other.len(), Rational::zero());
        }
        for (a, b) in asc.iter_mut().zip(other) {
            *a += b;
        }
        Polynomial::from_ascending(asc)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}
