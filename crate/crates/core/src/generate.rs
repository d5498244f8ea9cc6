//! Seedable generators for self-interlacing, stable and unstructured
//! polynomials. Everything is exact; only the random choices come from the RNG.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num::Zero;
use rand::Rng;

use crate::error::{domain, Result};
use crate::poly::{int, neg_one_pow, ratio, to_f64, Polynomial, Rational};
use crate::transform::{binomial_power, dual, from_roots, reflect, TridiagonalSpec};

/// `num / den` with `num` in `1..=max_num` and `den` in `1..=max_den`.
pub fn positive_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    ratio(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

/// `n` distinct positive rationals in decreasing order.
pub fn distinct_magnitudes<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    while set.len() < n {
        set.insert(positive_rational(rng, 40, 8));
    }
    set.into_iter().rev().collect()
}

/// Roots `m_1, -m_2, m_3, ...` for decreasing magnitudes `m_k`, times a
/// positive leading coefficient. The result is self-interlacing of kind I.
pub fn random_si<R: Rng>(rng: &mut R, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return domain("degree must be positive");
    }
    let roots: Vec<Rational> = distinct_magnitudes(rng, n)
        .into_iter()
        .enumerate()
        .map(|(k, m)| neg_one_pow(k) * m)
        .collect();
    Ok(from_roots(&roots, &positive_rational(rng, 3, 2)))
}

/// Kind II counterpart of [`random_si`].
pub fn random_si_ii<R: Rng>(rng: &mut R, n: usize) -> Result<Polynomial> {
    Ok(reflect(&random_si(rng, n)?).with_positive_leading().0)
}

/// Product of `(z + a)` and `(z^2 + b z + c)` factors with positive rational
/// parameters, so every root lies in the open left half-plane.
pub fn random_stable<R: Rng>(rng: &mut R, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return domain("degree must be positive");
    }
    let quadratics = rng.gen_range(0..=n / 2);
    let mut p = Polynomial::constant(positive_rational(rng, 3, 2));
    for _ in 0..quadratics {
        let b = positive_rational(rng, 20, 4);
        let c = positive_rational(rng, 20, 4);
        p = &p * &Polynomial::new(vec![int(1), b, c]);
    }
    for _ in 0..n - 2 * quadratics {
        p = &p * &Polynomial::new(vec![int(1), positive_rational(rng, 20, 4)]);
    }
    Ok(p)
}

/// `b_1 = ±x` with the requested sign and `b_2..b_n > 0`.
pub fn random_tridiagonal<R: Rng>(rng: &mut R, n: usize, positive_first: bool) -> Result<TridiagonalSpec> {
    if n == 0 {
        return domain("size must be positive");
    }
    let b1 = positive_rational(rng, 10, 3);
    let mut b = vec![if positive_first { b1 } else { -b1 }];
    b.extend((1..n).map(|_| positive_rational(rng, 10, 3)));
    TridiagonalSpec::new(b)
}

/// Degree drawn from `1..=max_degree`, integer coefficients in `-9..=9`,
/// nonzero leading coefficient.
pub fn random_polynomial<R: Rng>(rng: &mut R, max_degree: usize) -> Result<Polynomial> {
    if max_degree == 0 {
        return domain("degree must be positive");
    }
    let n = rng.gen_range(1..=max_degree);
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(loop {
        let a = rng.gen_range(-9..=9);
        if a != 0 {
            break int(a);
        }
    });
    coeffs.extend((0..n).map(|_| int(rng.gen_range(-9..=9))));
    Ok(Polynomial::new(coeffs))
}

/// Adds a small rational to one non-leading coefficient.
pub fn perturb<R: Rng>(rng: &mut R, p: &Polynomial) -> Polynomial {
    let mut coeffs = p.coeffs().to_vec();
    if coeffs.len() > 1 {
        let k = rng.gen_range(1..coeffs.len());
        let eps = ratio(rng.gen_range(-4..=4), rng.gen_range(1..=10));
        coeffs[k] += eps;
    }
    Polynomial::new(coeffs)
}

/// `dual((z + a)^n)`
pub fn binomial_dual(n: usize, a: &Rational) -> Result<Polynomial> {
    if n == 0 {
        return domain("degree must be positive");
    }
    if a.is_zero() {
        return domain("a must be nonzero");
    }
    Ok(dual(&binomial_power(a, n)))
}

/// `μ_k = (-1)^{n-1} a tan(π (4k + 1) / (4n))` for `k = 0..n-1`, ascending.
pub fn binomial_dual_roots(n: usize, a: &Rational) -> Vec<f64> {
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let a = to_f64(a);
    let mut mu: Vec<f64> = (0..n)
        .map(|k| sign * a * (PI * (4 * k + 1) as f64 / (4 * n) as f64).tan())
        .collect();
    mu.sort_by(f64::total_cmp);
    mu
}
