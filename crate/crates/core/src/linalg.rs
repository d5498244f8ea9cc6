//! Exact determinants by fraction-free (Bareiss) elimination.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::poly::Rational;

/// Determinant of a square rational matrix.
///
/// Each row is scaled to integers by the lcm of its denominators, the
/// integer matrix is reduced with Bareiss' one-step elimination, and the
/// row scales are divided back out.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");

    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    Rational::new(bareiss(&mut a), scale)
}

/// Integer determinant; `a` is destroyed.
pub fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Sign of the determinant, `-1`, `0` or `1`.
pub fn det_sign(m: &[Vec<Rational>]) -> i8 {
    let d = det(m);
    if d.is_zero() {
        0
    } else if d.is_positive() {
        1
    } else {
        -1
    }
}

/// Submatrix picked by (0-based) row and column indices.
pub fn submatrix(m: &[Vec<Rational>], rows: &[usize], cols: &[usize]) -> Vec<Vec<Rational>> {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}
