//! Hurwitz matrices, their leading and general minors, and the sign
//! relation between the Hurwitz matrices of a polynomial and its dual.

use num::{One, Signed, Zero};
use rand::seq::index::sample;
use rand::Rng;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::linalg::{det, submatrix};
use crate::poly::{neg_one_pow, rational_str, Polynomial, Rational};
use crate::transform::{dual, require_degree};

/// The `n x n` matrix with `(i, j)` entry `a_{2j-i}` (1-based), zero outside `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzMatrix {
    entries: Vec<Vec<Rational>>,
    source: Polynomial,
}

impl HurwitzMatrix {
    pub fn new(p: &Polynomial) -> Result<Self> {
        require_degree(p, 1)?;
        let n = p.degree() as i64;
        let entries = (1..=n)
            .map(|i| (1..=n).map(|j| p.a_signed(2 * j - i)).collect())
            .collect();
        Ok(HurwitzMatrix { entries, source: p.clone() })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn source(&self) -> &Polynomial {
        &self.source
    }

    /// 1-based entry access.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i - 1][j - 1]
    }

    /// Row-major rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        self.entries
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into()
    }
}

pub fn hurwitz_matrix(p: &Polynomial) -> Result<HurwitzMatrix> {
    HurwitzMatrix::new(p)
}

/// Strictly increasing 1-based row and column selections of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MinorIndex {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

fn strictly_increasing(xs: &[usize]) -> bool {
    xs.first().is_some_and(|&x| x >= 1) && xs.windows(2).all(|w| w[0] < w[1])
}

impl MinorIndex {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return domain("minor index needs nonempty row and column sets of equal size");
        }
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) {
            return domain("minor indices must be strictly increasing and 1-based");
        }
        Ok(MinorIndex { rows, cols })
    }

    /// Rows and columns `1..=k`.
    pub fn leading(k: usize) -> Self {
        MinorIndex { rows: (1..=k).collect(), cols: (1..=k).collect() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// `(-1)^(sum i(i-1)/2 + sum j)`, the sign relating the minors of `H(p)` and `H(dual p)`.
    pub fn dual_sign(&self) -> Rational {
        let e: usize = self.rows.iter().map(|i| i * (i - 1) / 2).sum::<usize>()
            + self.cols.iter().sum::<usize>();
        neg_one_pow(e)
    }

    fn fits(&self, n: usize) -> bool {
        self.rows.last().is_some_and(|&r| r <= n) && self.cols.last().is_some_and(|&c| c <= n)
    }
}

pub fn minor(m: &HurwitzMatrix, idx: &MinorIndex) -> Result<Rational> {
    if !idx.fits(m.order()) {
        return domain(format!("minor index exceeds matrix order {}", m.order()));
    }
    let rows: Vec<usize> = idx.rows.iter().map(|i| i - 1).collect();
    let cols: Vec<usize> = idx.cols.iter().map(|j| j - 1).collect();
    Ok(det(&submatrix(&m.entries, &rows, &cols)))
}

/// Hurwitz minors `Δ_1..Δ_n`, the leading principal minors of `H(p)`.
pub fn leading_minors(p: &Polynomial) -> Result<Vec<Rational>> {
    let h = HurwitzMatrix::new(p)?;
    Ok((1..=h.order()).map(|k| minor(&h, &MinorIndex::leading(k)).expect("in range")).collect())
}

/// `Δ_k` with the conventions `Δ_0 = Δ_{-1} = 1`; `deltas[0]` is `Δ_1`.
pub fn delta(deltas: &[Rational], k: i64) -> Rational {
    if k <= 0 {
        Rational::one()
    } else {
        deltas[k as usize - 1].clone()
    }
}

/// Checks `H(dual p)[idx] = sign(idx) * H(p)[idx]` exactly.
pub fn minor_sign_relation_check(p: &Polynomial, idx: &MinorIndex) -> Result<bool> {
    let hp = HurwitzMatrix::new(p)?;
    let hq = HurwitzMatrix::new(&dual(p))?;
    Ok(minor(&hq, idx)? == idx.dual_sign() * minor(&hp, idx)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct MinorCheck {
    pub index: MinorIndex,
    #[serde(with = "rational_str")]
    pub minor_p: Rational,
    #[serde(with = "rational_str")]
    pub minor_dual: Rational,
    /// `sign(idx) * minor_p >= 0`
    pub signed_nonnegative: bool,
    /// `|minor_p| = |minor_dual|`
    pub magnitudes_equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TotalNonnegativityReport {
    pub checks: Vec<MinorCheck>,
    pub all_pass: bool,
}

/// Signed nonnegativity of sampled minors of `H(p)`, plus equality of
/// magnitudes against the matching minors of `H(dual p)`.
pub fn total_nonnegativity_spot_check(
    p: &Polynomial,
    sample: &[MinorIndex],
) -> Result<TotalNonnegativityReport> {
    let hp = HurwitzMatrix::new(p)?;
    let hq = HurwitzMatrix::new(&dual(p))?;
    let mut checks = Vec::with_capacity(sample.len());
    for idx in sample {
        let minor_p = minor(&hp, idx)?;
        let minor_dual = minor(&hq, idx)?;
        checks.push(MinorCheck {
            signed_nonnegative: !(idx.dual_sign() * &minor_p).is_negative(),
            magnitudes_equal: minor_p.abs() == minor_dual.abs(),
            index: idx.clone(),
            minor_p,
            minor_dual,
        });
    }
    let all_pass = checks.iter().all(|c| c.signed_nonnegative && c.magnitudes_equal);
    Ok(TotalNonnegativityReport { checks, all_pass })
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Every minor of order `<= max_full_order`, then `budget` random minors of larger order.
pub fn sample_minor_indices<R: Rng>(
    n: usize,
    max_full_order: usize,
    budget: usize,
    rng: &mut R,
) -> Vec<MinorIndex> {
    let mut out = Vec::new();
    for k in 1..=max_full_order.min(n) {
        let subsets = combinations(n, k);
        for rows in &subsets {
            for cols in &subsets {
                out.push(MinorIndex { rows: rows.clone(), cols: cols.clone() });
            }
        }
    }
    if n > max_full_order {
        for _ in 0..budget {
            let k = rng.gen_range(max_full_order + 1..=n);
            let mut pick = || {
                let mut v: Vec<usize> = sample(rng, n, k).into_iter().map(|x| x + 1).collect();
                v.sort_unstable();
                v
            };
            let rows = pick();
            let cols = pick();
            out.push(MinorIndex { rows, cols });
        }
    }
    out
}

/// `Δ_{2i-1} Δ_{2i+1} < 0` for `i = 0..=(n-1)/2` with `Δ_{-1} = 1`.
pub fn odd_minor_alternation(deltas: &[Rational]) -> bool {
    let n = deltas.len() as i64;
    (0..=(n - 1) / 2).all(|i| (delta(deltas, 2 * i - 1) * delta(deltas, 2 * i + 1)).is_negative())
}

/// `true` if some Hurwitz minor vanishes.
pub fn has_zero_minor(deltas: &[Rational]) -> bool {
    deltas.iter().any(|d| d.is_zero())
}
