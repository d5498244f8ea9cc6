//! Real-root isolation with Sturm chains, and the definitional
//! self-interlacing oracle built on top of it.

use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{int, rational_str, Polynomial, Rational};
use crate::transform::require_degree;

/// Cap on bisections per interval while separating root magnitudes.
pub const MAGNITUDE_BISECTION_CAP: usize = 1024;

/// Half-open interval `(lo, hi]` holding exactly one root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolatingInterval {
    #[serde(with = "rational_str")]
    pub lo: Rational,
    #[serde(with = "rational_str")]
    pub hi: Rational,
    #[serde(skip)]
    pub sign_at_lo: i8,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    /// True iff `x` lies in `(lo, hi]`.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x <= &self.hi
    }
}

/// `p, p', -rem(p, p'), ...` up to the last nonzero remainder.
pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    if chain[1].is_zero() {
        chain.pop();
        return chain;
    }
    loop {
        let k = chain.len();
        let r = chain[k - 2].rem(&chain[k - 1]).expect("chain element is nonzero");
        if r.is_zero() {
            return chain;
        }
        chain.push(-r);
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[Polynomial], x: &Rational) -> usize {
    variations(chain.iter().map(|q| q.sign_at(x)))
}

/// Number of distinct roots in `(lo, hi]`; `lo` must not be a root.
fn count_half_open(chain: &[Polynomial], lo: &Rational, hi: &Rational) -> usize {
    variations_at(chain, lo) - variations_at(chain, hi)
}

/// Number of distinct real roots in the open interval `(lo, hi)`.
pub fn count_real_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    require_degree(p, 1)?;
    if lo >= hi {
        return crate::error::domain("count_real_roots needs lo < hi");
    }
    for x in [lo, hi] {
        if p.eval(x).is_zero() {
            return Err(Error::EndpointRoot(x.to_string()));
        }
    }
    Ok(count_half_open(&sturm_chain(p), lo, hi))
}

/// Total number of distinct real roots.
pub fn count_all_real_roots(p: &Polynomial) -> usize {
    if p.is_zero() || p.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(p);
    let at = |positive: bool| variations(chain.iter().map(|q| q.sign_at_infinity(positive)));
    at(false) - at(true)
}

/// A point of `(lo, hi)` that is not a root of `p`, preferring the midpoint.
fn split_point(p: &Polynomial, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    let mut k = 2i64;
    loop {
        for num in [k / 2, 1, k - 1] {
            let x = lo + &width * Rational::new(num.into(), k.into());
            if !p.eval(&x).is_zero() {
                return x;
            }
        }
        k += 1;
    }
}

/// Disjoint intervals, one per real root, sorted ascending.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<IsolatingInterval>> {
    require_degree(p, 1)?;
    if !p.is_square_free() {
        return crate::error::domain("root isolation needs a square-free polynomial");
    }
    let chain = sturm_chain(p);
    let bound = p.cauchy_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-&bound, bound)];
    while let Some((lo, hi)) = stack.pop() {
        match count_half_open(&chain, &lo, &hi) {
            0 => {}
            1 => {
                let sign_at_lo = p.sign_at(&lo);
                out.push(IsolatingInterval { lo, hi, sign_at_lo });
            }
            _ => {
                let mid = split_point(p, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// One bisection step that keeps the root of `p` inside.
pub fn bisect(p: &Polynomial, iv: &IsolatingInterval) -> IsolatingInterval {
    let mid = iv.midpoint();
    let s = p.sign_at(&mid);
    if s == 0 {
        // the root sits exactly at mid; any point of (lo, mid) is root-free
        let lo = (&iv.lo + &mid) / int(2);
        let sign_at_lo = p.sign_at(&lo);
        IsolatingInterval { lo, hi: mid, sign_at_lo }
    } else if s == iv.sign_at_lo {
        IsolatingInterval { lo: mid, hi: iv.hi.clone(), sign_at_lo: s }
    } else {
        IsolatingInterval { lo: iv.lo.clone(), hi: mid, sign_at_lo: iv.sign_at_lo }
    }
}

/// Bisects until the interval no longer straddles zero.
/// An interval whose root is exactly zero is returned as is.
pub fn off_zero(p: &Polynomial, iv: &IsolatingInterval) -> IsolatingInterval {
    let mut cur = iv.clone();
    if cur.contains(&Rational::zero()) && p.eval(&Rational::zero()).is_zero() {
        return cur;
    }
    while cur.lo.is_negative() && !cur.hi.is_negative() {
        cur = bisect(p, &cur);
    }
    cur
}

/// Bisects until `hi - lo <= width`.
pub fn refine(p: &Polynomial, iv: &IsolatingInterval, width: &Rational) -> IsolatingInterval {
    let mut cur = iv.clone();
    if !width.is_positive() {
        return cur;
    }
    while &cur.width() > width {
        if p.eval(&cur.hi).is_zero() {
            // exact root at hi: jump straight to the target width
            let lo = std::cmp::max(cur.lo.clone(), &cur.hi - width);
            let sign_at_lo = p.sign_at(&lo);
            return IsolatingInterval { lo, hi: cur.hi, sign_at_lo };
        }
        cur = bisect(p, &cur);
    }
    cur
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SiKind {
    #[serde(rename = "SI_I")]
    SiI,
    #[serde(rename = "SI_II")]
    SiII,
    #[serde(rename = "NOT_SI")]
    NotSi,
}

impl SiKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SiKind::SiI => "SI_I",
            SiKind::SiII => "SI_II",
            SiKind::NotSi => "NOT_SI",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotSiReason {
    NonRealRoots,
    RepeatedRoots,
    WrongSignPattern,
    MagnitudeOrderingViolated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiVerdict {
    pub kind: SiKind,
    pub reason: Option<NotSiReason>,
    /// Set when the bisection cap was hit before magnitudes separated.
    pub indeterminate: bool,
    /// Root intervals in descending order of magnitude when available.
    pub witnesses: Vec<IsolatingInterval>,
}

impl SiVerdict {
    fn not_si(reason: NotSiReason, witnesses: Vec<IsolatingInterval>) -> Self {
        SiVerdict { kind: SiKind::NotSi, reason: Some(reason), indeterminate: false, witnesses }
    }
}

/// Closed magnitude range `[min |x|, max |x|]` of an interval not containing 0.
fn magnitude(iv: &IsolatingInterval) -> (Rational, Rational) {
    if iv.lo.is_negative() {
        (iv.hi.abs(), iv.lo.abs())
    } else {
        (iv.lo.clone(), iv.hi.clone())
    }
}

fn root_sign(iv: &IsolatingInterval) -> i8 {
    if iv.lo.is_negative() {
        -1
    } else {
        1
    }
}

/// Classifies `p` straight from the root-ordering definition.
///
/// All `n` roots must be real and simple; ordered by decreasing modulus
/// they must alternate in sign, starting positive for kind I and negative
/// for kind II.
pub fn si_oracle(p: &Polynomial) -> Result<SiVerdict> {
    require_degree(p, 1)?;
    let n = p.degree();
    if !p.is_square_free() {
        return Ok(SiVerdict::not_si(NotSiReason::RepeatedRoots, Vec::new()));
    }
    let mut roots = isolate_real_roots(p)?;
    if roots.len() < n {
        return Ok(SiVerdict::not_si(NotSiReason::NonRealRoots, roots));
    }
    // a shared root of p(z) and p(-z) is either 0 or a pair of equal magnitude
    if p.gcd(&p.compose_neg()).degree() > 0 {
        return Ok(SiVerdict::not_si(NotSiReason::MagnitudeOrderingViolated, roots));
    }

    for iv in roots.iter_mut() {
        *iv = off_zero(p, iv);
    }

    let mut steps = vec![0usize; n];
    loop {
        let mut overlapping = vec![false; n];
        for i in 0..n {
            for j in i + 1..n {
                let (a_lo, a_hi) = magnitude(&roots[i]);
                let (b_lo, b_hi) = magnitude(&roots[j]);
                if !(a_hi < b_lo || b_hi < a_lo) {
                    overlapping[i] = true;
                    overlapping[j] = true;
                }
            }
        }
        if !overlapping.contains(&true) {
            break;
        }
        for i in (0..n).filter(|&i| overlapping[i]) {
            if steps[i] >= MAGNITUDE_BISECTION_CAP {
                return Ok(SiVerdict {
                    kind: SiKind::NotSi,
                    reason: Some(NotSiReason::MagnitudeOrderingViolated),
                    indeterminate: true,
                    witnesses: roots,
                });
            }
            roots[i] = bisect(p, &roots[i]);
            steps[i] += 1;
        }
    }

    roots.sort_by(|a, b| magnitude(b).0.cmp(&magnitude(a).0));
    let signs: Vec<i8> = roots.iter().map(root_sign).collect();
    let alternates = signs.windows(2).all(|w| w[0] != w[1]);
    let kind = match (alternates, signs[0]) {
        (true, 1) => SiKind::SiI,
        (true, _) => SiKind::SiII,
        (false, _) => SiKind::NotSi,
    };
    let reason = (kind == SiKind::NotSi).then_some(NotSiReason::WrongSignPattern);
    Ok(SiVerdict { kind, reason, indeterminate: false, witnesses: roots })
}
