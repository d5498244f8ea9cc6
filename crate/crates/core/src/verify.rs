//! Identity suite run per polynomial in batch mode.
//!
//! The exact identities here hold for every polynomial, not only for
//! self-interlacing or stable ones, so any failure is a defect.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::criteria::{classify, ClassificationReport};
use crate::error::{Error, Result};
use crate::hankel::{associated_phi, hurwitz_formula_check, r_minor_identity_check};
use crate::hurwitz::{has_zero_minor, leading_minors, minor, sample_minor_indices, HurwitzMatrix};
use crate::poly::Polynomial;
use crate::stieltjes::{cf_coeffs_from_minors, cf_expand};
use crate::transform::dual;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Every minor up to this order is checked.
    pub full_order: usize,
    /// Random general minors checked beyond the full lattice.
    pub budget: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { full_order: 3, budget: 100, seed: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CfAgreement {
    /// Both paths produced the same coefficients.
    Agree,
    /// Both paths produced coefficients and they differ.
    Disagree,
    /// A Hurwitz minor vanishes and at least one path is undefined.
    Undefined,
    /// Exactly one path succeeded although no minor vanishes.
    Mismatch,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityResults {
    pub hurwitz_formulas: bool,
    pub r_minor_identity: bool,
    pub minor_sign_relation: bool,
    pub minors_checked: usize,
    pub cf_cross_path: CfAgreement,
    pub dual_involution: bool,
}

impl IdentityResults {
    pub fn all_pass(&self) -> bool {
        self.hurwitz_formulas
            && self.r_minor_identity
            && self.minor_sign_relation
            && self.dual_involution
            && matches!(self.cf_cross_path, CfAgreement::Agree | CfAgreement::Undefined)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRecord {
    pub identities: IdentityResults,
    pub classification: ClassificationReport,
    pub degenerate: bool,
}

/// `H(dual p)[idx] = sign(idx) H(p)[idx]` on sampled minors.
fn minor_relation(p: &Polynomial, opts: &VerifyOptions) -> Result<(bool, usize)> {
    let hp = HurwitzMatrix::new(p)?;
    let hq = HurwitzMatrix::new(&dual(p))?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let sample = sample_minor_indices(p.degree(), opts.full_order, opts.budget, &mut rng);
    for idx in &sample {
        if minor(&hq, idx)? != idx.dual_sign() * minor(&hp, idx)? {
            return Ok((false, sample.len()));
        }
    }
    Ok((true, sample.len()))
}

fn cf_agreement(p: &Polynomial, boundary: bool) -> Result<CfAgreement> {
    let expanded = match cf_expand(&associated_phi(p)?) {
        Ok(cf) => Some(cf),
        Err(Error::NoStieltjesExpansion { .. }) => None,
        Err(e) => return Err(e),
    };
    let from_minors = match cf_coeffs_from_minors(p) {
        Ok(cf) => Some(cf),
        Err(Error::FormulaUndefined { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(match (expanded, from_minors) {
        (Some(a), Some(b)) if a == b => CfAgreement::Agree,
        (Some(_), Some(_)) => CfAgreement::Disagree,
        _ if boundary => CfAgreement::Undefined,
        _ => CfAgreement::Mismatch,
    })
}

pub fn identity_suite(p: &Polynomial, opts: &VerifyOptions) -> Result<IdentityResults> {
    let boundary = has_zero_minor(&leading_minors(p)?);
    let (minor_sign_relation, minors_checked) = minor_relation(p, opts)?;
    Ok(IdentityResults {
        hurwitz_formulas: hurwitz_formula_check(p)?.all_pass,
        r_minor_identity: r_minor_identity_check(p)?.all_pass,
        minor_sign_relation,
        minors_checked,
        cf_cross_path: cf_agreement(p, boundary)?,
        dual_involution: dual(&dual(p)).to_text() == p.to_text(),
    })
}

/// Identities plus the full classification report.
pub fn verify_polynomial(p: &Polynomial, opts: &VerifyOptions) -> Result<VerifyRecord> {
    let identities = identity_suite(p, opts)?;
    let classification = classify(p)?;
    let degenerate = !classification.is_decisive();
    Ok(VerifyRecord { identities, classification, degenerate })
}
