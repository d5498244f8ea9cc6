use std::collections::BTreeMap;
use std::path::Path;

use interlace_core::poly::Polynomial;
use interlace_core::verify::{verify_polynomial, CfAgreement, VerifyOptions, VerifyRecord};
use serde_json::{json, Value};

use crate::{Failure, Outcome};

const FAMILIES: [&str; 6] = [
    "hurwitz_formulas",
    "r_minor_identity",
    "minor_sign_relation",
    "cf_cross_path",
    "dual_involution",
    "consistency",
];

#[derive(Default)]
struct Tally {
    pass: usize,
    fail: usize,
    indeterminate: usize,
}

impl Tally {
    fn add(&mut self, outcome: Option<bool>) {
        match outcome {
            Some(true) => self.pass += 1,
            Some(false) => self.fail += 1,
            None => self.indeterminate += 1,
        }
    }
}

/// Per-family outcome; `None` marks an indeterminate result.
fn outcomes(rec: &VerifyRecord) -> [Option<bool>; 6] {
    let id = &rec.identities;
    let cf = match id.cf_cross_path {
        CfAgreement::Agree => Some(true),
        CfAgreement::Undefined => None,
        CfAgreement::Disagree | CfAgreement::Mismatch => Some(false),
    };
    let consistency = (!rec.degenerate).then_some(rec.classification.consistent);
    [
        Some(id.hurwitz_formulas),
        Some(id.r_minor_identity),
        Some(id.minor_sign_relation),
        cf,
        Some(id.dual_involution),
        consistency,
    ]
}

fn is_skipped(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

pub fn run(input: &Path, output: Option<&Path>, budget: usize, seed: u64) -> Outcome {
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", input.display())))?;
    let mut tallies: BTreeMap<&str, Tally> = FAMILIES.iter().map(|f| (*f, Tally::default())).collect();
    let mut records = Vec::new();
    let (mut errors, mut degenerate, mut identity_failures) = (0, 0, 0);

    for (i, line) in text.lines().enumerate() {
        if is_skipped(line) {
            continue;
        }
        let line_no = i + 1;
        let input = line.trim();
        let opts = VerifyOptions { budget, seed: seed.wrapping_add(line_no as u64), ..Default::default() };
        let result = input.parse::<Polynomial>().and_then(|p| verify_polynomial(&p, &opts));
        match result {
            Ok(rec) => {
                for (family, outcome) in FAMILIES.iter().zip(outcomes(&rec)) {
                    tallies.get_mut(family).expect("known family").add(outcome);
                }
                degenerate += usize::from(rec.degenerate);
                identity_failures += usize::from(!rec.identities.all_pass());
                records.push(json!({ "line": line_no, "input": input, "record": rec }));
            }
            Err(e) => {
                errors += 1;
                records.push(json!({ "line": line_no, "input": input, "error": e.to_string() }));
            }
        }
    }

    let families: BTreeMap<&str, Value> = tallies
        .iter()
        .map(|(k, t)| (*k, json!({ "pass": t.pass, "fail": t.fail, "indeterminate": t.indeterminate })))
        .collect();
    let summary = json!({
        "records": records.len(),
        "errors": errors,
        "degenerate": degenerate,
        "identity_failures": identity_failures,
        "families": families,
    });
    let code = if identity_failures > 0 { 1 } else { 0 };
    let doc = json!({ "records": records, "summary": summary });

    match output {
        Some(path) => {
            let body = serde_json::to_string_pretty(&doc).expect("json serializes") + "\n";
            std::fs::write(path, body)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            Ok((json!({ "output": path.display().to_string(), "summary": doc["summary"] }), code))
        }
        None => Ok((doc, code)),
    }
}
