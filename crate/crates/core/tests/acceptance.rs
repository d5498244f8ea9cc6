//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use interlace_core::criteria::{
    classify, duality_argument_check, hurwitz_classic, rhp_unit_disc_probe, si_hurwitz_criterion,
    si_lienard_chipart, stability_hankel_criterion, stodola_check,
};
use interlace_core::generate::{
    binomial_dual, binomial_dual_roots, perturb, random_polynomial, random_si, random_stable,
    random_tridiagonal,
};
use interlace_core::hankel::associated_phi;
use interlace_core::hurwitz::{
    has_zero_minor, leading_minors, sample_minor_indices, total_nonnegativity_spot_check,
};
use interlace_core::poly::{int, ratio, to_f64, Polynomial, Rational};
use interlace_core::roots::{isolate_real_roots, refine, si_oracle, SiKind};
use interlace_core::stability::{stability_oracle, StabilityVerdict};
use interlace_core::stieltjes::{cf_expand, cf_sign_check};
use interlace_core::transform::{derivative, dual, markov_family, tridiagonal_char_poly};
use interlace_core::verify::{identity_suite, VerifyOptions};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pow10_inv(e: u32) -> Rational {
    Rational::new(1.into(), num::BigInt::from(10).pow(e))
}

fn si_of(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Polynomial {
    let n = rng.gen_range(lo..=hi);
    random_si(rng, n).unwrap()
}

fn stable_of(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Polynomial {
    let n = rng.gen_range(lo..=hi);
    random_stable(rng, n).unwrap()
}

struct Corpus {
    si: Vec<Polynomial>,
    stable: Vec<Polynomial>,
    random: Vec<Polynomial>,
}

fn corpus() -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let si = (0..200).map(|_| si_of(&mut rng, 2, 8)).collect();
    let stable = (0..200).map(|_| stable_of(&mut rng, 1, 8)).collect();
    let mut random = Vec::with_capacity(1000);
    while random.len() < 1000 {
        let p = match random.len() % 5 {
            0 | 1 => random_polynomial(&mut rng, 8).unwrap(),
            2 => si_of(&mut rng, 1, 8),
            3 => {
                let p = si_of(&mut rng, 2, 8);
                perturb(&mut rng, &p)
            }
            _ => {
                let p = stable_of(&mut rng, 2, 8);
                perturb(&mut rng, &p)
            }
        };
        if !has_zero_minor(&leading_minors(&p).unwrap()) {
            random.push(p);
        }
    }
    Corpus { si, stable, random }
}

fn si_sample(seed: u64, count: usize) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| si_of(&mut rng, 2, 8)).collect()
}

fn binomial_dual_example() -> Outcome {
    let width = pow10_inv(12);
    let mut worst = 0.0f64;
    for n in 1..=8 {
        for a in [int(1), int(2), ratio(1, 2)] {
            let q = binomial_dual(n, &a).map_err(|e| e.to_string())?;
            let roots = isolate_real_roots(&q).map_err(|e| e.to_string())?;
            ensure(roots.len() == n, || format!("n={n} a={a}: {} real roots", roots.len()))?;
            let expected = binomial_dual_roots(n, &a);
            for (iv, mu) in roots.iter().zip(&expected) {
                let iv = refine(&q, iv, &width);
                let err = (to_f64(&iv.midpoint()) - mu).abs();
                worst = worst.max(err);
                ensure(err <= 1e-10, || format!("n={n} a={a}: |mid - {mu}| = {err:e}"))?;
            }
        }
    }
    Ok(format!("24 cases, max error {worst:.1e}"))
}

fn agreement(c: &Corpus) -> Outcome {
    for p in &c.si {
        let n = p.degree();
        let ctx = || format!("SI fixture {p}");
        ensure(si_oracle(p).unwrap().kind == SiKind::SiI, || ctx() + ": oracle")?;
        ensure(si_hurwitz_criterion(p).unwrap(), || ctx() + ": Hurwitz minors")?;
        ensure(si_lienard_chipart(p).unwrap(), || ctx() + ": Lienard-Chipart")?;
        ensure(stodola_check(p).unwrap(), || ctx() + ": Stodola")?;
        let cf = cf_expand(&associated_phi(p).unwrap()).map_err(|e| format!("{}: {e}", ctx()))?;
        ensure(cf_sign_check(&cf, n), || ctx() + ": continued fraction signs")?;
    }
    for p in &c.stable {
        ensure(hurwitz_classic(p).unwrap(), || format!("stable fixture {p}: Hurwitz"))?;
        ensure(stability_hankel_criterion(p).unwrap(), || format!("stable fixture {p}: Hankel"))?;
    }
    let (mut si_count, mut stable_count, mut skipped) = (0, 0, 0);
    for p in &c.random {
        let r = classify(p).map_err(|e| format!("{p}: {e}"))?;
        ensure(r.consistent, || format!("random {p}: report inconsistent"))?;
        let si_h = r.verdict("si_hurwitz").unwrap();
        let si_lc = r.verdict("si_lienard_chipart").unwrap();
        let classic = r.verdict("hurwitz_classic").unwrap();
        let hankel = r.verdict("stability_hankel").unwrap();
        ensure(si_h == si_lc, || format!("random {p}: Hurwitz vs Lienard-Chipart"))?;
        ensure(classic == hankel, || format!("random {p}: classic vs Hankel"))?;
        ensure(si_h == r.dual_stable, || format!("random {p}: duality"))?;
        if r.oracle.si_detail.indeterminate {
            skipped += 1;
        } else {
            ensure(si_h == (r.oracle.si == SiKind::SiI), || format!("random {p}: SI oracle"))?;
        }
        if r.oracle.si == SiKind::SiI {
            ensure(r.verdict("stodola").unwrap(), || format!("random {p}: Stodola necessity"))?;
        }
        match r.oracle.stability {
            StabilityVerdict::Indeterminate => skipped += 1,
            v => ensure(classic == (v == StabilityVerdict::Stable), || format!("random {p}: stability oracle"))?,
        }
        si_count += usize::from(si_h);
        stable_count += usize::from(classic);
    }
    Ok(format!(
        "200 SI, 200 stable, 1000 random ({si_count} SI_I, {stable_count} stable, {skipped} oracle skips)"
    ))
}

fn duality(c: &Corpus) -> Outcome {
    let all = c.si.iter().chain(&c.stable).chain(&c.random);
    let mut count = 0;
    for p in all {
        let q = dual(p);
        ensure(si_hurwitz_criterion(p).unwrap() == hurwitz_classic(&q).unwrap(), || {
            format!("{p}: SI criterion differs from stability of the dual")
        })?;
        ensure(dual(&q).to_text() == p.to_text(), || format!("{p}: dual is not an involution"))?;
        count += 1;
    }
    Ok(format!("{count} polynomials"))
}

fn universal_identities(c: &Corpus) -> Outcome {
    let mut agree = 0;
    for (i, p) in c.random.iter().enumerate() {
        let opts = VerifyOptions { seed: i as u64, ..Default::default() };
        let r = identity_suite(p, &opts).map_err(|e| format!("{p}: {e}"))?;
        ensure(r.all_pass(), || format!("{p}: {r:?}"))?;
        agree += usize::from(r.cf_cross_path == interlace_core::verify::CfAgreement::Agree);
    }
    Ok(format!("1000 polynomials, continued fractions defined and equal on {agree}"))
}

fn total_nonnegativity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let mut minors = 0;
    for p in si_sample(5, 50) {
        let sample = sample_minor_indices(p.degree(), 3, 100, &mut rng);
        let r = total_nonnegativity_spot_check(&p, &sample).map_err(|e| e.to_string())?;
        if let Some(bad) = r.checks.iter().find(|c| !(c.signed_nonnegative && c.magnitudes_equal)) {
            return Err(format!("{p}: minor {:?}", bad.index));
        }
        minors += r.checks.len();
    }
    Ok(format!("50 polynomials, {minors} minors"))
}

fn closure() -> Outcome {
    let mut checked = 0;
    for p in si_sample(6, 100) {
        let n = p.degree();
        for k in 1..n {
            let d = derivative(&p, k);
            ensure(si_oracle(&d).unwrap().kind == SiKind::SiI, || format!("{p}: derivative {k}"))?;
            checked += 1;
        }
        for j in 1..p.r() {
            let m = markov_family(&p, j).map_err(|e| e.to_string())?;
            ensure(si_oracle(&m).unwrap().kind == SiKind::SiI, || format!("{p}: markov family j={j} gives {m}"))?;
            checked += 1;
        }
    }
    Ok(format!("100 polynomials, {checked} derived polynomials"))
}

fn tridiagonal() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for positive in [true, false] {
        let want = if positive { SiKind::SiI } else { SiKind::SiII };
        for _ in 0..100 {
            let n = rng.gen_range(1..=8);
            let spec = random_tridiagonal(&mut rng, n, positive).unwrap();
            let p = tridiagonal_char_poly(&spec);
            let got = si_oracle(&p).unwrap().kind;
            ensure(got == want, || format!("{:?} -> {p} is {got:?}", spec.entries()))?;
        }
    }
    Ok("100 specs per sign of b_1".into())
}

fn duality_residuals() -> Outcome {
    let w = pow10_inv(8);
    let w16 = &w / int(16);
    let mut polys: Vec<Polynomial> = ["1 -1", "1 -1 -2", "1 -2 -5 6"].iter().map(|t| t.parse().unwrap()).collect();
    polys.extend(si_sample(8, 50));
    let (mut coarse, mut fine) = (Rational::zero(), Rational::zero());
    for p in &polys {
        let a = duality_argument_check(p, &w).map_err(|e| format!("{p}: {e}"))?;
        let b = duality_argument_check(p, &w16).map_err(|e| format!("{p}: {e}"))?;
        ensure(a.all_pass && b.all_pass, || format!("{p}: residual above C*w"))?;
        coarse += a.roots.iter().fold(Rational::zero(), |s, r| s + &r.residual);
        fine += b.roots.iter().fold(Rational::zero(), |s, r| s + &r.residual);
    }
    ensure(!fine.is_zero(), || "all refined residuals vanish".into())?;
    let shrink = to_f64(&(&coarse / &fine));
    ensure(shrink >= 10.0, || format!("aggregate shrink {shrink:.2} < 10"))?;
    Ok(format!("{} polynomials, aggregate shrink {shrink:.2}x", polys.len()))
}

fn disc_probe() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let p = stable_of(&mut rng, 1, 8);
        ensure(stability_oracle(&p).unwrap() == StabilityVerdict::Stable, || format!("{p}: not stable"))?;
        let probe = rhp_unit_disc_probe(&p, 100).unwrap();
        worst = worst.max(probe.max_abs);
        ensure(probe.max_abs < 1.0 + 1e-9, || format!("{p}: max |R| = {}", probe.max_abs))?;
    }
    Ok(format!("50 polynomials, max |R| = {worst:.6}"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let c = corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 binomial dual roots", Box::new(binomial_dual_example)),
        ("2 criterion/oracle agreement", Box::new(|| agreement(&c))),
        ("3 duality and involution", Box::new(|| duality(&c))),
        ("4 universal identities", Box::new(|| universal_identities(&c))),
        ("5 total nonnegativity", Box::new(total_nonnegativity)),
        ("6 derivative and markov closure", Box::new(closure)),
        ("7 tridiagonal generator", Box::new(tridiagonal)),
        ("8 duality residuals", Box::new(duality_residuals)),
        ("9 unit disc probe", Box::new(disc_probe)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{secs:.2}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail} [{secs:.2}s]");
            }
        }
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
