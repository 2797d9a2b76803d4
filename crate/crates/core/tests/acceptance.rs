//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run
//! with `cargo test -p ratiomono --test acceptance -- --nocapture` to see
//! them.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratiomono::boros_moll::{bm_polynomial, bm_ratio_identity, bm_shifted_seq};
use ratiomono::fuzz::{campaign_input, run_campaign, run_campaign_with, strip_timing, Execution, SeparationKind};
use ratiomono::quartic::{quadrature_lhs, verify_identity};
use ratiomono::shape::{check_log_concave, check_nonneg_nondecreasing, check_ratio_monotone, check_spiral, Status};
use ratiomono::theorem::{edge_inequality_holds, induction_replay, lemma3_gap, s1_rearranged, s1_sum};
use ratiomono::{taylor_shift, CampaignSpec, CampaignTarget, CoeffSeq, Polynomial, Rational, ShiftAlgorithm};

const SEED: u64 = 20_240_601;

fn report(id: &str, pass: bool, detail: impl AsRef<str>) {
    println!("[{}] {id}: {}", if pass { "PASS" } else { "FAIL" }, detail.as_ref());
    assert!(pass, "{id} failed: {}", detail.as_ref());
}

fn random_rational(rng: &mut ChaCha8Rng, num_bound: i64, den_bound: i64) -> Rational {
    Rational::ratio(rng.random_range(-num_bound..=num_bound), rng.random_range(1..=den_bound))
}

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> Polynomial {
    let degree = rng.random_range(0..=max_degree);
    let coeffs = (0..=degree).map(|_| random_rational(rng, 1_000, 60)).collect();
    Polynomial::new(CoeffSeq::new(coeffs).unwrap())
}

fn theorem1_spec() -> CampaignSpec {
    CampaignSpec::new(CampaignTarget::Theorem1, 10_000, SEED).with_degrees(2, 64)
}

#[test]
fn ac01_theorem1_campaign() {
    let spec = theorem1_spec();
    let start = Instant::now();
    let rep = run_campaign(&spec).unwrap();
    let elapsed = start.elapsed();
    let pass = rep.violations.is_empty() && rep.exercised == 10_000 && elapsed <= Duration::from_secs(120);
    report(
        "AC1 theorem1",
        pass,
        format!(
            "{} trials, {} ratio-monotone shifts checked, {} violations, {:.1}s",
            rep.trials_run,
            rep.exercised,
            rep.violations.len(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn ac02_lemma2_campaign() {
    let spec = CampaignSpec::new(CampaignTarget::Lemma2, 5_000, SEED).with_degrees(0, 64);
    let rep = run_campaign(&spec).unwrap();
    let pass = rep.violations.is_empty() && rep.exercised == 5_000;
    report("AC2 lemma2", pass, format!("{} ratio-monotone inputs preserved, {} violations", rep.exercised, rep.violations.len()));
}

#[test]
fn ac03_lemma3() {
    let spec = CampaignSpec::new(CampaignTarget::Lemma3, 10_000, SEED).with_degrees(2, 64);
    let rep = run_campaign(&spec).unwrap();
    let mut constant_ok = true;
    for len in 3..=20 {
        for value in [Rational::one(), Rational::ratio(7, 3), Rational::from(1000)] {
            let gap = lemma3_gap(&CoeffSeq::new(vec![value; len]).unwrap()).unwrap().gap;
            constant_ok &= gap.is_zero();
        }
    }
    let pass = rep.violations.is_empty() && rep.exercised == 10_000 && constant_ok;
    report(
        "AC3 lemma3",
        pass,
        format!("{} gaps >= 0, {} violations, constant sequences zero gap: {constant_ok}", rep.exercised, rep.violations.len()),
    );
}

#[test]
fn ac04_proof_machinery() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut s1_ok = 0;
    for _ in 0..10_000 {
        let len = rng.random_range(2..=65);
        let seq = CoeffSeq::new((0..len).map(|_| random_rational(&mut rng, 1_000_000, 1_000)).collect()).unwrap();
        s1_ok += usize::from(s1_sum(&seq).unwrap() == s1_rearranged(&seq).unwrap());
    }

    let spec = theorem1_spec();
    let edge_ok = (0..spec.trials)
        .filter(|&t| edge_inequality_holds(&campaign_input(&spec, t)) == Ok(true))
        .count();

    let mut replay_ok = 0;
    for _ in 0..1_000 {
        let mut p = random_poly(&mut rng, 64);
        if p.degree() == 0 {
            p = Polynomial::new(CoeffSeq::new(vec![p.coeff(0).clone(), Rational::one()]).unwrap());
        }
        replay_ok += usize::from(induction_replay(&p, ShiftAlgorithm::HornerSynthetic) == Ok(true));
    }

    let pass = s1_ok == 10_000 && edge_ok == 10_000 && replay_ok == 1_000;
    report(
        "AC4 proof machinery",
        pass,
        format!("s1 identity {s1_ok}/10000, edge inequality {edge_ok}/10000, induction replay {replay_ok}/1000"),
    );
}

#[test]
fn ac05_corollary_campaigns() {
    let mut lines = Vec::new();
    let mut pass = true;
    for c in [Rational::one(), Rational::ratio(3, 2), Rational::from(2)] {
        let spec = CampaignSpec::new(CampaignTarget::Corollary { c: c.clone() }, 2_000, SEED).with_degrees(0, 64);
        let rep = run_campaign(&spec).unwrap();
        pass &= rep.violations.is_empty() && rep.exercised == 2_000;
        lines.push(format!("c={c}: {} violations", rep.violations.len()));
    }
    report("AC5 corollary", pass, lines.join(", "));
}

#[test]
fn ac06_boros_moll_family() {
    let mut failures = Vec::new();
    for m in 0..=60u32 {
        for k in 0..m {
            let id = bm_ratio_identity(m, k).unwrap();
            if !(id.equal && id.below_one) {
                failures.push(format!("ratio identity m={m} k={k}"));
            }
        }
        let row = bm_shifted_seq(m);
        if row.first_nonpositive().is_some() || !check_nonneg_nondecreasing(&row).is_holds() {
            failures.push(format!("row m={m} not positive nondecreasing"));
        }
        let p = bm_polynomial(m);
        if !check_ratio_monotone(p.coeffs()).is_holds() {
            failures.push(format!("P_{m} not ratio monotone"));
        }
        if !check_log_concave(p.coeffs()).is_holds() {
            failures.push(format!("P_{m} not log-concave"));
        }
    }
    let p1 = [Rational::ratio(3, 2), Rational::one()];
    let p2 = [Rational::ratio(21, 8), Rational::ratio(15, 4), Rational::ratio(3, 2)];
    if bm_polynomial(1).coeffs().as_slice() != p1 {
        failures.push("P_1 != x + 3/2".into());
    }
    if bm_polynomial(2).coeffs().as_slice() != p2 {
        failures.push("P_2 != (3/2)x^2 + (15/4)x + 21/8".into());
    }
    report("AC6 boros-moll m<=60", failures.is_empty(), if failures.is_empty() { "all checks hold".into() } else { failures.join("; ") });
}

#[test]
fn ac07_quartic_integral() {
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for m in 0..=6u32 {
        for x in [0.25, 0.5, 1.0, 2.0, 10.0] {
            let check = verify_identity(x, m, 1e-8).unwrap();
            worst = worst.max(check.rel_err);
            if !check.pass {
                failures.push(format!("m={m} x={x} rel_err={:e}", check.rel_err));
            }
        }
    }
    let anchor1 = quadrature_lhs(1.0, 0, 1e-12).unwrap();
    let anchor2 = quadrature_lhs(0.0, 1, 1e-12).unwrap();
    let a1 = (anchor1 - PI / 4.0).abs() / (PI / 4.0);
    let expected2 = 3.0 * PI / 2f64.powf(3.5);
    let a2 = (anchor2 - expected2).abs() / expected2;
    let pass = failures.is_empty() && a1 <= 1e-9 && a2 <= 1e-9;
    report(
        "AC7 quartic integral",
        pass,
        format!("35 identities, worst rel_err {worst:e}; anchors {a1:e}, {a2:e}; {}", failures.join("; ")),
    );
}

#[test]
fn ac08_shift_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let (mut agree, mut compose, mut invert) = (0, 0, 0);
    let (mut negative_c, mut fractional_c) = (0, 0);
    for _ in 0..1_000 {
        let p = random_poly(&mut rng, 64);
        let c = random_rational(&mut rng, 40, 12);
        let c2 = random_rational(&mut rng, 40, 12);
        negative_c += usize::from(c.is_negative());
        fractional_c += usize::from(!c.is_integer());
        let naive = taylor_shift(&p, &c, ShiftAlgorithm::NaiveBinomial);
        let horner = taylor_shift(&p, &c, ShiftAlgorithm::HornerSynthetic);
        agree += usize::from(naive == horner);
        let twice = taylor_shift(&horner, &c2, ShiftAlgorithm::HornerSynthetic);
        compose += usize::from(twice == taylor_shift(&p, &(&c + &c2), ShiftAlgorithm::NaiveBinomial));
        invert += usize::from(taylor_shift(&horner, &(-&c), ShiftAlgorithm::HornerSynthetic) == p);
    }
    let pass = agree == 1_000 && compose == 1_000 && invert == 1_000 && negative_c > 0 && fractional_c > 0;
    report(
        "AC8 shift oracle",
        pass,
        format!("agree {agree}/1000, compose {compose}/1000, invert {invert}/1000 ({negative_c} negative c, {fractional_c} non-integer c)"),
    );
}

#[test]
fn ac09_separation_search() {
    let spec = CampaignSpec::new(CampaignTarget::Separation, 10_000, SEED);
    let rep = run_campaign(&spec).unwrap();
    let mut found = Vec::new();
    let mut reverified = true;
    for ex in &rep.examples_found {
        let lc = check_log_concave(&ex.sequence).status;
        let sp = check_spiral(&ex.sequence).status;
        reverified &= match ex.kind {
            SeparationKind::LogConcaveNotSpiral => lc == Status::Holds && sp == Status::Fails,
            SeparationKind::SpiralNotLogConcave => lc == Status::Fails && sp == Status::Holds,
        };
        found.push(format!("{:?} {} (trial {})", ex.kind, ex.sequence, ex.trial));
    }
    let pass = rep.passed() && rep.examples_found.len() == 2 && reverified;
    report("AC9 separation", pass, found.join("; "));
}

#[test]
fn ac10_determinism() {
    let specs = [
        CampaignSpec::new(CampaignTarget::Theorem1, 300, 7),
        CampaignSpec::new(CampaignTarget::Lemma1, 300, 7),
        CampaignSpec::new(CampaignTarget::Lemma2, 300, 7),
        CampaignSpec::new(CampaignTarget::Lemma3, 300, 7),
        CampaignSpec::new(CampaignTarget::Corollary { c: Rational::ratio(3, 2) }, 300, 7),
        CampaignSpec::new(CampaignTarget::Separation, 3_000, 7),
    ];
    let mut identical = 0;
    for spec in &specs {
        let json = |execution| {
            let mut v = serde_json::to_value(run_campaign_with(spec, execution).unwrap()).unwrap();
            strip_timing(&mut v);
            serde_json::to_string(&v).unwrap()
        };
        let a = json(Execution::Parallel);
        let b = json(Execution::Parallel);
        let c = json(Execution::Sequential);
        identical += usize::from(a == b && b == c);
    }
    report("AC10 determinism", identical == specs.len(), format!("{identical}/{} campaigns byte-identical across reruns and scheduling", specs.len()));
}
