//! Seeded randomized campaigns over the theorem contracts, plus the search
//! for sequences separating log-concavity from the spiral property.
//!
//! Every random draw of trial `i` comes from a ChaCha8 stream keyed by
//! `(seed, i)`, so a trial can be replayed alone with [`replay_trial`] and a
//! report does not depend on how trials are scheduled across threads.
//!
//! Nondecreasing inputs are built by sorting i.i.d. integer draws from
//! `[0, bound]` over one common denominator drawn from `[1, bound]` (or 1 in
//! integer-only mode). If every draw is zero the last entry is set to 1 so
//! that `a_m > 0`.

use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::Rational;
use crate::poly::{taylor_shift, Polynomial, ShiftAlgorithm};
use crate::seq::CoeffSeq;
use crate::shape::{
    audit_implications, check_log_concave, check_no_internal_zeros, check_ratio_monotone, check_spiral, PropertyVerdict,
    Status,
};
use crate::theorem::{edge_inequality_holds, lemma1_holds, lemma2_preserved, lemma3_gap, s1_rearranged, s1_sum};

pub const DEFAULT_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CampaignError {
    #[error("invalid campaign: {0}")]
    InvalidSpec(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum CampaignTarget {
    Theorem1,
    Lemma1,
    Lemma2,
    Lemma3,
    Corollary { c: Rational },
    Separation,
}

impl CampaignTarget {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Theorem1 => "theorem1",
            Self::Lemma1 => "lemma1",
            Self::Lemma2 => "lemma2",
            Self::Lemma3 => "lemma3",
            Self::Corollary { .. } => "corollary",
            Self::Separation => "separation",
        }
    }
}

/// Target names without parameters; `corollary` parses with `c = 1`.
impl FromStr for CampaignTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "theorem1" => Self::Theorem1,
            "lemma1" => Self::Lemma1,
            "lemma2" => Self::Lemma2,
            "lemma3" => Self::Lemma3,
            "corollary" => Self::Corollary { c: Rational::one() },
            "separation" => Self::Separation,
            other => return Err(format!("unknown campaign target `{other}`")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSpec {
    pub target: CampaignTarget,
    pub trials: u64,
    pub seed: u64,
    /// Inclusive `(min, max)` polynomial degree.
    pub degree_range: (usize, usize),
    pub magnitude_bound: u64,
    pub integer_only: bool,
    /// Permits corollary runs with `c < 1`. Failures there are findings.
    pub allow_below_one: bool,
}

impl CampaignSpec {
    /// Defaults: degrees 2..=64 and bound 10^6, except the separation
    /// search, which uses degrees 2..=4 and bound 10 so that examples stay
    /// small enough to read.
    pub fn new(target: CampaignTarget, trials: u64, seed: u64) -> Self {
        let (degree_range, magnitude_bound) = match target {
            CampaignTarget::Separation => ((2, 4), 10),
            _ => ((2, 64), DEFAULT_BOUND),
        };
        Self { target, trials, seed, degree_range, magnitude_bound, integer_only: false, allow_below_one: false }
    }

    pub fn with_degrees(mut self, min: usize, max: usize) -> Self {
        self.degree_range = (min, max);
        self
    }

    pub fn with_bound(mut self, bound: u64) -> Self {
        self.magnitude_bound = bound;
        self
    }

    pub fn validate(&self) -> Result<(), CampaignError> {
        let bad = |msg: String| Err(CampaignError::InvalidSpec(msg));
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        let (lo, hi) = self.degree_range;
        if lo > hi {
            return bad(format!("degree range {lo}..={hi} is empty"));
        }
        if self.magnitude_bound == 0 {
            return bad("magnitude bound must be at least 1".into());
        }
        if let CampaignTarget::Corollary { c } = &self.target {
            if *c < Rational::one() && !self.allow_below_one {
                return bad(format!("corollary shift c = {c} is below 1; pass the override to explore it"));
            }
        }
        if self.target == CampaignTarget::Lemma3 && hi < 2 {
            return bad("lemma3 needs degrees of at least 2".into());
        }
        if self.target == CampaignTarget::Separation && hi < 2 {
            return bad("separation needs degrees of at least 2".into());
        }
        Ok(())
    }
}

/// A contract failure (or, for exploratory runs, a finding) with everything
/// needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub trial: u64,
    pub check: String,
    pub input: CoeffSeq,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub transformed: Option<CoeffSeq>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<PropertyVerdict>,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeparationKind {
    LogConcaveNotSpiral,
    SpiralNotLogConcave,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationExample {
    pub kind: SeparationKind,
    pub trial: u64,
    pub sequence: CoeffSeq,
    pub log_concave: PropertyVerdict,
    pub spiral: PropertyVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub spec: CampaignSpec,
    pub trials_run: u64,
    /// Trials whose input satisfied the contract's hypothesis.
    pub exercised: u64,
    pub violations: Vec<Violation>,
    pub findings: Vec<Violation>,
    pub examples_found: Vec<SeparationExample>,
    pub timing: Timing,
}

impl CampaignReport {
    /// No violations, something was exercised, and for the separation
    /// search both kinds of example were found.
    pub fn passed(&self) -> bool {
        let separation_ok = self.spec.target != CampaignTarget::Separation
            || [SeparationKind::LogConcaveNotSpiral, SeparationKind::SpiralNotLogConcave]
                .iter()
                .all(|k| self.examples_found.iter().any(|e| e.kind == *k));
        self.violations.is_empty() && self.exercised > 0 && separation_ok
    }
}

/// Everything one trial produced.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrialOutcome {
    pub exercised: bool,
    pub violations: Vec<Violation>,
    pub findings: Vec<Violation>,
    pub example: Option<SeparationExample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Independent random streams per trial.
#[derive(Debug, Clone, Copy)]
enum Purpose {
    Degree = 1,
    Sequence = 2,
    Lemma1 = 3,
}

fn trial_rng(seed: u64, trial: u64, purpose: Purpose) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (purpose as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.set_stream(trial);
    rng
}

fn draw_denominator(rng: &mut impl Rng, bound: u64, integer_only: bool) -> i64 {
    if integer_only {
        1
    } else {
        rng.random_range(1..=bound) as i64
    }
}

fn draw_nondecreasing(rng: &mut impl Rng, degree: usize, bound: u64, integer_only: bool, positive: bool) -> CoeffSeq {
    let den = draw_denominator(rng, bound, integer_only);
    let lo = u64::from(positive);
    let mut nums: Vec<u64> = (0..=degree).map(|_| rng.random_range(lo..=bound)).collect();
    nums.sort_unstable();
    if nums[degree] == 0 {
        nums[degree] = 1;
    }
    CoeffSeq::new(nums.into_iter().map(|n| Rational::ratio(n as i64, den)).collect()).expect("degree + 1 entries")
}

fn draw_positive(rng: &mut impl Rng, degree: usize, bound: u64, integer_only: bool) -> CoeffSeq {
    let den = draw_denominator(rng, bound, integer_only);
    CoeffSeq::new((0..=degree).map(|_| Rational::ratio(rng.random_range(1..=bound) as i64, den)).collect())
        .expect("degree + 1 entries")
}

/// Nonnegative nondecreasing rational sequence with positive last entry,
/// entries at most `bound`, determined by `(seed, trial)` alone.
pub fn gen_nondecreasing_seq(seed: u64, trial: u64, degree: usize, bound: u64) -> CoeffSeq {
    draw_nondecreasing(&mut trial_rng(seed, trial, Purpose::Sequence), degree, bound.max(1), false, false)
}

/// Like [`gen_nondecreasing_seq`] with every entry positive.
pub fn gen_positive_nondecreasing_seq(seed: u64, trial: u64, degree: usize, bound: u64) -> CoeffSeq {
    draw_nondecreasing(&mut trial_rng(seed, trial, Purpose::Sequence), degree, bound.max(1), false, true)
}

/// Positive sequence with no ordering constraint.
pub fn gen_positive_seq(seed: u64, trial: u64, degree: usize, bound: u64) -> CoeffSeq {
    draw_positive(&mut trial_rng(seed, trial, Purpose::Sequence), degree, bound.max(1), false)
}

/// Sextuple `(a, b, c, d, e, f)` of positive rationals with
/// `a/b <= c/d <= e/f`.
pub fn gen_lemma1_input(seed: u64, trial: u64, bound: u64, integer_only: bool) -> [Rational; 6] {
    let mut rng = trial_rng(seed, trial, Purpose::Lemma1);
    let bound = bound.max(1);
    let ratios = draw_nondecreasing(&mut rng, 2, bound, integer_only, true);
    let mut den = || Rational::ratio(rng.random_range(1..=bound) as i64, draw_denominator(&mut rng, bound, integer_only));
    let (b, d, f) = (den(), den(), den());
    [&ratios[0] * &b, b, &ratios[1] * &d, d, &ratios[2] * &f, f]
}

fn trial_degree(spec: &CampaignSpec, trial: u64) -> usize {
    let (mut lo, hi) = spec.degree_range;
    if matches!(spec.target, CampaignTarget::Lemma3 | CampaignTarget::Separation) {
        lo = lo.max(2);
    }
    trial_rng(spec.seed, trial, Purpose::Degree).random_range(lo..=hi)
}

/// The input sequence of trial `trial` (for every target but `lemma1`).
pub fn campaign_input(spec: &CampaignSpec, trial: u64) -> CoeffSeq {
    let degree = trial_degree(spec, trial);
    let mut rng = trial_rng(spec.seed, trial, Purpose::Sequence);
    let bound = spec.magnitude_bound;
    match spec.target {
        CampaignTarget::Lemma3 => draw_nondecreasing(&mut rng, degree, bound, spec.integer_only, true),
        CampaignTarget::Separation => draw_positive(&mut rng, degree, bound, spec.integer_only),
        _ => draw_nondecreasing(&mut rng, degree, bound, spec.integer_only, false),
    }
}

fn shift(seq: &CoeffSeq, c: &Rational) -> CoeffSeq {
    taylor_shift(&Polynomial::new(seq.clone()), c, ShiftAlgorithm::HornerSynthetic).into_coeffs()
}

/// Recomputes trial `trial` of `spec` from scratch.
pub fn replay_trial(spec: &CampaignSpec, trial: u64) -> TrialOutcome {
    let mut out = TrialOutcome::default();
    let violation = |check: &str, input: &CoeffSeq, transformed: Option<CoeffSeq>, verdict: Option<PropertyVerdict>, detail: String| Violation {
        trial,
        check: check.to_string(),
        input: input.clone(),
        transformed,
        verdict,
        detail,
    };

    if spec.target == CampaignTarget::Lemma1 {
        let v = gen_lemma1_input(spec.seed, trial, spec.magnitude_bound, spec.integer_only);
        let input = CoeffSeq::new(v.to_vec()).expect("six entries");
        match lemma1_holds(&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]) {
            Ok(true) => out.exercised = true,
            Ok(false) => {
                out.exercised = true;
                out.violations.push(violation("lemma1", &input, None, None, "conclusion false under hypothesis".into()));
            }
            Err(e) => out.violations.push(violation("lemma1-generator", &input, None, None, e.to_string())),
        }
        return out;
    }

    let seq = campaign_input(spec, trial);
    match &spec.target {
        CampaignTarget::Theorem1 => {
            out.exercised = true;
            let shifted = shift(&seq, &Rational::one());
            let verdict = check_ratio_monotone(&shifted);
            if !verdict.is_holds() {
                let detail = verdict.detail.clone();
                out.violations.push(violation("theorem1/ratio-monotone", &seq, Some(shifted), Some(verdict), detail));
            }
            if seq.degree() >= 2 {
                match edge_inequality_holds(&seq) {
                    Ok(true) => {}
                    Ok(false) => out.violations.push(violation("theorem1/edge-inequality", &seq, None, None, "b0*b(m-2) > b1*b(m-1)".into())),
                    Err(e) => out.violations.push(violation("theorem1/edge-inequality", &seq, None, None, e.to_string())),
                }
            }
            if seq.degree() >= 1 {
                let (s1, s1r) = (s1_sum(&seq).expect("m >= 1"), s1_rearranged(&seq).expect("m >= 1"));
                if s1 != s1r || s1.is_negative() {
                    out.violations.push(violation("theorem1/s1", &seq, None, None, format!("s1 = {s1}, rearranged = {s1r}")));
                }
            }
        }
        CampaignTarget::Lemma2 => {
            let b = shift(&seq, &Rational::one());
            match lemma2_preserved(&Polynomial::new(b.clone())) {
                Ok(true) => out.exercised = true,
                Ok(false) => {
                    out.exercised = true;
                    let product = crate::poly::mul_by_x_plus_one(&Polynomial::new(b.clone())).into_coeffs();
                    let verdict = check_ratio_monotone(&product);
                    let detail = verdict.detail.clone();
                    out.violations.push(violation("lemma2", &b, Some(product), Some(verdict), detail));
                }
                Err(e) => out.violations.push(violation("lemma2/hypothesis", &seq, Some(b), None, e.to_string())),
            }
        }
        CampaignTarget::Lemma3 => match lemma3_gap(&seq) {
            Ok(rep) => {
                out.exercised = true;
                if rep.gap.is_negative() {
                    out.violations.push(violation("lemma3", &seq, None, None, format!("gap = {} < 0", rep.gap)));
                }
            }
            Err(e) => out.violations.push(violation("lemma3-generator", &seq, None, None, e.to_string())),
        },
        CampaignTarget::Corollary { c } => {
            let shifted = shift(&seq, c);
            let informational = *c < Rational::one();
            for verdict in [check_log_concave(&shifted), check_no_internal_zeros(&shifted)] {
                if verdict.status != Status::NotApplicable {
                    out.exercised = true;
                }
                if !verdict.is_holds() {
                    let check = format!("corollary/{}", verdict.property);
                    let detail = verdict.detail.clone();
                    let v = violation(&check, &seq, Some(shifted.clone()), Some(verdict), detail);
                    if informational {
                        out.findings.push(v);
                    } else {
                        out.violations.push(v);
                    }
                }
            }
        }
        CampaignTarget::Separation => {
            out.exercised = true;
            for check in audit_implications(&seq) {
                if !check.consistent {
                    out.violations.push(violation(
                        "separation/implication",
                        &seq,
                        None,
                        None,
                        format!("{} violated: {:?} then {:?}", check.implication, check.antecedent, check.consequent),
                    ));
                }
            }
            let lc = check_log_concave(&seq);
            let sp = check_spiral(&seq);
            let kind = match (lc.status, sp.status) {
                (Status::Holds, Status::Fails) => Some(SeparationKind::LogConcaveNotSpiral),
                (Status::Fails, Status::Holds) => Some(SeparationKind::SpiralNotLogConcave),
                _ => None,
            };
            out.example = kind.map(|kind| SeparationExample { kind, trial, sequence: seq.clone(), log_concave: lc, spiral: sp });
        }
        CampaignTarget::Lemma1 => unreachable!("handled above"),
    }
    out
}

pub fn run_campaign(spec: &CampaignSpec) -> Result<CampaignReport, CampaignError> {
    run_campaign_with(spec, Execution::Parallel)
}

/// Runs every trial and assembles the report in trial order.
pub fn run_campaign_with(spec: &CampaignSpec, execution: Execution) -> Result<CampaignReport, CampaignError> {
    spec.validate()?;
    let start = Instant::now();
    let outcomes: Vec<TrialOutcome> = match execution {
        Execution::Sequential => (0..spec.trials).map(|t| replay_trial(spec, t)).collect(),
        Execution::Parallel => (0..spec.trials).into_par_iter().map(|t| replay_trial(spec, t)).collect(),
    };

    let mut report = CampaignReport {
        spec: spec.clone(),
        trials_run: spec.trials,
        exercised: 0,
        violations: Vec::new(),
        findings: Vec::new(),
        examples_found: Vec::new(),
        timing: Timing { wall_time_ms: 0.0 },
    };
    for outcome in outcomes {
        report.exercised += u64::from(outcome.exercised);
        report.violations.extend(outcome.violations);
        report.findings.extend(outcome.findings);
        if let Some(example) = outcome.example {
            if !report.examples_found.iter().any(|e| e.kind == example.kind) {
                report.examples_found.push(example);
            }
        }
    }
    report.timing.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

/// Removes every `timing` member from a JSON document, for comparing runs.
pub fn strip_timing(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("timing");
            map.values_mut().for_each(strip_timing);
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}
