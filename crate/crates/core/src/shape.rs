//! Witness-producing checkers for unimodality, the spiral property,
//! log-concavity and ratio monotonicity.
//!
//! Spiral, log-concave and ratio-monotone are only defined for positive
//! sequences. On any entry `<= 0` those checkers return
//! [`Status::NotApplicable`] rather than [`Status::Fails`]. All inequalities
//! are non-strict, and every ratio comparison is a cross-multiplication.
//!
//! Chain endpoints use floor: chain A of ratio monotonicity runs over
//! `i = 0..=floor((m-1)/2)` and chain B over `i = 1..=floor(m/2)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::numeric::{cross_cmp, Rational};
use crate::seq::CoeffSeq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    NonnegNondecreasing,
    Unimodal,
    Spiral,
    LogConcave,
    RatioMonotone,
    NoInternalZeros,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::NonnegNondecreasing,
        Property::Unimodal,
        Property::Spiral,
        Property::LogConcave,
        Property::RatioMonotone,
        Property::NoInternalZeros,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::NonnegNondecreasing => "nonneg-nondecreasing",
            Self::Unimodal => "unimodal",
            Self::Spiral => "spiral",
            Self::LogConcave => "log-concave",
            Self::RatioMonotone => "ratio-monotone",
            Self::NoInternalZeros => "no-internal-zeros",
        }
    }

    pub fn check(self, seq: &CoeffSeq) -> PropertyVerdict {
        match self {
            Self::NonnegNondecreasing => check_nonneg_nondecreasing(seq),
            Self::Unimodal => check_unimodal(seq),
            Self::Spiral => check_spiral(seq),
            Self::LogConcave => check_log_concave(seq),
            Self::RatioMonotone => check_ratio_monotone(seq),
            Self::NoInternalZeros => check_no_internal_zeros(seq),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

/// Which of the two ratio chains a ratio-monotonicity witness belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RatioChain {
    /// `a_m/a_0 <= a_{m-1}/a_1 <= ... <= 1`
    A,
    /// `a_0/a_{m-1} <= a_1/a_{m-2} <= ... <= 1`
    B,
}

/// `a_num / a_den` with its indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedRatio {
    pub num_index: usize,
    pub den_index: usize,
    pub num: Rational,
    pub den: Rational,
}

impl IndexedRatio {
    fn of(seq: &CoeffSeq, num_index: usize, den_index: usize) -> Self {
        Self { num_index, den_index, num: seq[num_index].clone(), den: seq[den_index].clone() }
    }
}

/// Exact data demonstrating a violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `a_index < 0`.
    NegativeEntry { index: usize, value: Rational },
    /// `a_index > a_{index+1}`.
    Decrease { index: usize, left: Rational, right: Rational },
    /// `a_descent > a_{descent+1}` and later `a_ascent < a_{ascent+1}`.
    Valley { descent: usize, ascent: usize, values: [Rational; 4] },
    /// A chain link `a_left <= a_right` that does not hold.
    ChainLink { left: usize, right: usize, left_value: Rational, right_value: Rational },
    /// `a_k^2 - a_{k+1} a_{k-1} < 0`.
    NegativeDiscriminant { k: usize, values: [Rational; 3], discriminant: Rational },
    /// A link `left <= right` of a ratio chain that does not hold. `right`
    /// is `None` for the closing bound `left <= 1`.
    RatioLink { chain: RatioChain, left: IndexedRatio, right: Option<IndexedRatio> },
    /// A zero with nonzero entries on both sides.
    InternalZero { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub detail: String,
}

impl PropertyVerdict {
    fn holds(property: Property) -> Self {
        Self { property, status: Status::Holds, witness: None, detail: "holds".to_string() }
    }

    fn fails(property: Property, witness: Witness, detail: String) -> Self {
        Self { property, status: Status::Fails, witness: Some(witness), detail }
    }

    fn not_applicable(property: Property, detail: String) -> Self {
        Self { property, status: Status::NotApplicable, witness: None, detail }
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.status == Status::Fails
    }
}

fn positivity_gate(property: Property, seq: &CoeffSeq) -> Option<PropertyVerdict> {
    seq.first_nonpositive().map(|i| {
        PropertyVerdict::not_applicable(property, format!("nonpositive entry at index {i}: a_{i} = {}", seq[i]))
    })
}

pub fn check_nonneg_nondecreasing(seq: &CoeffSeq) -> PropertyVerdict {
    let prop = Property::NonnegNondecreasing;
    let a = seq.as_slice();
    for k in 0..a.len() {
        if a[k].is_negative() {
            return PropertyVerdict::fails(
                prop,
                Witness::NegativeEntry { index: k, value: a[k].clone() },
                format!("a_{k} = {} < 0", a[k]),
            );
        }
        if k + 1 < a.len() && a[k] > a[k + 1] {
            return PropertyVerdict::fails(
                prop,
                Witness::Decrease { index: k, left: a[k].clone(), right: a[k + 1].clone() },
                format!("a_{k} = {} > a_{} = {}", a[k], k + 1, a[k + 1]),
            );
        }
    }
    PropertyVerdict::holds(prop)
}

pub fn check_unimodal(seq: &CoeffSeq) -> PropertyVerdict {
    let prop = Property::Unimodal;
    let a = seq.as_slice();
    let Some(descent) = (0..a.len().saturating_sub(1)).find(|&i| a[i] > a[i + 1]) else {
        return PropertyVerdict::holds(prop);
    };
    let Some(ascent) = (descent + 1..a.len() - 1).find(|&j| a[j] < a[j + 1]) else {
        return PropertyVerdict::holds(prop);
    };
    let values = [a[descent].clone(), a[descent + 1].clone(), a[ascent].clone(), a[ascent + 1].clone()];
    let detail = format!(
        "descent a_{descent} = {} > a_{} = {} followed by ascent a_{ascent} = {} < a_{} = {}",
        values[0],
        descent + 1,
        values[1],
        values[2],
        ascent + 1,
        values[3]
    );
    PropertyVerdict::fails(prop, Witness::Valley { descent, ascent, values }, detail)
}

/// Indices of the spiral chain `m, 0, m-1, 1, ...`, ending at `floor(m/2)`.
pub fn spiral_order(m: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(m + 1);
    let (mut lo, mut hi) = (0usize, m);
    loop {
        order.push(hi);
        if hi == lo {
            break;
        }
        order.push(lo);
        hi -= 1;
        if hi == lo {
            break;
        }
        lo += 1;
    }
    order
}

pub fn check_spiral(seq: &CoeffSeq) -> PropertyVerdict {
    let prop = Property::Spiral;
    if let Some(v) = positivity_gate(prop, seq) {
        return v;
    }
    let order = spiral_order(seq.degree());
    for pair in order.windows(2) {
        let (left, right) = (pair[0], pair[1]);
        if seq[left] > seq[right] {
            return PropertyVerdict::fails(
                prop,
                Witness::ChainLink {
                    left,
                    right,
                    left_value: seq[left].clone(),
                    right_value: seq[right].clone(),
                },
                format!("link a_{left} <= a_{right} fails: {} > {}", seq[left], seq[right]),
            );
        }
    }
    PropertyVerdict::holds(prop)
}

pub fn check_log_concave(seq: &CoeffSeq) -> PropertyVerdict {
    let prop = Property::LogConcave;
    if let Some(v) = positivity_gate(prop, seq) {
        return v;
    }
    for k in 1..seq.degree() {
        let discriminant = &seq[k] * &seq[k] - &seq[k + 1] * &seq[k - 1];
        if discriminant.is_negative() {
            let detail = format!("a_{k}^2 - a_{}*a_{} = {discriminant} < 0", k + 1, k - 1);
            return PropertyVerdict::fails(
                prop,
                Witness::NegativeDiscriminant {
                    k,
                    values: [seq[k - 1].clone(), seq[k].clone(), seq[k + 1].clone()],
                    discriminant,
                },
                detail,
            );
        }
    }
    PropertyVerdict::holds(prop)
}

/// `(numerator index, denominator index)` pairs in chain order.
pub type IndexChain = Vec<(usize, usize)>;

/// Both ratio chains for degree `m`.
pub fn ratio_chains(m: usize) -> (IndexChain, IndexChain) {
    // floor((m-1)/2) is -1 for m = 0, i.e. an empty chain.
    let chain_a = if m == 0 { Vec::new() } else { (0..=(m - 1) / 2).map(|i| (m - i, i)).collect() };
    let chain_b = (1..=m / 2).map(|i| (i - 1, m - i)).collect();
    (chain_a, chain_b)
}

pub fn check_ratio_monotone(seq: &CoeffSeq) -> PropertyVerdict {
    let prop = Property::RatioMonotone;
    if let Some(v) = positivity_gate(prop, seq) {
        return v;
    }
    let (chain_a, chain_b) = ratio_chains(seq.degree());
    for (chain, pairs) in [(RatioChain::A, chain_a), (RatioChain::B, chain_b)] {
        if let Some(w) = first_broken_ratio_link(seq, chain, &pairs) {
            let detail = match &w {
                Witness::RatioLink { left, right: Some(right), .. } => format!(
                    "chain {chain:?}: a_{}/a_{} = {}/{} > a_{}/a_{} = {}/{}",
                    left.num_index, left.den_index, left.num, left.den, right.num_index, right.den_index, right.num,
                    right.den
                ),
                Witness::RatioLink { left, right: None, .. } => format!(
                    "chain {chain:?}: final ratio a_{}/a_{} = {}/{} > 1",
                    left.num_index, left.den_index, left.num, left.den
                ),
                _ => unreachable!(),
            };
            return PropertyVerdict::fails(prop, w, detail);
        }
    }
    PropertyVerdict::holds(prop)
}

fn first_broken_ratio_link(seq: &CoeffSeq, chain: RatioChain, pairs: &[(usize, usize)]) -> Option<Witness> {
    for link in pairs.windows(2) {
        let ((pn, pd), (qn, qd)) = (link[0], link[1]);
        if cross_cmp(&seq[pn], &seq[pd], &seq[qn], &seq[qd]) == Ordering::Greater {
            return Some(Witness::RatioLink {
                chain,
                left: IndexedRatio::of(seq, pn, pd),
                right: Some(IndexedRatio::of(seq, qn, qd)),
            });
        }
    }
    let &(n, d) = pairs.last()?;
    (seq[n] > seq[d]).then(|| Witness::RatioLink { chain, left: IndexedRatio::of(seq, n, d), right: None })
}

pub fn check_no_internal_zeros(seq: &CoeffSeq) -> PropertyVerdict {
    let prop = Property::NoInternalZeros;
    let a = seq.as_slice();
    let first = a.iter().position(|x| !x.is_zero());
    let last = a.iter().rposition(|x| !x.is_zero());
    if let (Some(first), Some(last)) = (first, last) {
        if let Some(index) = (first + 1..last).find(|&i| a[i].is_zero()) {
            return PropertyVerdict::fails(
                prop,
                Witness::InternalZero { index },
                format!("a_{index} = 0 between nonzero a_{first} and a_{last}"),
            );
        }
    }
    PropertyVerdict::holds(prop)
}

/// One row of [`audit_implications`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationCheck {
    pub implication: String,
    pub antecedent: Status,
    pub consequent: Status,
    pub consistent: bool,
}

/// Evaluates the known implications between the checkers on `seq`.
///
/// An inconsistency (antecedent holds, consequent fails) can only come from
/// a checker bug.
pub fn audit_implications(seq: &CoeffSeq) -> Vec<ImplicationCheck> {
    let rm = check_ratio_monotone(seq).status;
    let lc = check_log_concave(seq).status;
    let sp = check_spiral(seq).status;
    let um = check_unimodal(seq).status;
    [
        ("ratio-monotone => log-concave", rm, lc),
        ("ratio-monotone => spiral", rm, sp),
        ("log-concave => unimodal", lc, um),
        ("spiral => unimodal", sp, um),
    ]
    .into_iter()
    .map(|(name, antecedent, consequent)| ImplicationCheck {
        implication: name.to_string(),
        antecedent,
        consequent,
        consistent: !(antecedent == Status::Holds && consequent == Status::Fails),
    })
    .collect()
}
