//! Executable forms of the lemmas and proof steps behind the ratio
//! monotonicity of `P(x + 1)` for nonnegative nondecreasing `P`.
//!
//! Every predicate separates "the hypothesis does not hold" (an error) from
//! "the conclusion is false" (a `false` or negative value in the result), so
//! a randomized campaign can tell a skipped input from a counterexample.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{cross_cmp, Rational};
use crate::poly::{boundary_coeffs, mul_by_x_plus_one, taylor_shift, Polynomial, ShiftAlgorithm};
use crate::seq::CoeffSeq;
use crate::shape::{check_nonneg_nondecreasing, check_ratio_monotone, Status};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
}

fn domain(msg: impl Into<String>) -> TheoremError {
    TheoremError::Domain(msg.into())
}

fn int(n: usize) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Given positive `a..f` with `a/b <= c/d <= e/f`, returns whether
/// `(a+c)/(b+d) <= (e+c)/(f+d)`.
pub fn lemma1_holds(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
    f: &Rational,
) -> Result<bool, TheoremError> {
    for (name, v) in [("a", a), ("b", b), ("c", c), ("d", d), ("e", e), ("f", f)] {
        if !v.is_positive() {
            return Err(domain(format!("{name} = {v} is not positive")));
        }
    }
    if cross_cmp(a, b, c, d).is_gt() || cross_cmp(c, d, e, f).is_gt() {
        return Err(TheoremError::Hypothesis(format!("{a}/{b} <= {c}/{d} <= {e}/{f} is false")));
    }
    Ok(!cross_cmp(&(a + c), &(b + d), &(e + c), &(f + d)).is_gt())
}

/// Both sides of the top-coefficient inequality and their difference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma3Report {
    pub m: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub gap: Rational,
}

/// For a positive nondecreasing sequence with `m >= 2`:
///
/// ```text
/// lhs = m(m+1)/2 * a_m^2 + a_m a_{m-1}
/// rhs = (sum_{k<=m-2} (m-1-k) a_k) a_{m-1} + (sum_k a_k) a_{m-2}
/// ```
///
/// The gap `lhs - rhs` is nonnegative whenever the preconditions hold.
pub fn lemma3_gap(seq: &CoeffSeq) -> Result<Lemma3Report, TheoremError> {
    let m = seq.degree();
    if m < 2 {
        return Err(domain(format!("degree {m} < 2: a_(m-2) is undefined")));
    }
    if let Some(i) = seq.first_nonpositive() {
        return Err(domain(format!("entry a_{i} = {} is not positive", seq[i])));
    }
    let mono = check_nonneg_nondecreasing(seq);
    if mono.status != Status::Holds {
        return Err(domain(format!("sequence is not nondecreasing: {}", mono.detail)));
    }
    let a = seq.as_slice();
    let lhs = Rational::ratio((m * (m + 1) / 2) as i64, 1) * &a[m] * &a[m] + &a[m] * &a[m - 1];
    let weighted: Rational = (0..=m - 2).map(|k| int(m - 1 - k) * &a[k]).sum();
    let total: Rational = a.iter().sum();
    let rhs = weighted * &a[m - 1] + total * &a[m - 2];
    let gap = &lhs - &rhs;
    Ok(Lemma3Report { m, lhs, rhs, gap })
}

/// `sum_{k=0}^{m-1} (2k - m + 1)/2 * a_k`.
pub fn s1_sum(seq: &CoeffSeq) -> Result<Rational, TheoremError> {
    let m = seq.degree();
    if m < 1 {
        return Err(domain("s1 needs degree at least 1"));
    }
    Ok((0..m)
        .map(|k| Rational::ratio(2 * k as i64 - m as i64 + 1, 2) * &seq[k])
        .sum())
}

/// `sum_{k=0}^{floor((m-1)/2)} (m - 1 - 2k)/2 * (a_{m-1-k} - a_k)`, the
/// paired form of [`s1_sum`]. The two agree on every input.
pub fn s1_rearranged(seq: &CoeffSeq) -> Result<Rational, TheoremError> {
    let m = seq.degree();
    if m < 1 {
        return Err(domain("s1 needs degree at least 1"));
    }
    Ok((0..=(m - 1) / 2)
        .map(|k| Rational::ratio((m - 1 - 2 * k) as i64, 2) * (&seq[m - 1 - k] - &seq[k]))
        .sum())
}

/// The one new link of the induction step: `b_0/b_{m-1} <= b_1/b_{m-2}`
/// for the coefficients `b` of `P(x + 1)`, via their closed forms.
pub fn edge_inequality_holds(seq: &CoeffSeq) -> Result<bool, TheoremError> {
    let m = seq.degree();
    if m < 2 {
        return Err(domain(format!("degree {m} < 2")));
    }
    let mono = check_nonneg_nondecreasing(seq);
    if mono.status != Status::Holds {
        return Err(domain(format!("sequence is not nonnegative nondecreasing: {}", mono.detail)));
    }
    if !seq.last().is_positive() {
        return Err(domain("leading coefficient a_m must be positive"));
    }
    let b = boundary_coeffs(&Polynomial::new(seq.clone())).expect("degree checked above");
    Ok(&b.b0 * &b.b_m_minus_2 <= &b.b1 * &b.b_m_minus_1)
}

/// Splits `P` into `a_0` and `Q(x) = sum_{k<m} a_{k+1} x^k`, so that
/// `P(x) = a_0 + x Q(x)` and `P(x + 1) = a_0 + (x + 1) Q(x + 1)`.
pub fn induction_decompose(p: &Polynomial) -> Result<(Rational, Polynomial), TheoremError> {
    if p.degree() == 0 {
        return Err(domain("degree 0 polynomial has no tail"));
    }
    let a = p.coeffs().as_slice();
    let q = CoeffSeq::new(a[1..].to_vec()).expect("degree >= 1 leaves a non-empty tail");
    Ok((a[0].clone(), Polynomial::new(q)))
}

/// Checks `P(x + 1) = a_0 + (x + 1) Q(x + 1)` coefficient by coefficient.
pub fn induction_replay(p: &Polynomial, algo: ShiftAlgorithm) -> Result<bool, TheoremError> {
    let (a0, q) = induction_decompose(p)?;
    let one = Rational::one();
    let lhs = taylor_shift(p, &one, algo);
    let rhs = mul_by_x_plus_one(&taylor_shift(&q, &one, algo));
    let rhs = rhs.coeffs().as_slice();
    Ok(lhs.coeffs().iter().enumerate().all(|(k, b)| {
        if k == 0 {
            *b == &a0 + &rhs[0]
        } else {
            *b == rhs[k]
        }
    }))
}

/// For ratio-monotone `B`, returns whether `(x + 1) B(x)` is ratio monotone.
pub fn lemma2_preserved(b: &Polynomial) -> Result<bool, TheoremError> {
    let pre = check_ratio_monotone(b.coeffs());
    if pre.status != Status::Holds {
        return Err(TheoremError::Hypothesis(format!("input is not ratio monotone: {}", pre.detail)));
    }
    Ok(check_ratio_monotone(mul_by_x_plus_one(b).coeffs()).is_holds())
}
