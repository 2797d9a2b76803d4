//! Power-basis polynomials over [`Rational`] and the Taylor shift
//! `P(x) -> P(x + c)`.
//!
//! The degree of a [`Polynomial`] is its representation length minus one,
//! whatever the leading coefficient is. Index formulas such as `b_{m-1}`
//! are positional, so no transform trims trailing zeros; call
//! [`normalize`] explicitly when that is wanted.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{binomial, common_denominator, Rational};
use crate::seq::CoeffSeq;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("boundary coefficients need degree at least 2, got {0}")]
    DegreeTooSmall(usize),
}

/// How [`taylor_shift`] computes its result. Both produce identical output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShiftAlgorithm {
    /// Expand each `a_k (x + c)^k` with binomial coefficients.
    NaiveBinomial,
    /// Repeated synthetic division on an integer image of the input.
    #[default]
    HornerSynthetic,
}

impl ShiftAlgorithm {
    pub fn name(self) -> &'static str {
        match self {
            Self::NaiveBinomial => "naive",
            Self::HornerSynthetic => "horner",
        }
    }
}

impl FromStr for ShiftAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" | "naive-binomial" => Ok(Self::NaiveBinomial),
            "horner" | "horner-synthetic" => Ok(Self::HornerSynthetic),
            other => Err(format!("unknown shift algorithm `{other}` (expected naive or horner)")),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: CoeffSeq,
}

impl Polynomial {
    pub fn new(coeffs: CoeffSeq) -> Self {
        Self { coeffs }
    }

    /// Panics on an empty slice.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(CoeffSeq::from_ints(coeffs))
    }

    pub fn zero() -> Self {
        Self::new(CoeffSeq::from_ints(&[0]))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.degree()
    }

    pub fn coeffs(&self) -> &CoeffSeq {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> CoeffSeq {
        self.coeffs
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x + a)
    }
}

impl From<CoeffSeq> for Polynomial {
    fn from(coeffs: CoeffSeq) -> Self {
        Self::new(coeffs)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.coeffs, f)
    }
}

/// Returns `B` with `B(x) = P(x + c)` and the same degree as `P`.
pub fn taylor_shift(p: &Polynomial, c: &Rational, algo: ShiftAlgorithm) -> Polynomial {
    if c.is_zero() {
        return p.clone();
    }
    let coeffs = match algo {
        ShiftAlgorithm::NaiveBinomial => shift_naive(p.coeffs.as_slice(), c),
        ShiftAlgorithm::HornerSynthetic => shift_horner(p.coeffs.as_slice(), c),
    };
    Polynomial::new(CoeffSeq::new(coeffs).expect("shift preserves length"))
}

/// `b_j = sum_{k >= j} C(k, j) c^{k-j} a_k`.
fn shift_naive(a: &[Rational], c: &Rational) -> Vec<Rational> {
    let m = a.len() - 1;
    let mut powers = Vec::with_capacity(m + 1);
    powers.push(Rational::one());
    for i in 1..=m {
        powers.push(&powers[i - 1] * c);
    }
    (0..=m)
        .map(|j| {
            (j..=m)
                .filter(|&k| !a[k].is_zero())
                .map(|k| {
                    let weight = Rational::from(binomial(k as u64, j as u64));
                    &a[k] * &powers[k - j] * weight
                })
                .sum()
        })
        .collect()
}

/// Shift by `c = p/q` on integers only.
///
/// With `D` the common denominator of the input, set
/// `A_k = D * a_k * q^(m-k)`. Then `q^m P(x + p/q) = T(q x)` where
/// `T(y) = sum A_k (y + p)^k`, so after shifting `A` by the integer `p`
/// with synthetic division the result is `b_j = t_j / (D * q^(m-j))`.
fn shift_horner(a: &[Rational], c: &Rational) -> Vec<Rational> {
    let m = a.len() - 1;
    let p = c.numer();
    let q = c.denom();
    let d = common_denominator(a);

    // q_pows[i] = q^i
    let mut q_pows = Vec::with_capacity(m + 1);
    q_pows.push(BigInt::one());
    for i in 1..=m {
        q_pows.push(&q_pows[i - 1] * q);
    }

    let mut t: Vec<BigInt> = a
        .iter()
        .enumerate()
        .map(|(k, ak)| ak.numer() * (&d / ak.denom()) * &q_pows[m - k])
        .collect();

    for i in 0..m {
        for k in (i..m).rev() {
            let carry = p * &t[k + 1];
            t[k] += carry;
        }
    }

    t.into_iter()
        .enumerate()
        .map(|(j, tj)| Rational::new(tj, &d * &q_pows[m - j]).expect("positive denominator"))
        .collect()
}

/// `(x + 1) B(x)`: `b_k = a_{k-1} + a_k` with `a_{-1} = a_{m+1} = 0`.
pub fn mul_by_x_plus_one(b: &Polynomial) -> Polynomial {
    let a = b.coeffs.as_slice();
    let m = a.len() - 1;
    let out = (0..=m + 1)
        .map(|k| match k {
            0 => a[0].clone(),
            k if k == m + 1 => a[m].clone(),
            k => &a[k - 1] + &a[k],
        })
        .collect();
    Polynomial::new(CoeffSeq::new(out).expect("non-empty"))
}

/// Closed forms for the outer coefficients of `P(x + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryCoeffs {
    pub b0: Rational,
    pub b1: Rational,
    pub b_m_minus_2: Rational,
    pub b_m_minus_1: Rational,
    pub b_m: Rational,
}

/// `b_0 = sum a_k`, `b_1 = sum k a_k`,
/// `b_{m-2} = a_{m-2} + (m-1) a_{m-1} + C(m,2) a_m`,
/// `b_{m-1} = a_{m-1} + m a_m`, `b_m = a_m`.
///
/// These are computed directly from the formulas, not from a shift, so they
/// can be checked against [`taylor_shift`].
pub fn boundary_coeffs(p: &Polynomial) -> Result<BoundaryCoeffs, PolyError> {
    let m = p.degree();
    if m < 2 {
        return Err(PolyError::DegreeTooSmall(m));
    }
    let a = p.coeffs.as_slice();
    let int = |n: u64| Rational::from(BigInt::from(n));
    let b0 = a.iter().sum();
    let b1 = a.iter().enumerate().map(|(k, ak)| ak * int(k as u64)).sum();
    let b_m_minus_2 = &a[m - 2] + &a[m - 1] * int(m as u64 - 1) + &a[m] * Rational::from(binomial(m as u64, 2));
    let b_m_minus_1 = &a[m - 1] + &a[m] * int(m as u64);
    Ok(BoundaryCoeffs { b0, b1, b_m_minus_2, b_m_minus_1, b_m: a[m].clone() })
}

/// Drops trailing zero coefficients; the zero polynomial becomes `(0)`.
pub fn normalize(p: &Polynomial) -> Polynomial {
    let a = p.coeffs.as_slice();
    let keep = a.iter().rposition(|x| !x.is_zero()).map_or(1, |i| i + 1);
    Polynomial::new(CoeffSeq::new(a[..keep].to_vec()).expect("keeps at least one entry"))
}
