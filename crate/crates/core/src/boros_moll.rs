//! The Boros–Moll polynomials
//! `P_m(x) = sum_k c_k(m) (x + 1)^k` with
//! `c_k(m) = 2^(k - 2m) C(2m - 2k, m - k) C(m + k, k)`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{binomial, Rational};
use crate::poly::{taylor_shift, Polynomial, ShiftAlgorithm};
use crate::seq::CoeffSeq;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BorosMollError {
    #[error("index k = {k} out of range for m = {m} (need {bound})")]
    IndexOutOfRange { m: u32, k: u32, bound: &'static str },
}

/// `c_0(m), ..., c_m(m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorosMollRow {
    pub m: u32,
    pub coefficients: CoeffSeq,
}

pub fn bm_coefficient(m: u32, k: u32) -> Result<Rational, BorosMollError> {
    if k > m {
        return Err(BorosMollError::IndexOutOfRange { m, k, bound: "0 <= k <= m" });
    }
    Ok(coefficient(u64::from(m), u64::from(k)))
}

fn coefficient(m: u64, k: u64) -> Rational {
    let ints = binomial(2 * m - 2 * k, m - k) * binomial(m + k, k);
    Rational::pow2(k as i64 - 2 * m as i64) * Rational::from(ints)
}

/// `c_k(m) / c_{k+1}(m)` computed two ways.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioIdentity {
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
    pub below_one: bool,
}

/// Compares `c_k(m)/c_{k+1}(m)` against
/// `(2m - 2k - 1)(k + 1) / ((m - k)(m + k + 1))`.
pub fn bm_ratio_identity(m: u32, k: u32) -> Result<RatioIdentity, BorosMollError> {
    if k >= m {
        return Err(BorosMollError::IndexOutOfRange { m, k, bound: "0 <= k <= m-1" });
    }
    let (m, k) = (u64::from(m), u64::from(k));
    let lhs = coefficient(m, k) / coefficient(m, k + 1);
    let big = |n: u64| BigInt::from(n);
    let rhs = Rational::new(big(2 * m - 2 * k - 1) * big(k + 1), big(m - k) * big(m + k + 1))
        .expect("m - k >= 1");
    let equal = lhs == rhs;
    let below_one = lhs < Rational::one();
    Ok(RatioIdentity { lhs, rhs, equal, below_one })
}

/// Coefficients of `P_m(x - 1)` in the power basis, i.e. `c_k(m)`.
pub fn bm_shifted_seq(m: u32) -> CoeffSeq {
    let m = u64::from(m);
    CoeffSeq::new((0..=m).map(|k| coefficient(m, k)).collect()).expect("m + 1 entries")
}

pub fn bm_row(m: u32) -> BorosMollRow {
    BorosMollRow { m, coefficients: bm_shifted_seq(m) }
}

/// `P_m(x)` in the power basis: the `c_k(m)` row shifted by one.
pub fn bm_polynomial(m: u32) -> Polynomial {
    taylor_shift(&Polynomial::new(bm_shifted_seq(m)), &Rational::one(), ShiftAlgorithm::HornerSynthetic)
}
