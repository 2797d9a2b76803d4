//! Exact rational scalars, binomial coefficients and division-free ratio
//! comparison.
//!
//! [`Rational`] is a thin newtype over [`num_rational::BigRational`] that
//! fixes the canonical text form (`p/q`, or `p` when `q = 1`) and serializes
//! as that string, so no consumer ever sees a lossy JSON number.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("denominator must be positive, got {0}")]
    NonPositiveDenominator(Rational),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Failure to read a rational literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("malformed rational at position {position}: {message}")]
    Malformed { position: usize, message: String },
    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },
}

impl ParseRationalError {
    /// Byte offset of the offending character within the parsed text.
    pub fn position(&self) -> usize {
        match self {
            Self::Malformed { position, .. } | Self::ZeroDenominator { position } => *position,
        }
    }
}

/// Exact signed rational in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`, reducing to canonical form.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, NumericError> {
        if denom.is_zero() {
            return Err(NumericError::ZeroDenominator);
        }
        Ok(Self(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    /// `numer/denom` for machine integers. Panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self(BigRational::new(numer.into(), denom.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Self(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self(Pow::pow(&self.0, exp))
    }

    /// `2^exp` for any signed exponent.
    pub fn pow2(exp: i64) -> Self {
        let magnitude = BigInt::one() << exp.unsigned_abs();
        if exp >= 0 {
            Self::from_integer(magnitude)
        } else {
            Self(BigRational::new(BigInt::one(), magnitude))
        }
    }

    /// Nearest `f64`; very large or very small values saturate to
    /// infinity or zero.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The exact value of a finite float. Returns `None` for NaN and
    /// infinities.
    pub fn from_f64(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(Self)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big_rational(self) -> BigRational {
        self.0
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Self::from_integer(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// `C(n, k)`, zero when `k > n`.
///
/// Multiplicative formula; every partial product `C(n-k+i, i)` is an
/// integer, so each division is exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Decides `p_num/p_den <= q_num/q_den` by cross-multiplication.
///
/// Both denominators must be positive. Each rational is expanded into its
/// integer parts, so the comparison is a single product of big integers on
/// each side with no reduction step.
pub fn ratio_leq(
    p_num: &Rational,
    p_den: &Rational,
    q_num: &Rational,
    q_den: &Rational,
) -> Result<bool, NumericError> {
    for den in [p_den, q_den] {
        if !den.is_positive() {
            return Err(NumericError::NonPositiveDenominator(den.clone()));
        }
    }
    Ok(cross_cmp(p_num, p_den, q_num, q_den) != Ordering::Greater)
}

/// Ordering of `p_num/p_den` against `q_num/q_den`, assuming positive
/// denominators.
pub(crate) fn cross_cmp(p_num: &Rational, p_den: &Rational, q_num: &Rational, q_den: &Rational) -> Ordering {
    // p_num * q_den vs q_num * p_den, each rational written as n/d with d > 0.
    let lhs = p_num.numer() * q_den.numer() * (q_num.denom() * p_den.denom());
    let rhs = q_num.numer() * p_den.numer() * (p_num.denom() * q_den.denom());
    lhs.cmp(&rhs)
}

/// Parses an integer (`-12`), fraction (`3/4`, `-4/6`) or exact decimal
/// (`0.25`, `-1.5`) literal. Surrounding whitespace is ignored.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    let mut end = bytes.len();
    while end > pos && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    if pos == end {
        return Err(malformed(pos, "empty literal"));
    }

    let negative = match bytes[pos] {
        b'-' => {
            pos += 1;
            true
        }
        b'+' => {
            pos += 1;
            false
        }
        _ => false,
    };

    let int_start = pos;
    let int_digits = scan_digits(bytes, pos, end);
    if int_digits == 0 {
        return Err(malformed(pos, "expected a digit"));
    }
    pos += int_digits;
    let mut numer = digits_to_bigint(&text[int_start..pos]);
    let mut denom = BigInt::one();

    if pos < end {
        match bytes[pos] {
            b'/' => {
                pos += 1;
                let den_start = pos;
                let den_digits = scan_digits(bytes, pos, end);
                if den_digits == 0 {
                    return Err(malformed(pos, "expected denominator digits after '/'"));
                }
                pos += den_digits;
                denom = digits_to_bigint(&text[den_start..pos]);
                if denom.is_zero() {
                    return Err(ParseRationalError::ZeroDenominator { position: den_start });
                }
            }
            b'.' => {
                pos += 1;
                let frac_start = pos;
                let frac_digits = scan_digits(bytes, pos, end);
                if frac_digits == 0 {
                    return Err(malformed(pos, "expected digits after '.'"));
                }
                pos += frac_digits;
                let scale = BigInt::from(10u32).pow(frac_digits as u32);
                numer = numer * &scale + digits_to_bigint(&text[frac_start..pos]);
                denom = scale;
            }
            _ => {}
        }
    }

    if pos != end {
        return Err(malformed(pos, "unexpected character"));
    }
    if negative {
        numer = -numer;
    }
    Ok(Rational(BigRational::new(numer, denom)))
}

fn scan_digits(bytes: &[u8], start: usize, end: usize) -> usize {
    bytes[start..end].iter().take_while(|b| b.is_ascii_digit()).count()
}

fn digits_to_bigint(digits: &str) -> BigInt {
    BigInt::parse_bytes(digits.as_bytes(), 10).expect("caller passes ASCII digits only")
}

fn malformed(position: usize, message: &str) -> ParseRationalError {
    ParseRationalError::Malformed { position, message: message.to_string() }
}

/// Least common multiple of the denominators of `values` (1 for an empty
/// slice).
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
