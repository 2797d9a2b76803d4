//! Input fixtures shared by the benchmarks.

use ratiomono::fuzz::{gen_nondecreasing_seq, gen_positive_seq};
use ratiomono::{CoeffSeq, Polynomial, Rational};

/// A nondecreasing rational polynomial of the given degree.
pub fn nondecreasing_poly(degree: usize, seed: u64) -> Polynomial {
    Polynomial::new(gen_nondecreasing_seq(seed, 0, degree, 1_000_000))
}

/// A positive sequence with no ordering, drawn from `[1, bound]`.
pub fn positive_seq(degree: usize, bound: u64, seed: u64) -> CoeffSeq {
    gen_positive_seq(seed, 0, degree, bound)
}

/// Shift constants exercised by the benchmarks.
pub fn shift_constants() -> Vec<(&'static str, Rational)> {
    vec![("1", Rational::one()), ("3/2", Rational::ratio(3, 2)), ("-7/5", Rational::ratio(-7, 5))]
}
