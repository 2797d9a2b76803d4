//! Exact-arithmetic toolkit for ratio monotonicity of polynomials.
//!
//! * [`numeric`]: the [`Rational`] scalar, binomials, division-free ratio
//!   comparison and literal parsing.
//! * [`poly`]: power-basis polynomials, the Taylor shift `P(x) -> P(x + c)`
//!   by two independent algorithms, and multiplication by `x + 1`.
//! * [`shape`]: checkers for unimodal, spiral, log-concave and
//!   ratio-monotone sequences, each returning an exact witness on failure.
//! * [`theorem`]: the lemmas and proof steps as standalone predicates.
//! * [`boros_moll`]: the Boros–Moll coefficients and polynomials.
//! * [`quartic`]: floating-point check of the quartic integral identity.
//! * [`fuzz`]: seeded, reproducible randomized campaigns.

pub mod boros_moll;
pub mod fuzz;
pub mod numeric;
pub mod poly;
pub mod quartic;
pub mod seq;
pub mod shape;
pub mod theorem;

pub use num_bigint::BigInt;

pub use boros_moll::{bm_coefficient, bm_polynomial, bm_ratio_identity, bm_row, bm_shifted_seq, BorosMollRow};
pub use fuzz::{run_campaign, CampaignReport, CampaignSpec, CampaignTarget};
pub use numeric::{binomial, parse_rational, ratio_leq, Rational};
pub use poly::{taylor_shift, Polynomial, ShiftAlgorithm};
pub use quartic::{verify_identity, IntegralCheck};
pub use seq::{parse_coeff_text, CoeffSeq};
pub use shape::{Property, PropertyVerdict, Status, Witness};
