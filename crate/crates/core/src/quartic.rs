//! Numerical check of the quartic integral
//!
//! ```text
//! int_0^inf dt / (t^4 + 2 x t^2 + 1)^(m+1) = pi / (2^(m+3/2) (x+1)^(m+1/2)) * P_m(x)
//! ```
//!
//! The tail `[1, inf)` is mapped onto `(0, 1]` with `t = 1/u`, giving the
//! bounded integrand `(1 + u^(4m+2)) / (u^4 + 2 x u^2 + 1)^(m+1)` on
//! `[0, 1]`, which is then integrated by globally adaptive 7/15-point
//! Gauss–Kronrod. This module is the only place floats appear, and `P_m(x)`
//! is evaluated exactly before conversion.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::boros_moll::bm_polynomial;
use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error(
        "quadrature did not converge after {intervals} intervals: estimate {estimate:e}, \
         error estimate {error_estimate:e}, requested relative tolerance {tol:e}"
    )]
    NotConverged { intervals: usize, estimate: f64, error_estimate: f64, tol: f64 },
}

/// Outcome of comparing quadrature against the closed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegralCheck {
    pub m: u32,
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
}

const MAX_INTERVALS: usize = 20_000;
const INITIAL_PIECES: usize = 8;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Kronrod estimate and `|Kronrod - Gauss|` on `[a, b]`.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut gauss = fc * WG[3];
    let mut kronrod = fc * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Globally adaptive integration of `f` over `[a, b]` to relative
/// tolerance `tol`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64, QuadratureError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(QuadratureError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let width = (b - a) / INITIAL_PIECES as f64;
    // (lo, hi, value, error)
    let mut pieces: Vec<(f64, f64, f64, f64)> = (0..INITIAL_PIECES)
        .map(|i| {
            let lo = a + width * i as f64;
            let hi = if i + 1 == INITIAL_PIECES { b } else { lo + width };
            let (v, e) = gk15(&f, lo, hi);
            (lo, hi, v, e)
        })
        .collect();

    loop {
        let estimate: f64 = pieces.iter().map(|p| p.2).sum();
        let error: f64 = pieces.iter().map(|p| p.3).sum();
        if !estimate.is_finite() {
            return Err(QuadratureError::Domain("integrand produced a non-finite value".into()));
        }
        if error <= tol * estimate.abs() {
            return Ok(estimate);
        }
        if pieces.len() >= MAX_INTERVALS {
            return Err(QuadratureError::NotConverged {
                intervals: pieces.len(),
                estimate,
                error_estimate: error,
                tol,
            });
        }
        let worst = pieces
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .expect("non-empty");
        let (lo, hi, _, _) = pieces.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        pieces.push((lo, mid, v1, e1));
        pieces.push((mid, hi, v2, e2));
    }
}

/// `1 / (t^4 + 2 x t^2 + 1)^(m+1)`.
pub fn integrand(t: f64, x: f64, m: u32) -> f64 {
    let t2 = t * t;
    1.0 / (t2 * t2 + 2.0 * x * t2 + 1.0).powi(m as i32 + 1)
}

/// The integrand after folding `[1, inf)` onto `(0, 1]`.
pub fn folded_integrand(u: f64, x: f64, m: u32) -> f64 {
    (1.0 + u.powi(4 * m as i32 + 2)) * integrand(u, x, m)
}

fn check_x(x: f64) -> Result<(), QuadratureError> {
    if x.is_finite() && x > -1.0 {
        Ok(())
    } else {
        Err(QuadratureError::Domain(format!("x must be a finite number greater than -1, got {x}")))
    }
}

/// The left-hand side by quadrature of the folded integrand.
pub fn quadrature_lhs(x: f64, m: u32, tol: f64) -> Result<f64, QuadratureError> {
    check_x(x)?;
    integrate(|u| folded_integrand(u, x, m), 0.0, 1.0, tol)
}

/// The left-hand side by the independent substitution `t = s / (1 - s)`
/// over the whole half-line, without folding.
pub fn quadrature_lhs_unfolded(x: f64, m: u32, tol: f64) -> Result<f64, QuadratureError> {
    check_x(x)?;
    let g = |s: f64| {
        let w = 1.0 - s;
        if w <= 0.0 {
            return 0.0;
        }
        let v = integrand(s / w, x, m) / (w * w);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    integrate(g, 0.0, 1.0, tol)
}

/// `pi / (2^(m+3/2) (x+1)^(m+1/2)) * P_m(x)`, with `P_m(x)` evaluated
/// exactly at the exact value of `x`.
pub fn closed_form_rhs(x: f64, m: u32) -> Result<f64, QuadratureError> {
    check_x(x)?;
    let exact_x = Rational::from_f64(x).expect("finite");
    let pm = bm_polynomial(m).eval(&exact_x).to_f64();
    let m = f64::from(m);
    Ok(PI / (2f64.powf(m + 1.5) * (x + 1.0).powf(m + 0.5)) * pm)
}

pub fn verify_identity(x: f64, m: u32, tol: f64) -> Result<IntegralCheck, QuadratureError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(QuadratureError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let rhs = closed_form_rhs(x, m)?;
    // Quadrature runs well inside the requested tolerance so the comparison
    // measures the identity, not the integrator.
    let lhs = quadrature_lhs(x, m, (tol * 1e-2).max(1e-14))?;
    let rel_err = (lhs - rhs).abs() / rhs.abs();
    Ok(IntegralCheck { m, x, lhs, rhs, rel_err, tol, pass: rel_err <= tol })
}
