//! Floating-point corroboration of exact results: adaptive Simpson
//! quadrature, fixed-order Gauss–Legendre panels, and float-coefficient
//! polynomial evaluation.
//!
//! Nothing in this module ever produces a value the exact layer depends on;
//! the flow is one-way. The cross-validation entry point recomputes the
//! moment integrals by float quadrature and scores them against the exact
//! rationals, so a disagreement flags a bug in one backend or the other.

use crate::error::{Error, Result};
use crate::exactalg::{rational_to_f64, Rational, RationalPoly};
use crate::geometry::MomentumData;

/// Order-8 Gauss–Legendre abscissae (positive half) and weights on [-1, 1];
/// exact for polynomial integrands of degree 15 or lower.
const GL8_NODES: [f64; 4] = [
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL8_WEIGHTS: [f64; 4] = [
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_3,
];

/// One Gauss–Legendre panel of order 8 over `[lo, hi]`.
pub fn gauss_legendre_8(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut acc = 0.0;
    for (x, w) in GL8_NODES.iter().zip(GL8_WEIGHTS) {
        acc += w * (f(center + half * x) + f(center - half * x));
    }
    half * acc
}

/// Adaptive Simpson quadrature with Richardson extrapolation: panels are
/// split until the local error estimate `|S_fine - S_coarse| / 15` drops
/// below the (absolute) tolerance share of the panel, with a depth cap so
/// roundoff-dominated integrands terminate.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> f64 {
    fn simpson(h: f64, fa: f64, fm: f64, fb: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn refine(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(m - a, fa, flm, fm);
        let right = simpson(b - m, fm, frm, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }

    if lo == hi {
        return 0.0;
    }
    let m = 0.5 * (lo + hi);
    let (fa, fm, fb) = (f(lo), f(m), f(hi));
    let whole = simpson(hi - lo, fa, fm, fb);
    refine(f, lo, hi, fa, fm, fb, whole, tol, 48)
}

/// A polynomial with `f64` coefficients: the float image of a
/// [`RationalPoly`], converted once so hot loops avoid repeated
/// big-rational-to-double division.
#[derive(Debug, Clone)]
pub struct FloatPoly {
    coeffs: Vec<f64>,
}

impl FloatPoly {
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

impl TryFrom<&RationalPoly> for FloatPoly {
    type Error = Error;

    fn try_from(p: &RationalPoly) -> Result<FloatPoly> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(rational_to_f64)
            .collect::<Result<Vec<f64>>>()?;
        Ok(FloatPoly { coeffs })
    }
}

/// The five moment integrals recomputed in floating point.
#[derive(Debug, Clone, Copy)]
pub struct NumericMoments {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub int_rq: f64,
    pub int_tau_rq: f64,
}

/// Float-mode moment computation: accepts a double half-width directly and
/// integrates the float images of `Q` and `RQ` by adaptive quadrature.
pub fn float_moments(q: &FloatPoly, rq: &FloatPoly, half_width: f64, tol: f64) -> NumericMoments {
    let (lo, hi) = (-half_width, half_width);
    NumericMoments {
        a: adaptive_simpson(&|x| q.eval(x), lo, hi, tol),
        b: adaptive_simpson(&|x| x * q.eval(x), lo, hi, tol),
        c: adaptive_simpson(&|x| x * x * q.eval(x), lo, hi, tol),
        int_rq: adaptive_simpson(&|x| rq.eval(x), lo, hi, tol),
        int_tau_rq: adaptive_simpson(&|x| x * rq.eval(x), lo, hi, tol),
    }
}

/// Recomputes the moments of exact momentum data in floating point.
pub fn numeric_moments(data: &MomentumData, tol: f64) -> Result<NumericMoments> {
    let q = FloatPoly::try_from(data.q())?;
    let rq = FloatPoly::try_from(data.rq())?;
    let b = rational_to_f64(data.half_width())?;
    Ok(float_moments(&q, &rq, b, tol))
}

/// Error of a float value against an exact rational, scaled by
/// `max(1, |exact|)`: relative error for large values, absolute near zero
/// (where relative error is undefined for exact zeros).
pub fn scaled_error(exact: &Rational, numeric: f64) -> Result<f64> {
    let e = rational_to_f64(exact)?;
    Ok((numeric - e).abs() / e.abs().max(1.0))
}

/// Outcome of the exact-vs-float moment comparison: the worst scaled error
/// across the five integrals and whether it clears the target.
#[derive(Debug, Clone, Copy)]
pub struct MomentAgreement {
    pub max_scaled_error: f64,
    pub ok: bool,
}

/// Cross-validates the five exact moment integrals against adaptive float
/// quadrature at the given agreement target (e.g. `1e-10`).
pub fn cross_validate_moments(data: &MomentumData, target: f64) -> Result<MomentAgreement> {
    let num = numeric_moments(data, 1e-14)?;
    let pairs = [
        (data.moment_a().clone(), num.a),
        (data.moment_b().clone(), num.b),
        (data.moment_c().clone(), num.c),
        (data.int_rq(), num.int_rq),
        (data.int_tau_rq(), num.int_tau_rq),
    ];
    let mut max_scaled_error: f64 = 0.0;
    for (exact, numeric) in &pairs {
        max_scaled_error = max_scaled_error.max(scaled_error(exact, *numeric)?);
    }
    Ok(MomentAgreement {
        max_scaled_error,
        ok: max_scaled_error <= target,
    })
}
