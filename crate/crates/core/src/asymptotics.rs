//! Numerical confirmation of the cone-angle interpretation.
//!
//! Near the upper interval end the fibre arc-length coordinate `t`,
//! defined by `dt = dtau / phi(tau)` from `tau = 0`, blows up
//! logarithmically:
//!
//! ```text
//!     t(tau) = -(1 / (2 beta)) * ln(b - tau) + bounded terms,
//! ```
//!
//! because a profile with angle `2*pi*beta` behaves like
//! `phi ~ 2 beta (b - tau)` at the end. Fitting the slope of `t` against
//! `-ln(b - tau)` therefore recovers `1/(2 beta)` by an entirely
//! floating-point route — quadrature of the profile reciprocal — with no
//! exact algebra involved, which makes it an independent check on the
//! exact angle.
//!
//! The integration runs over gap values `b - tau` graded geometrically from
//! `b` down to `cutoff` (one Gauss–Legendre panel of order 8 per step, so
//! panel lengths shrink in proportion to the distance from the singular
//! end), and the fit uses the samples inside the window
//! `[b - 10*cutoff, b - cutoff]`, close enough that the bounded terms are
//! flat, far enough that the reciprocal stays well-conditioned.

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactalg::{rational_to_f64, Rational, RationalPoly};
use crate::geometry::MomentumData;
use crate::numeric::{gauss_legendre_8, FloatPoly};

/// One fit sample: momentum coordinate, accumulated fibre coordinate, and
/// the log-gap abscissa the regression runs against.
#[derive(Debug, Clone, Copy)]
pub struct FitSample {
    pub tau: f64,
    pub t: f64,
    pub neg_log_gap: f64,
}

/// Result of the cone-exponent fit.
#[derive(Debug, Clone)]
pub struct AsymptoticFit {
    /// The exact angle the fit is checked against.
    pub beta_target: Rational,
    /// Least-squares slope of `t` against `-ln(b - tau)`.
    pub slope_fitted: f64,
    /// `|slope - 1/(2 beta)| / (1/(2 beta))`.
    pub relative_error: f64,
    /// The regression points, strictly increasing in `tau`, all at least
    /// `cutoff` away from the interval end.
    pub samples: Vec<FitSample>,
}

/// Integrates `dt = dtau / phi` from `tau = 0` toward the upper interval
/// end and fits the logarithmic blow-up exponent against `1/(2 beta)`.
///
/// Preconditions (violations are [`Error::Precondition`]): `beta > 0`,
/// `cutoff > 0` with `10 * cutoff < b` (the fit window must exist), and
/// `steps >= 100`. The profile must be strictly positive at every
/// quadrature node, else [`Error::NonPositiveProfile`].
pub fn fit_cone_exponent(
    phi_q: &RationalPoly,
    data: &MomentumData,
    beta: &Rational,
    cutoff: f64,
    steps: usize,
) -> Result<AsymptoticFit> {
    if steps < 100 {
        return Err(Error::precondition(
            "cone-exponent fit needs at least 100 integration steps",
        ));
    }
    if !(cutoff > 0.0 && cutoff.is_finite()) {
        return Err(Error::precondition("cutoff must be positive and finite"));
    }
    let b = rational_to_f64(data.half_width())?;
    if 10.0 * cutoff >= b {
        return Err(Error::precondition(
            "fit window [b - 10*cutoff, b - cutoff] must lie inside (0, b)",
        ));
    }
    if !beta.is_positive() {
        return Err(Error::precondition(
            "cone-exponent fit needs a strictly positive angle",
        ));
    }

    let q = FloatPoly::try_from(data.q())?;
    let num = FloatPoly::try_from(phi_q)?;
    let phi = |tau: f64| num.eval(tau) / q.eval(tau);
    let recip = |tau: f64| q.eval(tau) / num.eval(tau);

    // Geometric grading of the gap b - tau: from the full width b (tau = 0)
    // down to the cutoff, `steps` panels, one GL8 panel each.
    let h = (b / cutoff).ln() / steps as f64;
    let mut samples = Vec::new();
    let mut t = 0.0;
    let mut tau_prev = 0.0;
    for j in 0..=steps {
        let gap = b * (-h * j as f64).exp();
        let tau = b - gap;
        if j > 0 {
            // positivity at the panel ends and its interior nodes; the GL
            // integration itself reuses the same evaluations' sign
            for probe in [tau_prev, 0.5 * (tau_prev + tau), tau] {
                if phi(probe) <= 0.0 {
                    return Err(Error::NonPositiveProfile { tau: probe });
                }
            }
            t += gauss_legendre_8(&recip, tau_prev, tau);
        }
        if gap <= 10.0 * cutoff * (1.0 + 1e-12) {
            samples.push(FitSample {
                tau,
                t,
                neg_log_gap: -gap.ln(),
            });
        }
        tau_prev = tau;
    }

    let n = samples.len() as f64;
    let mean_x = samples.iter().map(|s| s.neg_log_gap).sum::<f64>() / n;
    let mean_y = samples.iter().map(|s| s.t).sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var = 0.0;
    for s in &samples {
        let dx = s.neg_log_gap - mean_x;
        cov += dx * (s.t - mean_y);
        var += dx * dx;
    }
    if var < 1e-10 {
        return Err(Error::precondition(
            "fit window is degenerate: log-gap spread too small",
        ));
    }
    let slope_fitted = cov / var;
    let target = 1.0 / (2.0 * beta.to_f64().expect("angle fits in a double"));
    let relative_error = (slope_fitted - target).abs() / target;
    Ok(AsymptoticFit {
        beta_target: beta.clone(),
        slope_fitted,
        relative_error,
        samples,
    })
}
