//! Momentum profiles: the smooth extremal solve and the conically singular
//! constant-scalar-curvature solve.
//!
//! Both solutions are represented through the polynomial `phi*Q` (the
//! profile `phi` itself is the rational function `phi*Q / Q`; since `Q > 0`
//! on the momentum interval, positivity of the profile is positivity of the
//! polynomial). The scalar curvature of the metric built from a profile is
//!
//! ```text
//!     S(tau) = ( RQ(tau) - (phi*Q)''(tau) / 2 ) / Q(tau),
//! ```
//!
//! so prescribing `S = sigma0 + lambda*tau` (extremal) or `S = sigma0'`
//! (constant, conical at the upper end) turns the problem into exact linear
//! algebra over the moments:
//!
//! * extremal: `(A B; B C) (sigma0; lambda) = (Q(-b) + Q(b) + int RQ;
//!   -b Q(-b) + b Q(b) + int tau RQ)` — solvable since `A*C - B^2 > 0`;
//! * conical: `sigma0' = (2 b Q(-b) + b int RQ - int tau RQ) / (b A - B)`,
//!   with the upper-end derivative left free; the emerging cone angle is
//!   `beta = -(phi*Q)'(b) / (2 Q(b))`.
//!
//! In both cases the profile polynomial is
//!
//! ```text
//!     phi*Q = 2 (tau + b) Q(-b) - 2 W,     W'' = (S - R) Q,  W(-b) = W'(-b) = 0,
//! ```
//!
//! which bakes in the lower-end boundary conditions; the linear solve above
//! is exactly what makes the upper-end conditions come out right. Every
//! returned solution has been checked against all of its defining identities
//! (exact polynomial equality, no tolerances), carries a positivity
//! certificate, and — for the conical solve — the cone angle computed from
//! the boundary derivative has been compared with an independent closed
//! form:
//!
//! ```text
//!     beta = ( Q(-b)(b A + B) + B int RQ - A int tau RQ ) / ( Q(b)(b A - B) ).
//! ```

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{rat_int, rational_to_f64, Rational, RationalPoly};
use crate::geometry::MomentumData;

/// Exact evidence that a profile polynomial is strictly positive between
/// the interval ends: zero distinct roots inside, and a positive sample
/// value at the midpoint (root counting alone cannot distinguish strictly
/// positive from strictly negative).
#[derive(Debug, Clone, PartialEq)]
pub struct PositivityCertificate {
    pub interior_root_count: usize,
    pub midpoint_value: Rational,
}

/// The smooth extremal solution: scalar curvature `sigma0 + lambda*tau`,
/// profile polynomial `phi_q`, and its positivity certificate.
///
/// Guaranteed exactly: `phi_q(+-b) = 0`, `phi_q'(-b) = 2 Q(-b)`,
/// `phi_q'(b) = -2 Q(b)`, and `2 RQ - phi_q'' = 2 (sigma0 + lambda*tau) Q`.
#[derive(Debug, Clone)]
pub struct ExtremalSolution {
    pub sigma0: Rational,
    pub lambda: Rational,
    pub phi_q: RationalPoly,
    pub positivity: PositivityCertificate,
}

/// The constant-scalar-curvature solution with a cone along the upper-end
/// divisor: curvature `sigma0_prime`, cone angle `2*pi*beta`, profile
/// polynomial, positivity certificate.
///
/// Guaranteed exactly: `phi_q(+-b) = 0`, `phi_q'(-b) = 2 Q(-b)`,
/// `phi_q'(b) = -2 beta Q(b)`, `beta >= 0`, and
/// `2 RQ - phi_q'' = 2 sigma0_prime Q`.
#[derive(Debug, Clone)]
pub struct ConicalSolution {
    pub sigma0_prime: Rational,
    pub beta: Rational,
    pub phi_q: RationalPoly,
    pub positivity: PositivityCertificate,
}

/// One row of a sampled profile: momentum coordinate, profile value,
/// scalar curvature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSample {
    pub tau: f64,
    pub phi: f64,
    pub scalar: f64,
}

/// Builds `phi*Q` for prescribed scalar curvature `sigma0 + lambda*tau` and
/// asserts the identities that hold for ANY such curvature (lower-end
/// boundary conditions and the curvature identity itself). Upper-end
/// conditions depend on the particular linear solve and are checked by the
/// callers.
fn build_profile(data: &MomentumData, sigma0: &Rational, lambda: &Rational) -> RationalPoly {
    let b = data.half_width();
    let neg_b = data.lower_end();
    let q_lo = data.q_at_lower();

    let curvature = RationalPoly::linear(sigma0.clone(), lambda.clone());
    let p = &(&curvature * data.q()) - data.rq();
    let w = p.double_antiderivative_from(&neg_b);
    let boundary_line = RationalPoly::linear(rat_int(2) * &q_lo * b, rat_int(2) * &q_lo);
    let phi_q = &boundary_line - &w.scaled(&rat_int(2));

    // Identities that hold by construction; failure is an implementation bug.
    assert!(phi_q.eval(&neg_b).is_zero(), "phi*Q must vanish at -b");
    assert_eq!(
        phi_q.derivative().eval(&neg_b),
        rat_int(2) * &q_lo,
        "(phi*Q)'(-b) must equal 2 Q(-b)"
    );
    assert_eq!(
        &data.rq().scaled(&rat_int(2)) - &phi_q.derivative().derivative(),
        (&curvature * data.q()).scaled(&rat_int(2)),
        "curvature identity 2 RQ - (phi*Q)'' = 2 (sigma0 + lambda*tau) Q"
    );
    phi_q
}

/// Certifies strict positivity of `phi_q` on the open momentum interval, or
/// reports [`Error::PositivityFailure`].
fn certify_positivity(data: &MomentumData, phi_q: &RationalPoly) -> Result<PositivityCertificate> {
    let interior_root_count = phi_q
        .count_roots_in_open_interval(&data.lower_end(), data.half_width())
        .expect("profile polynomial is nonzero and the interval is ordered");
    if interior_root_count != 0 {
        return Err(Error::PositivityFailure {
            interior_roots: interior_root_count,
        });
    }
    let midpoint_value = phi_q.eval(&Rational::zero());
    if !midpoint_value.is_positive() {
        // No interior sign changes and a nonpositive midpoint: the profile
        // is nonpositive throughout, which defines no metric.
        return Err(Error::PositivityFailure { interior_roots: 0 });
    }
    Ok(PositivityCertificate {
        interior_root_count,
        midpoint_value,
    })
}

/// Solves the smooth extremal problem: scalar curvature `sigma0 +
/// lambda*tau` with smooth boundary conditions at both interval ends.
///
/// The 2x2 moment system is solved by Cramer's rule; its determinant
/// `A*C - B^2` is strictly positive for every valid [`MomentumData`].
///
/// Errors with [`Error::PositivityFailure`] when the resulting profile is
/// not strictly positive inside the interval (not expected for Fano factor
/// data; it would signal inadmissible input rather than a solver failure).
pub fn solve_extremal(data: &MomentumData) -> Result<ExtremalSolution> {
    let b = data.half_width();
    let (ma, mb, mc) = (data.moment_a(), data.moment_b(), data.moment_c());
    let (q_lo, q_hi) = (data.q_at_lower(), data.q_at_upper());
    let det = data.gram_det();

    let rhs1 = &q_lo + &q_hi + data.int_rq();
    let rhs2 = (&q_hi - &q_lo) * b + data.int_tau_rq();
    let sigma0 = (mc * &rhs1 - mb * &rhs2) / &det;
    let lambda = (ma * &rhs2 - mb * &rhs1) / &det;

    let phi_q = build_profile(data, &sigma0, &lambda);
    assert_eq!(
        phi_q.eval(b),
        Rational::zero(),
        "(phi*Q)(b) = 0 is enforced by the moment system"
    );
    assert_eq!(
        phi_q.derivative().eval(b),
        rat_int(-2) * &q_hi,
        "(phi*Q)'(b) = -2 Q(b) is enforced by the moment system"
    );

    let positivity = certify_positivity(data, &phi_q)?;
    Ok(ExtremalSolution {
        sigma0,
        lambda,
        phi_q,
        positivity,
    })
}

/// The cone angle determined by the closed form alone:
///
/// ```text
///     beta = ( Q(-b)(b A + B) + B int RQ - A int tau RQ ) / ( Q(b)(b A - B) ).
/// ```
///
/// This rational number exists for every valid [`MomentumData`] — no
/// profile is constructed and no positivity is required — but it only
/// describes a metric when the corresponding profile is positive (see
/// [`solve_csck_conical`]). Exposed separately because the exact identity
/// tying it to the obstruction-theoretic angle is pure algebra and holds
/// even where the metric itself degenerates.
pub fn cone_angle_closed_form(data: &MomentumData) -> Rational {
    let b = data.half_width();
    let (ma, mb) = (data.moment_a(), data.moment_b());
    (&data.q_at_lower() * (b * ma + mb) + mb * &data.int_rq() - ma * &data.int_tau_rq())
        / (&data.q_at_upper() * &data.barycentric_gap())
}

/// Solves the constant-scalar-curvature problem with the upper-end
/// derivative left free; the profile is smooth at the lower end and conical
/// with angle `2*pi*beta` at the upper end.
///
/// `beta` is computed twice — from the boundary derivative of the
/// constructed profile and from the closed form in the module docs — and
/// the two exact rationals must coincide; a mismatch is reported as
/// [`Error::InternalInconsistency`] (it can only arise from an algebra bug,
/// never from bad input).
///
/// Errors with [`Error::PositivityFailure`] when the constructed profile is
/// not strictly positive inside the interval. Unlike the extremal case this
/// CAN happen for genuinely admissible input — strong twists near the
/// admissibility bound can push the free-boundary solution negative (and its
/// nominal angle below zero), in which case no constant-curvature cone
/// metric exists for that data. The route comparison above still runs before
/// positivity is checked, so angle bookkeeping is validated either way.
pub fn solve_csck_conical(data: &MomentumData) -> Result<ConicalSolution> {
    let b = data.half_width();
    let (q_lo, q_hi) = (data.q_at_lower(), data.q_at_upper());
    let (int_rq, int_tau_rq) = (data.int_rq(), data.int_tau_rq());
    let gap = data.barycentric_gap(); // b*A - B > 0

    let sigma0_prime = (rat_int(2) * b * &q_lo + b * &int_rq - &int_tau_rq) / &gap;

    let phi_q = build_profile(data, &sigma0_prime, &Rational::zero());
    assert_eq!(
        phi_q.eval(b),
        Rational::zero(),
        "(phi*Q)(b) = 0 is enforced by the choice of sigma0'"
    );

    let from_boundary = -phi_q.derivative().eval(b) / (rat_int(2) * &q_hi);
    let closed_form = cone_angle_closed_form(data);
    if from_boundary != closed_form {
        return Err(Error::InternalInconsistency {
            from_boundary,
            closed_form,
        });
    }

    let positivity = certify_positivity(data, &phi_q)?;
    // A strictly positive profile vanishing at b forces a nonpositive
    // derivative there, hence a nonnegative angle.
    assert!(
        !from_boundary.is_negative(),
        "cone angle must be nonnegative for a positive profile"
    );
    Ok(ConicalSolution {
        sigma0_prime,
        beta: from_boundary,
        phi_q,
        positivity,
    })
}

/// Scalar curvature `( RQ(tau) - (phi*Q)''(tau)/2 ) / Q(tau)` of the metric
/// defined by the given profile polynomial, evaluated exactly.
///
/// Errors with [`Error::PoleAtTau`] if `Q(tau) = 0` (only possible outside
/// the admissible interval).
pub fn scalar_curvature(
    phi_q: &RationalPoly,
    data: &MomentumData,
    tau: &Rational,
) -> Result<Rational> {
    let q_val = data.q().eval(tau);
    if q_val.is_zero() {
        return Err(Error::PoleAtTau { tau: tau.clone() });
    }
    let second = phi_q.derivative().derivative().eval(tau);
    Ok((data.rq().eval(tau) - second / rat_int(2)) / q_val)
}

/// Samples `(tau, phi, S)` on a uniform inclusive grid of `grid_size`
/// points over the momentum interval. The grid is built in exact
/// arithmetic and converted to floats per point, so the endpoint rows
/// report `phi = 0` exactly.
pub fn sample_profile(
    phi_q: &RationalPoly,
    data: &MomentumData,
    grid_size: usize,
) -> Result<Vec<ProfileSample>> {
    if grid_size < 2 {
        return Err(Error::precondition("profile grid needs at least 2 points"));
    }
    let b = data.half_width();
    let width = rat_int(2) * b;
    let denom = rat_int((grid_size - 1) as i64);
    let mut samples = Vec::with_capacity(grid_size);
    for k in 0..grid_size {
        let tau = data.lower_end() + &width * rat_int(k as i64) / &denom;
        let phi = phi_q.eval(&tau) / data.q().eval(&tau);
        let scalar = scalar_curvature(phi_q, data, &tau)?;
        samples.push(ProfileSample {
            tau: rational_to_f64(&tau)?,
            phi: rational_to_f64(&phi)?,
            scalar: rational_to_f64(&scalar)?,
        });
    }
    Ok(samples)
}
