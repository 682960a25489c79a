//! Exact construction and certification of momentum-profile metrics on
//! projective line bundles over products of positive Kähler–Einstein factors.
//!
//! The crate is organized bottom-up:
//!
//! - [`exactalg`] — arbitrary-precision rational polynomials: arithmetic,
//!   calculus, exact definite integrals, and Sturm-chain root counting.
//! - [`geometry`] — admissible base configurations and the induced data
//!   `Q`, `RQ` on the momentum interval, with exact moments.
//! - [`profiles`] — the extremal and the conically singular constant
//!   scalar curvature profiles `φQ`, solved in closed form; the cone
//!   angle comes out of two independent exact routes that must agree.
//! - [`futaki`] — obstruction integrals (classical and log) and the
//!   volume functional, with the cone-angle identity cross-checked.
//! - [`numeric`] — float quadrature used only to corroborate exact
//!   results, never to produce them.
//! - [`asymptotics`] — fits the cone angle from the profile's boundary
//!   decay, an independent floating-point route onto the same quantity.
//! - [`verification`] — one-call certificates bundling every invariant
//!   check, shared by the test suite and the command-line tool.
//!
//! All geometric quantities are exact rationals until the moment a caller
//! asks for floats; equality checks between independent routes are exact.

// Error values carry the exact rationals behind a failure (bounds, root
// counts, disagreeing angles); keeping them inline is worth the enum size.
#![allow(clippy::result_large_err)]

pub mod asymptotics;
pub mod error;
pub mod exactalg;
pub mod futaki;
pub mod geometry;
pub mod numeric;
pub mod profiles;
pub mod verification;

#[cfg(test)]
pub(crate) mod fixtures;

pub use asymptotics::{fit_cone_exponent, AsymptoticFit, FitSample};
pub use error::{Error, Result};
pub use exactalg::{parse_rational, rational_to_f64, Rational, RationalPoly};
pub use futaki::{
    beta_via_futaki, classical_futaki, cone_angle_identity, futaki_report, log_futaki,
    volume_functional, ConeAngleIdentity, FutakiReport,
};
pub use geometry::{max_admissible_half_width, FibrationSetup, KEFactor, MomentumData};
pub use numeric::{
    adaptive_simpson, cross_validate_moments, float_moments, gauss_legendre_8, numeric_moments,
    scaled_error, FloatPoly, MomentAgreement, NumericMoments,
};
pub use profiles::{
    cone_angle_closed_form, sample_profile, scalar_curvature, solve_csck_conical, solve_extremal,
    ConicalSolution, ExtremalSolution, PositivityCertificate, ProfileSample,
};
pub use verification::{
    analyze_case, analyze_setup, describe_setup, random_certified_case, random_setup,
    run_random_suite, CaseReport, CertifiedCase, SuiteOutcome,
};
