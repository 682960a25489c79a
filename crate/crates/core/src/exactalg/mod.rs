//! Exact algebra layer: arbitrary-precision rationals and univariate
//! polynomials over them.
//!
//! Everything downstream (momentum data, profile solves, cone angles) is
//! computed in this layer without any floating point, so equalities asserted
//! by the solvers are genuine identities, not tolerance checks. Floats only
//! appear at the very edge, via [`RationalPoly::eval_f64`] and the conversion
//! helpers in [`rational`].

mod poly;
mod rational;
mod roots;

pub use poly::RationalPoly;
pub use rational::{parse_rational, rational_to_f64, Rational};

pub(crate) use rational::{rat, rat_int};
