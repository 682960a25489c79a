//! Shared test fixtures: the reference configurations whose exact values
//! were pinned by an independent computer-algebra oracle before the solvers
//! were written. Test-only.

use crate::exactalg::{rat, rat_int, Rational};
use crate::geometry::{FibrationSetup, KEFactor, MomentumData};

/// Factors from `(dim, einstein, exponent)` integer triples.
pub(crate) fn factors(triples: &[(u32, i64, i64)]) -> Vec<KEFactor> {
    triples
        .iter()
        .map(|&(n, k, l)| KEFactor::from_integers(n, k, l).unwrap())
        .collect()
}

pub(crate) fn setup(triples: &[(u32, i64, i64)], b: Rational) -> FibrationSetup {
    FibrationSetup::new(factors(triples), b).unwrap()
}

pub(crate) fn data(triples: &[(u32, i64, i64)], b: Rational) -> MomentumData {
    MomentumData::from_setup(&setup(triples, b))
}

/// Two untwisted one-dimensional factors, `b = 1`: `Q = 1`, everything
/// symmetric, smooth constant-curvature solution with angle 1.
pub(crate) fn trivial_pair() -> MomentumData {
    data(&[(1, 1, 0), (1, 1, 0)], rat_int(1))
}

/// Exponents `(-1, 2)` on two one-dimensional unit factors, `b = 1/4`:
/// the reference configuration whose cone angle exceeds 1 on the whole
/// admissible range `b < 1/2`.
pub(crate) fn wide_angle_pair() -> MomentumData {
    data(&[(1, 1, -1), (1, 1, 2)], rat(1, 4))
}

/// Exponents `(-2, 1)`, `b = 1/4`: the mirror configuration whose cone
/// angle stays strictly between 1/4 and 1.
pub(crate) fn narrow_angle_pair() -> MomentumData {
    data(&[(1, 1, -2), (1, 1, 1)], rat(1, 4))
}

/// A single two-dimensional factor with unit twist, `b = 1/2`.
pub(crate) fn surface_factor() -> MomentumData {
    data(&[(2, 1, 1)], rat(1, 2))
}

/// Fractional Einstein constants: `(2, 1/2, -1)` and `(1, 2, 1)`, `b = 1/3`.
pub(crate) fn mixed_constants() -> MomentumData {
    let fs = vec![
        KEFactor::new(2, rat(1, 2), rat_int(-1)).unwrap(),
        KEFactor::new(1, rat_int(2), rat_int(1)).unwrap(),
    ];
    MomentumData::from_setup(&FibrationSetup::new(fs, rat(1, 3)).unwrap())
}

/// The wide-angle pair plus an untwisted surface factor, `b = 1/4`; the
/// extra factor shifts the curvature constants but leaves the angle alone.
pub(crate) fn three_factor() -> MomentumData {
    data(&[(1, 1, -1), (1, 1, 2), (2, 1, 0)], rat(1, 4))
}
