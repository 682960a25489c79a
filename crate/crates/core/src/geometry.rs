//! Base geometry: a product of positive Kähler–Einstein factors, twisted by
//! per-factor pluricanonical powers, reduced to exact polynomial data on the
//! momentum interval `[-b, b]`.
//!
//! Each factor contributes an affine fibre scaling
//!
//! ```text
//!     s_i(tau) = 1 - tau * l_i * kappa_i
//! ```
//!
//! (the curvature endomorphism acts on the factor with constant eigenvalue
//! `l_i * kappa_i`). The derived data are
//!
//! ```text
//!     Q(tau)  = prod_i s_i(tau)^{n_i}                       (volume ratio)
//!     RQ(tau) = sum_i n_i kappa_i s_i^{n_i - 1} prod_{j!=i} s_j^{n_j}
//! ```
//!
//! so that `R(tau) = RQ(tau)/Q(tau)` is the Ricci trace against the
//! tau-dependent base form. Admissibility of the half-width `b` means every
//! `s_i > 0` on the closed interval, equivalently
//! `b < 1/|l_i kappa_i|` for every factor with `l_i kappa_i != 0`.
//!
//! The sign convention for the scaling (`-tau` rather than `+tau` against
//! `l_i kappa_i`) is pinned by the reference configurations: exponents
//! `(-1, 2)` on two one-dimensional factors must give a cone angle above 1
//! across the admissible range, exponents `(-2, 1)` a cone angle below 1;
//! the acceptance suite locks both bands.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Rational, RationalPoly};

/// One Kähler–Einstein factor of the base: complex dimension `dim`,
/// Einstein constant `einstein` (`kappa > 0`), and the power `exponent`
/// (`l`) with which its canonical bundle enters the twisting line bundle.
///
/// `exponent` is accepted as any rational; whether a fractional power is a
/// genuine line bundle is the caller's responsibility and is not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KEFactor {
    dim: u32,
    einstein: Rational,
    exponent: Rational,
}

impl KEFactor {
    /// Validates `dim >= 1` and `einstein > 0` (the factor must be Fano).
    pub fn new(dim: u32, einstein: Rational, exponent: Rational) -> Result<Self> {
        if dim == 0 {
            return Err(Error::precondition("factor dimension must be at least 1"));
        }
        if !einstein.is_positive() {
            return Err(Error::precondition(
                "Einstein constant must be strictly positive",
            ));
        }
        Ok(KEFactor {
            dim,
            einstein,
            exponent,
        })
    }

    /// Convenience constructor from small integers: `(dim, kappa, l)`.
    pub fn from_integers(dim: u32, einstein: i64, exponent: i64) -> Result<Self> {
        Self::new(
            dim,
            Rational::from_integer(einstein.into()),
            Rational::from_integer(exponent.into()),
        )
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn einstein(&self) -> &Rational {
        &self.einstein
    }

    pub fn exponent(&self) -> &Rational {
        &self.exponent
    }

    /// The eigenvalue `l * kappa` of the curvature endomorphism on this
    /// factor.
    pub fn twist(&self) -> Rational {
        &self.exponent * &self.einstein
    }

    /// The affine fibre scaling `s(tau) = 1 - tau * l * kappa`.
    pub fn scaling(&self) -> RationalPoly {
        RationalPoly::linear(Rational::one(), -self.twist())
    }
}

/// Maximal admissible half-width for a factor list: the least `1/|l kappa|`
/// over factors with nonzero twist, or `None` when every twist vanishes
/// (then any `b > 0` is admissible).
pub fn max_admissible_half_width(factors: &[KEFactor]) -> Option<Rational> {
    factors
        .iter()
        .map(KEFactor::twist)
        .filter(|t| !t.is_zero())
        .map(|t| t.abs().recip())
        .min()
}

/// A validated fibration input: the factor list, the momentum half-width
/// `b`, the base volume `vol_m` (scales reported functionals only), and the
/// holomorphy-potential scale `a` (likewise a reporting knob).
#[derive(Debug, Clone)]
pub struct FibrationSetup {
    factors: Vec<KEFactor>,
    b: Rational,
    vol_m: f64,
    a: Rational,
}

impl FibrationSetup {
    /// Validates and builds a setup with default scales `vol_m = 1`, `a = 1`.
    pub fn new(factors: Vec<KEFactor>, b: Rational) -> Result<Self> {
        Self::with_scales(factors, b, 1.0, Rational::one())
    }

    /// Validates and builds a setup with explicit scales.
    ///
    /// Errors with [`Error::DegenerateInterval`] (carrying the maximal
    /// admissible half-width) if some fibre scaling fails to stay positive
    /// on `[-b, b]`.
    pub fn with_scales(
        factors: Vec<KEFactor>,
        b: Rational,
        vol_m: f64,
        a: Rational,
    ) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::precondition("factor list must be nonempty"));
        }
        if !b.is_positive() {
            return Err(Error::precondition(
                "momentum half-width b must be strictly positive",
            ));
        }
        if !(vol_m.is_finite() && vol_m > 0.0) {
            return Err(Error::precondition(
                "base volume vol_m must be finite and positive",
            ));
        }
        if a.is_zero() {
            return Err(Error::precondition(
                "holomorphy-potential scale a must be nonzero",
            ));
        }
        if let Some(max_b) = max_admissible_half_width(&factors) {
            // Affine positivity on a closed interval reduces to the
            // endpoints; s_i(+-b) > 0 for all i iff b < 1/|l_i kappa_i|.
            if b >= max_b {
                return Err(Error::DegenerateInterval { max_b });
            }
        }
        Ok(FibrationSetup {
            factors,
            b,
            vol_m,
            a,
        })
    }

    pub fn factors(&self) -> &[KEFactor] {
        &self.factors
    }

    /// Momentum half-width `b`.
    pub fn half_width(&self) -> &Rational {
        &self.b
    }

    pub fn vol_m(&self) -> f64 {
        self.vol_m
    }

    /// Holomorphy-potential scale `a`.
    pub fn potential_scale(&self) -> &Rational {
        &self.a
    }

    /// Complex dimension of the base (one less than the total space).
    pub fn base_dim(&self) -> u32 {
        self.factors.iter().map(KEFactor::dim).sum()
    }
}

/// The exact polynomial data of a setup on its momentum interval:
/// `Q`, `RQ`, the moments `A = int Q`, `B = int tau Q`, `C = int tau^2 Q`
/// (all over `[-b, b]`), and the half-width itself.
///
/// Construction guarantees `Q > 0` on `[-b, b]`, `A > 0`, `A*C - B^2 > 0`
/// (Cauchy–Schwarz for the measure `Q dtau`), and `b*A - B > 0`.
#[derive(Debug, Clone)]
pub struct MomentumData {
    q: RationalPoly,
    rq: RationalPoly,
    moment_a: Rational,
    moment_b: Rational,
    moment_c: Rational,
    b: Rational,
}

impl MomentumData {
    /// Expands `Q` and `RQ` from the factor scalings and computes the three
    /// moments exactly.
    pub fn from_setup(setup: &FibrationSetup) -> Self {
        let scalings: Vec<(u32, Rational, RationalPoly)> = setup
            .factors()
            .iter()
            .map(|f| (f.dim(), f.einstein().clone(), f.scaling()))
            .collect();

        let mut q = RationalPoly::one();
        for (dim, _, s) in &scalings {
            q = &q * &s.pow(*dim);
        }

        let mut rq = RationalPoly::zero();
        for (i, (dim, kappa, s)) in scalings.iter().enumerate() {
            let weight = Rational::from_integer((*dim).into()) * kappa;
            let mut term = RationalPoly::constant(weight);
            term = &term * &s.pow(dim - 1);
            for (j, (dim_j, _, s_j)) in scalings.iter().enumerate() {
                if j != i {
                    term = &term * &s_j.pow(*dim_j);
                }
            }
            rq = &rq + &term;
        }

        let b = setup.half_width().clone();
        let neg_b = -b.clone();
        let moment_a = q
            .definite_integral(&neg_b, &b)
            .expect("ordered interval by construction");
        let tau_q = q.shifted_up();
        let moment_b = tau_q
            .definite_integral(&neg_b, &b)
            .expect("ordered interval by construction");
        let moment_c = tau_q
            .shifted_up()
            .definite_integral(&neg_b, &b)
            .expect("ordered interval by construction");

        let data = MomentumData {
            q,
            rq,
            moment_a,
            moment_b,
            moment_c,
            b,
        };
        // Construction-level guarantees; a violation is an implementation
        // bug, not bad input (admissibility was validated in the setup).
        assert!(data.q.eval(&neg_b).is_positive(), "Q(-b) must be positive");
        assert!(data.q.eval(&data.b).is_positive(), "Q(b) must be positive");
        assert!(data.moment_a.is_positive(), "A must be positive");
        assert!(
            data.gram_det().is_positive(),
            "A*C - B^2 must be positive (Cauchy-Schwarz)"
        );
        assert!(
            data.barycentric_gap().is_positive(),
            "b*A - B must be positive"
        );
        data
    }

    pub fn q(&self) -> &RationalPoly {
        &self.q
    }

    pub fn rq(&self) -> &RationalPoly {
        &self.rq
    }

    /// `A = int_{-b}^{b} Q`.
    pub fn moment_a(&self) -> &Rational {
        &self.moment_a
    }

    /// `B = int_{-b}^{b} tau Q`.
    pub fn moment_b(&self) -> &Rational {
        &self.moment_b
    }

    /// `C = int_{-b}^{b} tau^2 Q`.
    pub fn moment_c(&self) -> &Rational {
        &self.moment_c
    }

    /// Momentum half-width `b`.
    pub fn half_width(&self) -> &Rational {
        &self.b
    }

    /// `-b`, the lower end of the momentum interval.
    pub fn lower_end(&self) -> Rational {
        -self.b.clone()
    }

    /// `Q(-b)`.
    pub fn q_at_lower(&self) -> Rational {
        self.q.eval(&self.lower_end())
    }

    /// `Q(b)`.
    pub fn q_at_upper(&self) -> Rational {
        self.q.eval(&self.b)
    }

    /// `int_{-b}^{b} RQ`.
    pub fn int_rq(&self) -> Rational {
        self.rq
            .definite_integral(&self.lower_end(), &self.b)
            .expect("ordered interval by construction")
    }

    /// `int_{-b}^{b} tau RQ`.
    pub fn int_tau_rq(&self) -> Rational {
        self.rq
            .shifted_up()
            .definite_integral(&self.lower_end(), &self.b)
            .expect("ordered interval by construction")
    }

    /// `A*C - B^2`, the Gram determinant of `{1, tau}` for the measure
    /// `Q dtau`; strictly positive.
    pub fn gram_det(&self) -> Rational {
        &self.moment_a * &self.moment_c - &self.moment_b * &self.moment_b
    }

    /// `b*A - B`; strictly positive since the barycenter `B/A` lies inside
    /// the open interval.
    pub fn barycentric_gap(&self) -> Rational {
        &self.b * &self.moment_a - &self.moment_b
    }

    /// `tau_bar = B/A`, the barycenter of the measure `Q dtau`.
    pub fn barycenter(&self) -> Rational {
        &self.moment_b / &self.moment_a
    }

    /// Evaluates `R(tau) = RQ(tau)/Q(tau)` exactly.
    ///
    /// Errors with [`Error::PoleAtTau`] if `Q(tau) = 0` (which can only
    /// happen outside the admissible interval).
    pub fn eval_r(&self, tau: &Rational) -> Result<Rational> {
        let q_val = self.q.eval(tau);
        if q_val.is_zero() {
            return Err(Error::PoleAtTau { tau: tau.clone() });
        }
        Ok(self.rq.eval(tau) / q_val)
    }
}
