//! Univariate polynomials with exact rational coefficients.
//!
//! Two operations here carry the load for the profile solvers and deserve a
//! note. `definite_integral` produces the interval moments
//!
//! ```text
//!     A = int_{-b}^{b} Q dtau,   B = int tau Q dtau,   C = int tau^2 Q dtau
//! ```
//!
//! and `double_antiderivative_from(p, base)` returns the unique W with
//!
//! ```text
//!     W'' = p,   W(base) = W'(base) = 0,
//!     equivalently  W(tau) = int_base^tau (tau - x) p(x) dx,
//! ```
//!
//! which is exactly the kernel-weighted integral the momentum profiles are
//! built from. Both are closed under rational arithmetic, so no tolerance
//! enters anywhere in the construction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::rational::rat_int;
use crate::exactalg::Rational;

/// Dense polynomial, coefficients in ascending order (`coeffs[k]` multiplies
/// `t^k`). Trailing zeros are stripped eagerly; the zero polynomial is the
/// empty vector, so `degree()` is `None` exactly for it.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalPoly::from_coeffs(vec![c])
    }

    /// `c0 + c1 t`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        RationalPoly::from_coeffs(vec![c0, c1])
    }

    /// Build from ascending coefficients, normalizing trailing zeros away.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = RationalPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Float evaluation by Horner's rule. Errors with [`Error::Overflow`] if
    /// some coefficient does not fit in an `f64`; the result itself may still
    /// overflow to infinity for extreme arguments, which is left to the
    /// caller.
    pub fn eval_f64(&self, x: f64) -> Result<f64> {
        let mut acc = 0.0_f64;
        for c in self.coeffs.iter().rev() {
            let cf = c
                .to_f64()
                .filter(|v| v.is_finite())
                .ok_or(Error::Overflow)?;
            acc = acc * x + cf;
        }
        Ok(acc)
    }

    /// Exact formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect();
        RationalPoly::from_coeffs(coeffs)
    }

    /// The antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / rat_int(k as i64 + 1)),
        );
        RationalPoly::from_coeffs(coeffs)
    }

    /// Exact `int_lo^hi p`, as an antiderivative difference.
    pub fn definite_integral(&self, lo: &Rational, hi: &Rational) -> Result<Rational> {
        if lo > hi {
            return Err(Error::InvalidInterval);
        }
        let f = self.antiderivative();
        Ok(f.eval(hi) - f.eval(lo))
    }

    /// The unique `W` with `W'' = self` and `W(base) = W'(base) = 0`;
    /// equivalently `W(tau) = int_base^tau (tau - x) p(x) dx`.
    pub fn double_antiderivative_from(&self, base: &Rational) -> Self {
        let mut first = self.antiderivative();
        first = &first - &RationalPoly::constant(first.eval(base));
        let mut second = first.antiderivative();
        second = &second - &RationalPoly::constant(second.eval(base));
        second
    }

    /// Count distinct real roots in the OPEN interval `(lo, hi)` via a Sturm
    /// chain; endpoint roots are deflated away first, matching the convention
    /// that profile zeros at the interval ends are structural.
    pub fn count_roots_in_open_interval(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        super::roots::count_roots_in_open_interval(self, lo, hi)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = RationalPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply every coefficient by `c`.
    pub fn scaled(&self, c: &Rational) -> Self {
        RationalPoly::from_coeffs(self.coeffs.iter().map(|k| k * c).collect())
    }

    /// Multiply by the variable: `p(t) -> t * p(t)`. Handy for building the
    /// weighted moment integrands `t*p`, `t^2*p`.
    pub fn shifted_up(&self) -> Self {
        if self.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPoly {
    /// Human form in ascending powers, e.g. `1 - t - 2*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                _ if unit_coeff && k == 1 => write!(f, "t")?,
                1 => write!(f, "*t")?,
                _ if unit_coeff => write!(f, "t^{k}")?,
                _ => write!(f, "*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({self})")
    }
}
