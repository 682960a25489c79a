//! Error type shared across the library.

use crate::exactalg::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// `definite_integral` and interval-based root counting require an
    /// ordered interval.
    #[error("invalid interval: lower bound must be strictly below upper bound")]
    InvalidInterval,

    /// Root counting on the zero polynomial is meaningless (every point is a
    /// root).
    #[error("root counting requires a nonzero polynomial")]
    ZeroPolynomial,

    /// A rational value (or polynomial coefficient) does not fit in an `f64`.
    #[error("value does not fit in a double")]
    Overflow,

    /// A string could not be parsed as an exact rational number.
    #[error("invalid rational literal `{text}` (expected `p/q`, an integer, or a finite decimal)")]
    InvalidRationalLiteral { text: String },

    /// The momentum interval [-b, b] is too wide: some fibre scaling
    /// s_i(tau) = 1 - tau*l_i*kappa_i fails to stay positive. The maximal
    /// admissible half-width is reported.
    #[error("degenerate momentum interval: a fibre scaling s_i vanishes on [-b, b]; half-width must be below {max_b}")]
    DegenerateInterval { max_b: Rational },

    /// R(tau) = RQ(tau)/Q(tau) was requested at a zero of Q.
    #[error("Q vanishes at tau = {tau}; R(tau) is undefined there")]
    PoleAtTau { tau: Rational },

    /// The momentum profile is not strictly positive on the open interval.
    /// Carries the number of distinct interior roots of phi*Q (zero means the
    /// profile is nonpositive without crossing, e.g. negative throughout).
    #[error("momentum profile not positive on the open interval ({interior_roots} interior root(s) of phi*Q)")]
    PositivityFailure { interior_roots: usize },

    /// The two exact routes to the cone angle disagreed. This cannot happen
    /// for correct inputs and signals an internal bug; both values are
    /// reported for diagnosis.
    #[error("cone-angle routes disagree: boundary derivative gives {from_boundary}, closed form gives {closed_form}")]
    InternalInconsistency {
        from_boundary: Rational,
        closed_form: Rational,
    },

    /// The cone-angle denominator Q(b)(bA - B) vanished.
    #[error("cone-angle denominator Q(b)(bA - B) vanishes")]
    DegenerateDenominator,

    /// A float quadrature node saw a nonpositive profile value.
    #[error("profile is not positive at quadrature node tau = {tau}")]
    NonPositiveProfile { tau: f64 },

    /// A stated precondition was violated by the caller.
    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
