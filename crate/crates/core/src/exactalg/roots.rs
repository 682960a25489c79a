//! Exact root counting on open intervals via Sturm chains.
//!
//! The chain is built over the integers: the rational polynomial is cleared
//! to a primitive integer polynomial, and successive terms come from
//! pseudo-remainders whose accumulated scale factor is kept strictly
//! positive (a negative scale would corrupt the sign-variation count).
//! Content is stripped after every step so coefficient growth stays tame.
//!
//! Endpoint roots are removed by exact synthetic division before counting:
//! the profiles this library certifies vanish at the interval ends by
//! construction, and the contract is "distinct roots strictly inside".

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Rational, RationalPoly};

/// Distinct real roots of `p` in `(lo, hi)`. See [`RationalPoly::count_roots_in_open_interval`].
pub(super) fn count_roots_in_open_interval(
    p: &RationalPoly,
    lo: &Rational,
    hi: &Rational,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::InvalidInterval);
    }

    let mut q = p.clone();
    for endpoint in [lo, hi] {
        while !q.is_zero() && q.eval(endpoint).is_zero() {
            q = divide_out_root(&q, endpoint);
        }
    }
    if q.degree().is_none_or(|d| d == 0) {
        // Nonzero constant after deflation: p was a product of endpoint
        // factors only.
        return Ok(0);
    }

    let chain = sturm_chain(primitive_integer_coeffs(&q));
    let at_lo = sign_variations(&chain, lo);
    let at_hi = sign_variations(&chain, hi);
    debug_assert!(at_lo >= at_hi, "sign variations must not increase");
    Ok(at_lo - at_hi)
}

/// Exact quotient of `p` by `(t - root)`; requires `p(root) = 0`.
fn divide_out_root(p: &RationalPoly, root: &Rational) -> RationalPoly {
    let c = p.coeffs();
    let mut quotient = vec![Rational::zero(); c.len() - 1];
    let mut carry = Rational::zero();
    for k in (1..c.len()).rev() {
        carry = carry * root + &c[k];
        quotient[k - 1] = carry.clone();
    }
    debug_assert!((carry * root + &c[0]).is_zero(), "root does not divide p");
    RationalPoly::from_coeffs(quotient)
}

/// Ascending integer coefficients: clear denominators, strip content, keep sign.
fn primitive_integer_coeffs(p: &RationalPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    strip_content(ints)
}

fn strip_content(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && content != BigInt::from(1) {
        for c in &mut p {
            *c /= &content;
        }
    }
    p
}

fn int_derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

/// Generalized Sturm chain `f0, f1, -rem(f0, f1), ...` over the integers,
/// each term primitive, pseudo-remainder scales kept positive.
fn sturm_chain(f0: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let f1 = strip_content(int_derivative(&f0));
    let mut chain = vec![f0, f1];
    loop {
        let k = chain.len();
        if chain[k - 1].len() <= 1 {
            // Constant (or zero) tail: the chain is complete.
            break;
        }
        let mut rem = pseudo_remainder_positive_scale(&chain[k - 2], &chain[k - 1]);
        if rem.is_empty() {
            break;
        }
        for c in &mut rem {
            *c = -&*c;
        }
        chain.push(strip_content(rem));
    }
    chain
}

/// Remainder of `f` modulo `g` scaled by a strictly POSITIVE integer.
/// Each elimination step multiplies the running remainder by `lc(g)`; the
/// accumulated factor's sign is repaired at the end so callers can treat the
/// result as `positive_constant * rem(f, g)`.
fn pseudo_remainder_positive_scale(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let lead_g = g.last().expect("divisor must be nonzero").clone();
    let deg_g = g.len() - 1;
    let mut r = f.to_vec();
    let mut negative_scales = 0usize;
    while r.len() > deg_g {
        let lead_r = r.last().expect("loop invariant: r nonempty").clone();
        let shift = r.len() - 1 - deg_g;
        for c in &mut r {
            *c *= &lead_g;
        }
        for (i, gc) in g.iter().enumerate() {
            r[shift + i] -= &lead_r * gc;
        }
        debug_assert!(r.last().expect("nonempty").is_zero());
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        if lead_g.is_negative() {
            negative_scales += 1;
        }
    }
    if negative_scales % 2 == 1 {
        for c in &mut r {
            *c = -&*c;
        }
    }
    r
}

/// Number of sign changes in the chain evaluated at `x`, zeros skipped.
fn sign_variations(chain: &[Vec<BigInt>], x: &Rational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| integer_sign_at(p, x))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Sign of `p(n/d)` computed without leaving the integers:
/// `d^deg * p(n/d) = sum c_k n^k d^(deg-k)` and `d > 0`.
fn integer_sign_at(p: &[BigInt], x: &Rational) -> i8 {
    let (n, d) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut d_power = BigInt::from(1);
    for c in p.iter().rev() {
        acc = acc * n + c * &d_power;
        d_power *= d;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}
