//! Exact scalar arithmetic: rationals, polynomials in the formal parameter ħ,
//! and sparse multivariate power series truncated at a total-degree cap.
//!
//! Nothing in this module touches floating point.

mod hpoly;
pub mod linalg;
mod series;

pub use hpoly::HPoly;
pub use series::{SeriesError, TruncSeries};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n / 1`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `n / d`, reduced.
///
/// # Panics
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `binom(x, k)` for a rational top argument.
pub fn binomial_rational(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= x - rat(j as i64);
        acc /= rat(j as i64 + 1);
    }
    acc
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serializes a rational as its `p` or `p/q` string.
pub fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

/// Returns `Some(s)` with `s >= 0` and `s * s == r` when `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// `(-1)^k` for a parity bit or small exponent.
pub fn sign(k: u32) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// True when the rational is zero.
pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}
