//! Polynomials in the formal parameter ħ with rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{fmt_rational, rat, Rational};

/// A polynomial `Σ c_k ħ^k` with exact coefficients.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HPoly {
    coeffs: Vec<Rational>,
}

impl HPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The constant polynomial `n`.
    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// The monomial `c ħ^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// The monomial `ħ^k`.
    pub fn hbar_pow(k: usize) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// Builds a polynomial from its coefficient list, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    /// Coefficient list indexed by ħ-exponent.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `ħ^k`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in ħ, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Iterates over the nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Drops every term of ħ-degree above `max_deg`.
    pub fn truncate(&self, max_deg: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max_deg + 1).cloned().collect())
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `ħ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        HPoly { coeffs }
    }

    /// Divides by `ħ^k`, returning `None` if some term has exponent below `k`.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// The substitution `ħ ↦ -ħ`.
    pub fn flip(&self) -> Self {
        HPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Value at `ħ = 0`.
    pub fn at_zero(&self) -> Rational {
        self.coeff(0)
    }

    /// Product truncated at ħ-degree `max_deg`.
    pub fn mul_trunc(&self, other: &Self, max_deg: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(max_deg + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(coeffs)
    }
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, other: &HPoly) -> HPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        HPoly::from_coeffs(coeffs)
    }
}

impl AddAssign<&HPoly> for HPoly {
    fn add_assign(&mut self, other: &HPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[k] += c;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, other: &HPoly) -> HPoly {
        self + &(-other)
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, other: &HPoly) -> HPoly {
        self.mul_trunc(other, usize::MAX - 1)
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_rational(&abs))?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{} ", fmt_rational(&abs))?;
                    }
                    if k == 1 {
                        write!(f, "hbar")?;
                    } else {
                        write!(f, "hbar^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for HPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
