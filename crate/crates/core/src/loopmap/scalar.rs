//! Scalar power series attached to the quantum loop superalgebra: the series
//! `G`, q-numbers, the exchange identity satisfied by `G`, and the partition
//! expansions of the Cartan currents `ψ` and `φ`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::LoopError;
use crate::exact::{factorial, rat, ratio, HPoly, Rational, TruncSeries};

/// Name of the variable of `G`.
pub const V: &str = "v";
/// Name of the variable `ħ`.
pub const HBAR: &str = "hbar";

/// `G` over an arbitrary variable setup, as a series in the variable `var`.
fn g_in(vars: &[&str], var: &str, cap: u32) -> Result<TruncSeries, LoopError> {
    let x = TruncSeries::var(vars, cap + 1, var)?;
    let half = x.scale(&ratio(1, 2));
    let diff = half.exp()?.sub(&half.neg().exp()?)?;
    let quotient = diff.divide_by_var(var, 1)?.expect("e^{x/2} - e^{-x/2} is divisible by x").with_cap(cap);
    Ok(quotient.inverse()?.log()?)
}

/// `G(v) = log(v / (e^{v/2} − e^{−v/2}))` up to `v^order`.
pub fn g_series(order: u32) -> Result<TruncSeries, LoopError> {
    if order < 2 {
        return Err(LoopError::Order { min: 2, got: order });
    }
    g_in(&[V], V, order)
}

/// Coefficients `G₀, …, G_order` of `G(v)`.
pub fn g_coefficients(order: u32) -> Result<Vec<Rational>, LoopError> {
    let g = g_series(order.max(2))?;
    Ok((0..=order).map(|k| g.coeff(&[k])).collect())
}

/// `(e^{nħ/2} − e^{−nħ/2}) / ħ` up to `ħ^order`.
fn sinh_over_hbar(n: i64, order: u32) -> Result<TruncSeries, LoopError> {
    let h = TruncSeries::var(&[HBAR], order + 1, HBAR)?;
    let half = h.scale(&Rational::new(n.into(), 2.into()));
    let diff = half.exp()?.sub(&half.neg().exp()?)?;
    Ok(diff.divide_by_var(HBAR, 1)?.expect("odd in ħ").with_cap(order))
}

/// `q − q⁻¹ = e^{ħ/2} − e^{−ħ/2}` up to `ħ^order`.
pub fn q_difference(order: u32) -> Result<TruncSeries, LoopError> {
    let h = TruncSeries::var(&[HBAR], order, HBAR)?;
    Ok(sinh_over_hbar(1, order)?.mul(&h)?)
}

/// `ħ / (q − q⁻¹)` up to `ħ^order`.
pub fn hbar_over_q_difference(order: u32) -> Result<TruncSeries, LoopError> {
    Ok(sinh_over_hbar(1, order)?.inverse()?)
}

/// `(ħ / (q − q⁻¹))^{1/2}` with constant term 1, up to `ħ^order`.
pub fn sqrt_hbar_over_q_difference(order: u32) -> Result<TruncSeries, LoopError> {
    Ok(hbar_over_q_difference(order)?.sqrt_unit()?)
}

/// `[n]_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹)` as a series in `ħ` up to `ħ^order`.
pub fn qnumber_series(n: i64, order: u32) -> Result<TruncSeries, LoopError> {
    if n == 0 {
        return Ok(TruncSeries::zero(&[HBAR], order));
    }
    Ok(sinh_over_hbar(n, order)?.mul(&sinh_over_hbar(1, order)?.inverse()?)?)
}

/// Converts a series in `ħ` alone into an [`HPoly`].
pub fn to_hpoly(s: &TruncSeries) -> HPoly {
    let mut coeffs = vec![Rational::zero(); s.cap() as usize + 1];
    for (e, c) in s.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    HPoly::from_coeffs(coeffs)
}

/// Sign choice `±` in the exchange identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    /// Upper signs.
    Plus,
    /// Lower signs.
    Minus,
}

impl Sign {
    /// `+1` or `−1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Outcome of checking the exchange identity for `G`.
#[derive(Clone, Debug, Serialize)]
pub struct GeReport {
    /// The shift parameter `a`.
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub a: Rational,
    /// Sign choice.
    pub sign: Sign,
    /// Total-degree order in `(u, v, ħ)`.
    pub order: u32,
    /// Left side, canonical text form.
    pub lhs: String,
    /// Right side, canonical text form.
    pub rhs: String,
    /// Whether both sides agree up to the order.
    pub holds: bool,
}

/// `(e^x − e^y)/(x − y)` for series `x`, `y` without constant term, written as
/// `Σ_{n≥1} (1/n!) Σ_{k<n} x^k y^{n−1−k}`.
pub fn divided_exp(x: &TruncSeries, y: &TruncSeries) -> Result<TruncSeries, LoopError> {
    let cap = x.cap();
    let mut xp = vec![x.one_like()];
    let mut yp = vec![y.one_like()];
    for k in 1..=cap as usize {
        xp.push(xp[k - 1].mul(x)?);
        yp.push(yp[k - 1].mul(y)?);
    }
    let mut out = x.zero_like();
    for n in 1..=cap as usize + 1 {
        let mut sum = x.zero_like();
        for k in 0..n {
            sum = sum.add(&xp[k].mul(&yp[n - 1 - k])?)?;
        }
        out = out.add(&sum.scale(&(Rational::one() / factorial(n as u32))))?;
    }
    Ok(out)
}

/// Checks
/// `exp(G(v−u ± aħ) − G(v−u ∓ aħ)) · (p e^u − e^{v±aħ})/(u−v∓aħ) = (e^v − p e^{u±aħ})/(v−u∓aħ)`
/// in `ℚ[[u, v, ħ]]` up to total degree `order`, where `p` is the parity factor.
///
/// Only `p = +1` is admissible: for `p = −1` the quotients have no removable zero.
pub fn check_ge_identity(a: &Rational, sign: Sign, parity: i8, order: u32) -> Result<GeReport, LoopError> {
    if parity != 1 {
        return Err(LoopError::InadmissibleParity);
    }
    let vars = ["u", V, HBAR];
    let u = TruncSeries::var(&vars, order, "u")?;
    let v = TruncSeries::var(&vars, order, V)?;
    let shift = TruncSeries::var(&vars, order, HBAR)?.scale(&(a * rat(sign.value())));
    let d = v.sub(&u)?;
    let g = g_in(&vars, V, order)?;
    let g_plus = g.substitute(&[(V, d.add(&shift)?)])?;
    let g_minus = g.substitute(&[(V, d.sub(&shift)?)])?;
    let factor = g_plus.sub(&g_minus)?.exp()?;
    let lhs = factor.mul(&divided_exp(&u, &v.add(&shift)?)?)?;
    let rhs = divided_exp(&v, &u.add(&shift)?)?;
    Ok(GeReport {
        a: a.clone(),
        sign,
        order,
        holds: lhs == rhs,
        lhs: lhs.canonical_string(),
        rhs: rhs.canonical_string(),
    })
}

/// Partitions of `n` into non-increasing positive parts.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of distinct orderings of a multiset of parts: `m! / Π mult!`.
pub fn ordering_count(parts: &[u32]) -> Rational {
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_default() += 1;
    }
    mult.values().fold(factorial(parts.len() as u32), |acc, &k| acc / factorial(k))
}

/// Which Cartan current is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Current {
    /// `ψ_i(z) = exp(ħH_{i,0}/2) exp((q−q⁻¹) Σ_{s≥1} H_{i,s} z^{−s})`.
    Psi,
    /// `φ_i(z) = exp(−ħH_{i,0}/2) exp(−(q−q⁻¹) Σ_{s≥1} H_{i,−s} z^{s})`.
    Phi,
}

/// One partition term `c_λ (±(q−q⁻¹))^m H_{±λ₁} ⋯ H_{±λ_m}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurrentTerm {
    /// Parts `λ₁ ≥ … ≥ λ_m`.
    pub parts: Vec<u32>,
    /// `C(λ) / m!`.
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub coefficient: Rational,
}

/// `ψ_{i,r}` (or `φ_{i,−r}`) as `exp(±ħH_{i,0}/2)` times a sum over partitions of `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurrentExpansion {
    /// Which current.
    pub current: Current,
    /// The mode `r ≥ 0`.
    pub r: u32,
    /// One term per partition of `r`.
    pub terms: Vec<CurrentTerm>,
}

/// A polynomial in the loop Cartan generators `H_{i,s}` of one vertex,
/// keyed by the sorted list of modes, with coefficients in `ℚ[ħ]`.
pub type LoopCartanPoly = BTreeMap<Vec<i64>, HPoly>;

impl CurrentExpansion {
    /// The partition formula for `ψ_{i,r}` or `φ_{i,−r}`.
    pub fn new(current: Current, r: u32) -> Self {
        let terms = partitions(r)
            .into_iter()
            .map(|parts| {
                let coefficient = ordering_count(&parts) / factorial(parts.len() as u32);
                CurrentTerm { parts, coefficient }
            })
            .collect();
        CurrentExpansion { current, r, terms }
    }

    /// `+1` for `ψ`, `−1` for `φ`.
    pub fn sign(&self) -> i64 {
        match self.current {
            Current::Psi => 1,
            Current::Phi => -1,
        }
    }

    /// Mode of `H` attached to a part.
    pub fn mode(&self, part: u32) -> i64 {
        self.sign() * i64::from(part)
    }

    /// Expands into a polynomial in the `H_{i,s}` with `ħ`-coefficients up to `ħ^order`.
    pub fn expand(&self, order: u32) -> Result<LoopCartanPoly, LoopError> {
        let s = self.sign();
        let qd = to_hpoly(&q_difference(order)?).scale(&rat(s));
        let mut body = LoopCartanPoly::new();
        for t in &self.terms {
            let mut c = HPoly::constant(t.coefficient.clone());
            for _ in &t.parts {
                c = c.mul_trunc(&qd, order as usize);
            }
            let mut key: Vec<i64> = t.parts.iter().map(|&p| self.mode(p)).collect();
            key.sort();
            add_poly_term(&mut body, key, c);
        }
        let mut out = LoopCartanPoly::new();
        for n in 0..=order {
            // (±ħ/2)^n H₀^n / n!
            let c = HPoly::monomial(Rational::new(s.pow(n).into(), 2i64.pow(n).into()) / factorial(n), n as usize);
            for (key, b) in &body {
                let mut k2 = key.clone();
                k2.extend(std::iter::repeat(0).take(n as usize));
                k2.sort();
                add_poly_term(&mut out, k2, b.mul_trunc(&c, order as usize));
            }
        }
        Ok(out)
    }
}

fn add_poly_term(p: &mut LoopCartanPoly, key: Vec<i64>, c: HPoly) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(key.clone()).or_default();
    *e += &c;
    if e.is_zero() {
        p.remove(&key);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_leading_terms() {
        let g = g_series(6).unwrap();
        assert_eq!(g.coeff(&[2]), ratio(-1, 24));
        assert_eq!(g.coeff(&[4]), ratio(1, 2880));
        assert!(g.coeff(&[0]).is_zero() && g.coeff(&[1]).is_zero() && g.coeff(&[3]).is_zero());
        assert_eq!(g.canonical_string(), "-1/24 v^2 + 1/2880 v^4 - 1/181440 v^6");
    }

    #[test]
    fn qnumbers() {
        assert_eq!(to_hpoly(&qnumber_series(1, 5).unwrap()), HPoly::one());
        assert!(qnumber_series(0, 5).unwrap().is_zero());
        let two = qnumber_series(2, 4).unwrap();
        assert_eq!(two.coeff(&[0]), rat(2));
        assert_eq!(two.coeff(&[2]), ratio(1, 4));
        assert!(two.coeff(&[1]).is_zero());
        let minus = qnumber_series(-3, 6).unwrap();
        assert!(minus.add(&qnumber_series(3, 6).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn square_root_prefactor() {
        let s = sqrt_hbar_over_q_difference(6).unwrap();
        assert_eq!(s.coeff(&[2]), ratio(-1, 48));
        assert_eq!(s.mul(&s).unwrap(), hbar_over_q_difference(6).unwrap());
    }

    #[test]
    fn ge_identity_small_cases() {
        for (a, sign) in [(rat(1), Sign::Plus), (ratio(-1, 2), Sign::Minus), (rat(0), Sign::Plus)] {
            assert!(check_ge_identity(&a, sign, 1, 6).unwrap().holds);
        }
        assert!(matches!(check_ge_identity(&rat(1), Sign::Plus, -1, 4), Err(LoopError::InadmissibleParity)));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(0), vec![Vec::<u32>::new()]);
        assert_eq!(ordering_count(&[2, 1, 1]), rat(3));
    }

    #[test]
    fn psi_low_modes() {
        let psi1 = CurrentExpansion::new(Current::Psi, 1).expand(3).unwrap();
        // ψ_{i,1} = exp(ħH₀/2)(q−q⁻¹)H₁: the ħ¹ part is H₁ and the ħ² part is H₀H₁/2.
        assert_eq!(psi1[&vec![1]], HPoly::from_coeffs(vec![rat(0), rat(1), rat(0), ratio(1, 24)]));
        assert_eq!(psi1[&vec![0, 1]].coeff(2), ratio(1, 2));
        let phi0 = CurrentExpansion::new(Current::Phi, 0).expand(2).unwrap();
        assert_eq!(phi0[&vec![0]], HPoly::monomial(ratio(-1, 2), 1));
    }
}
