//! The map `Φ` from the loop generators `E_{i,r}`, `F_{i,r}`, `H_{i,r}` into
//! the degree-truncated Yangian, and the images of the loop relations.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::scalar::{
    g_coefficients, hbar_over_q_difference, q_difference, qnumber_series, sqrt_hbar_over_q_difference, to_hpoly,
    Current, CurrentExpansion,
};
use super::LoopError;
use crate::exact::{factorial, rat, HPoly, Rational};
use crate::yangian::{monomial_levels, Kind, YElement, YLetter, Yangian};

/// Family of a loop generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LoopKind {
    /// `E_{i,r}`.
    E,
    /// `F_{i,r}`.
    F,
    /// `H_{i,r}`.
    H,
}

/// A loop generator `E_{i,r}`, `F_{i,r}` or `H_{i,r}` with `r ∈ ℤ` (vertex 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopGenerator {
    /// Family.
    pub kind: LoopKind,
    /// Vertex, 0-based.
    pub i: usize,
    /// Mode.
    pub r: i64,
}

impl LoopGenerator {
    /// `E_{i,r}`.
    pub fn e(i: usize, r: i64) -> Self {
        LoopGenerator { kind: LoopKind::E, i, r }
    }

    /// `F_{i,r}`.
    pub fn f(i: usize, r: i64) -> Self {
        LoopGenerator { kind: LoopKind::F, i, r }
    }

    /// `H_{i,r}`.
    pub fn h(i: usize, r: i64) -> Self {
        LoopGenerator { kind: LoopKind::H, i, r }
    }

    /// `E` for [`Kind::Plus`], `F` for [`Kind::Minus`].
    pub fn root(side: Kind, i: usize, r: i64) -> Self {
        match side {
            Kind::Minus => Self::f(i, r),
            _ => Self::e(i, r),
        }
    }
}

impl fmt::Display for LoopGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{},{}]", self.kind, self.i + 1, self.r)
    }
}

impl FromStr for LoopGenerator {
    type Err = LoopError;

    /// Parses `E:1:2`, `F:2:-1` or `H:1:0` with a 1-based vertex.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LoopError::UnknownGenerator(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let kind = match parts[0] {
            "E" | "e" => LoopKind::E,
            "F" | "f" => LoopKind::F,
            "H" | "h" => LoopKind::H,
            _ => return Err(bad()),
        };
        let i: usize = parts[1].parse().map_err(|_| bad())?;
        let r: i64 = parts[2].parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        Ok(LoopGenerator { kind, i: i - 1, r })
    }
}

/// Product in the commutative subalgebra generated by the `h_{i,r}`,
/// truncated at total degree `cap`.
pub fn cartan_mul(a: &YElement, b: &YElement, cap: u32) -> YElement {
    let mut out = YElement::zero();
    for (m1, c1) in a.terms() {
        let l1 = monomial_levels(m1);
        for (m2, c2) in b.terms() {
            let lv = l1 + monomial_levels(m2);
            if lv > cap {
                continue;
            }
            let mut m = m1.clone();
            m.extend_from_slice(m2);
            m.sort();
            out.add_term(m, c1.mul_trunc(c2, (cap - lv) as usize));
        }
    }
    out
}

/// `Σ_{n ≤ cap} x^n / n!` in the commutative Cartan subalgebra, for `x` of positive degree.
fn cartan_exp(x: &YElement, cap: u32) -> YElement {
    let mut out = YElement::one();
    let mut power = YElement::one();
    for n in 1..=cap {
        power = cartan_mul(&power, x, cap);
        if power.is_zero() {
            break;
        }
        out.add_assign(&power.scale(&(Rational::one() / factorial(n))));
    }
    out
}

/// Drops terms of total degree above `cap`.
fn truncate(x: &YElement, cap: u32) -> YElement {
    x.scale_poly(&HPoly::one(), cap)
}

/// Identifier of a loop relation whose image is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LoopRelationId {
    /// `[H_{i,r}, H_{j,s}] = 0`.
    CartanCommute,
    /// `[H_{i,0}, E_{j,k}] = c_{ij} E_{j,k}` and `[H_{i,0}, F_{j,k}] = −c_{ij} F_{j,k}`.
    CartanWeight,
    /// `[H_{i,r}, E_{j,k}] = ([r c_{ij}]_q / r) E_{j,r+k}` and the analogue for `F`.
    CartanShift,
    /// `[E_{i,k}, F_{j,l}] = δ_{ij} (ψ_{i,k+l} − φ_{i,k+l})/(q − q⁻¹)`.
    PlusMinus,
    /// `[E_{i,k}, E_{j,l}] = 0 = [F_{i,k}, F_{j,l}]` when `c_{ij} = 0`.
    ZeroSerre,
}

impl LoopRelationId {
    /// Every checked family.
    pub fn all() -> Vec<Self> {
        use LoopRelationId::*;
        vec![CartanCommute, CartanWeight, CartanShift, PlusMinus, ZeroSerre]
    }

    /// Stable name.
    pub fn name(self) -> &'static str {
        match self {
            LoopRelationId::CartanCommute => "cartan-commute",
            LoopRelationId::CartanWeight => "cartan-weight",
            LoopRelationId::CartanShift => "cartan-shift",
            LoopRelationId::PlusMinus => "plus-minus",
            LoopRelationId::ZeroSerre => "zero-serre",
        }
    }

    /// Parses a stable name.
    pub fn parse(s: &str) -> Option<Self> {
        Self::all().into_iter().find(|id| id.name() == s)
    }
}

impl fmt::Display for LoopRelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One instance of a loop relation: vertices, modes and the `E`/`F` side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LoopInstance {
    /// Relation family.
    pub id: LoopRelationId,
    /// First vertex (0-based).
    pub i: usize,
    /// Second vertex (0-based).
    pub j: usize,
    /// First mode.
    pub r: i64,
    /// Second mode.
    pub k: i64,
    /// `Plus` for the `E` version, `Minus` for the `F` version.
    pub side: Kind,
}

impl fmt::Display for LoopInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = |i: usize, r: i64| LoopGenerator::root(self.side, i, r);
        let (a, b) = match self.id {
            LoopRelationId::CartanCommute => (LoopGenerator::h(self.i, self.r), LoopGenerator::h(self.j, self.k)),
            LoopRelationId::CartanWeight | LoopRelationId::CartanShift => {
                (LoopGenerator::h(self.i, self.r), x(self.j, self.k))
            }
            LoopRelationId::PlusMinus => (LoopGenerator::e(self.i, self.r), LoopGenerator::f(self.j, self.k)),
            LoopRelationId::ZeroSerre => (x(self.i, self.r), x(self.j, self.k)),
        };
        write!(f, "[{a}, {b}]")
    }
}

/// Outcome of checking one relation image.
#[derive(Clone, Debug, Serialize)]
pub struct LoopCheck {
    /// The instance.
    pub instance: LoopInstance,
    /// Human-readable label.
    pub label: String,
    /// Whether `Φ(LHS) − Φ(RHS)` vanishes at the caps.
    pub holds: bool,
    /// The rendered difference.
    pub defect: String,
}

/// The map `Φ` into a degree-truncated Yangian, with its Cartan data
/// precomputed at the degree cap.
pub struct LoopMap<'a> {
    y: &'a Yangian,
    cap: u32,
    t: Vec<Vec<YElement>>,
    g: Vec<Vec<YElement>>,
    hbar_over_qd: HPoly,
    qd: HPoly,
}

impl<'a> LoopMap<'a> {
    /// Builds `Φ` for a diagram in which every odd vertex has only even neighbours.
    pub fn new(y: &'a Yangian) -> Result<Self, LoopError> {
        let rs = y.root_system();
        for i in 0..y.rank() {
            if rs.simple_parity(i) == 0 {
                continue;
            }
            let odd_neighbour =
                [i.checked_sub(1), Some(i + 1)].into_iter().flatten().any(|j| j < y.rank() && rs.simple_parity(j) == 1);
            if odd_neighbour {
                return Err(LoopError::Constraint { diagram: y.diagram().to_eo_string(), vertex: i + 1 });
            }
        }
        let cap = y.cap();
        let mut map = LoopMap {
            y,
            cap,
            t: Vec::new(),
            g: Vec::new(),
            hbar_over_qd: to_hpoly(&hbar_over_q_difference(cap)?),
            qd: to_hpoly(&q_difference(cap)?),
        };
        map.t = (0..y.rank()).map(|i| map.compute_t(i)).collect();
        let gc = g_coefficients(cap)?;
        let prefactor = to_hpoly(&sqrt_hbar_over_q_difference(cap)?);
        map.g = (0..y.rank()).map(|i| map.compute_g(i, &gc, &prefactor)).collect();
        Ok(map)
    }

    /// The underlying Yangian.
    pub fn yangian(&self) -> &Yangian {
        self.y
    }

    /// `t_{i,0}, …, t_{i,N}` defined by `ħ Σ t_{i,r} u^{−r−1} = log(1 + ħ Σ h_{i,r} u^{−r−1})`.
    fn compute_t(&self, i: usize) -> Vec<YElement> {
        let top = self.cap as usize + 1;
        // x[k] is the coefficient of u^{−k} in ħ Σ h_{i,r} u^{−r−1}.
        let mut x = vec![YElement::zero(); top + 1];
        for (k, slot) in x.iter_mut().enumerate().skip(1) {
            *slot = YElement::monomial(vec![YLetter::h(i, k as u32 - 1)], HPoly::hbar_pow(1));
        }
        let mut log = vec![YElement::zero(); top + 1];
        let mut power = x.clone();
        for n in 1..=top {
            let c = Rational::new(if n % 2 == 1 { 1.into() } else { (-1).into() }, (n as i64).into());
            for k in 1..=top {
                log[k].add_assign(&power[k].scale(&c));
            }
            let mut next = vec![YElement::zero(); top + 1];
            for a in 1..=top {
                for b in 1..=top - a {
                    if power[a].is_zero() || x[b].is_zero() {
                        continue;
                    }
                    next[a + b].add_assign(&cartan_mul(&power[a], &x[b], top as u32));
                }
            }
            power = next;
        }
        (1..=top)
            .map(|k| {
                let mut t = YElement::zero();
                for (m, c) in log[k].terms() {
                    t.add_term(m.clone(), c.unshift(1).expect("every term carries ħ"));
                }
                t
            })
            .collect()
    }

    /// `γ_i(v) = ħ Σ_r t_{i,r}/r! (−∂_v)^{r+1} G(v)` and `g_i(v) = (ħ/(q−q⁻¹))^{1/2} exp(γ_i(v)/2)`,
    /// returned as the coefficients of `v^m`.
    fn compute_g(&self, i: usize, gc: &[Rational], prefactor: &HPoly) -> Vec<YElement> {
        let gamma = self.gamma_with(i, gc);
        let n = self.cap as usize;
        let half: Vec<YElement> = gamma.iter().map(|c| c.scale(&Rational::new(1.into(), 2.into()))).collect();
        // exp of a series in v with Y⁰ coefficients; every term has degree ≥ 2.
        let mut out = vec![YElement::zero(); n + 1];
        out[0] = YElement::one();
        let mut power = out.clone();
        for k in 1..=n {
            let mut next = vec![YElement::zero(); n + 1];
            for a in 0..=n {
                for b in 0..=n - a {
                    if power[a].is_zero() || half[b].is_zero() {
                        continue;
                    }
                    next[a + b].add_assign(&cartan_mul(&power[a], &half[b], self.cap - (a + b) as u32));
                }
            }
            power = next;
            if power.iter().all(YElement::is_zero) {
                break;
            }
            for m in 0..=n {
                out[m].add_assign(&power[m].scale(&(Rational::one() / factorial(k as u32))));
            }
        }
        out.iter().enumerate().map(|(m, c)| c.scale_poly(prefactor, self.cap - m as u32)).collect()
    }

    fn gamma_with(&self, i: usize, gc: &[Rational]) -> Vec<YElement> {
        let n = self.cap as usize;
        let mut gamma = vec![YElement::zero(); n + 1];
        for r in 0..n {
            let t = self.t[i][r].scale_poly(&HPoly::hbar_pow(1), self.cap);
            // (−∂)^{r+1} v^{p} = (−1)^{r+1} p!/(p−r−1)! v^{p−r−1}
            for p in (r + 1)..=n {
                if gc[p].is_zero() || p - r - 1 > n {
                    continue;
                }
                let sign = if (r + 1) % 2 == 0 { rat(1) } else { rat(-1) };
                let c = &gc[p] * sign * factorial(p as u32) / factorial((p - r - 1) as u32) / factorial(r as u32);
                let m = p - r - 1;
                gamma[m].add_assign(&truncate(&t.scale(&c), self.cap - m as u32));
            }
        }
        gamma
    }

    /// `t_{i,r}` for `0 ≤ r ≤ N`.
    pub fn t(&self, i: usize, r: u32) -> &YElement {
        &self.t[i][r as usize]
    }

    /// The coefficients `t_{i,0}, …, t_{i,N}`.
    pub fn t_series(&self, i: usize) -> &[YElement] {
        &self.t[i]
    }

    /// `γ_i(v)` as the coefficients of `v^0, …, v^N`.
    pub fn gamma(&self, i: usize) -> Result<Vec<YElement>, LoopError> {
        Ok(self.gamma_with(i, &g_coefficients(self.cap)?))
    }

    /// `g_i(v)` as the coefficients of `v^0, …, v^N`.
    pub fn g_series(&self, i: usize) -> &[YElement] {
        &self.g[i]
    }

    /// `B_i(r) / (q − q⁻¹) = (ħ/(q − q⁻¹)) Σ_k t_{i,k} r^k / k!`.
    pub fn borel(&self, i: usize, r: i64) -> YElement {
        let mut sum = YElement::zero();
        for (k, t) in self.t[i].iter().enumerate() {
            let c = Rational::from_integer(r.pow(k as u32).into()) / factorial(k as u32);
            sum.add_assign(&t.scale(&c));
        }
        sum.scale_poly(&self.hbar_over_qd, self.cap)
    }

    /// `Φ` on a loop generator.
    pub fn phi(&self, gen: LoopGenerator) -> Result<YElement, LoopError> {
        if gen.i >= self.y.rank() {
            return Err(LoopError::UnknownGenerator(gen.to_string()));
        }
        Ok(match gen.kind {
            LoopKind::H if gen.r == 0 => self.t[gen.i][0].clone(),
            LoopKind::H => self.borel(gen.i, gen.r),
            LoopKind::E => self.root_image(Kind::Plus, gen.i, gen.r),
            LoopKind::F => self.root_image(Kind::Minus, gen.i, gen.r),
        })
    }

    /// `e^{rσ_i} g_i(σ_i) x^±_{i,0} = Σ_{m,k} r^k/k! g_{i,m} x^±_{i,m+k}`.
    fn root_image(&self, side: Kind, i: usize, r: i64) -> YElement {
        let mut out = YElement::zero();
        for (m, gm) in self.g[i].iter().enumerate() {
            for k in 0..=(self.cap as usize - m) {
                let c = Rational::from_integer(r.pow(k as u32).into()) / factorial(k as u32);
                if c.is_zero() {
                    continue;
                }
                let level = (m + k) as u32;
                let x = YElement::letter(match side {
                    Kind::Minus => YLetter::xm(i, level),
                    _ => YLetter::xp(i, level),
                });
                out.add_assign(&self.y.mul(&gm.scale(&c), &x));
            }
        }
        out
    }

    /// `Φ(exp(s ħ H_{i,0}))` for a rational `s`.
    fn exp_h0(&self, i: usize, s: &Rational) -> YElement {
        let x = self.t[i][0].scale_poly(&HPoly::monomial(s.clone(), 1), self.cap);
        cartan_exp(&x, self.cap)
    }

    /// `Φ((ψ_{i,n} − φ_{i,n}) / (q − q⁻¹))` for `n ∈ ℤ`.
    pub fn current_image(&self, i: usize, n: i64) -> YElement {
        let cap = self.cap;
        if n == 0 {
            // (e^{ħh/2} − e^{−ħh/2}) / ħ = Σ_{j odd} ħ^{j−1} h^j / (2^{j−1} j!)
            let h = &self.t[i][0];
            let mut sum = YElement::zero();
            let mut power = YElement::one();
            for j in 1..=cap + 1 {
                power = cartan_mul(&power, h, cap);
                if j % 2 == 1 {
                    let c = Rational::one() / (factorial(j) * rat(2i64.pow(j - 1)));
                    sum.add_assign(&power.scale_poly(&HPoly::monomial(c, (j - 1) as usize), cap));
                }
            }
            return sum.scale_poly(&self.hbar_over_qd, cap);
        }
        let current = if n > 0 { Current::Psi } else { Current::Phi };
        let expansion = CurrentExpansion::new(current, n.unsigned_abs() as u32);
        let s = rat(expansion.sign());
        let mut body = YElement::zero();
        for term in &expansion.terms {
            // (±(q−q⁻¹))^m / (q−q⁻¹) = (±1)^m (q−q⁻¹)^{m−1}
            let mut c = HPoly::constant(term.coefficient.clone() * s.clone().pow(term.parts.len() as i32));
            for _ in 1..term.parts.len() {
                c = c.mul_trunc(&self.qd, cap as usize);
            }
            let mut prod = YElement::scalar(c);
            for &p in &term.parts {
                prod = cartan_mul(&prod, &self.borel(i, expansion.mode(p)), cap);
            }
            body.add_assign(&prod);
        }
        let out = cartan_mul(&self.exp_h0(i, &(s.clone() / rat(2))), &body, cap);
        // ψ enters with +, φ with −.
        out.scale(&s)
    }

    /// `Φ(LHS) − Φ(RHS)` for one relation instance.
    pub fn defect(&self, inst: &LoopInstance) -> Result<YElement, LoopError> {
        let y = self.y;
        let cap = self.cap;
        let x = |i: usize, r: i64| self.phi(LoopGenerator::root(inst.side, i, r));
        let sign = rat(inst.side.sign());
        let c = y.c(inst.i, inst.j);
        Ok(match inst.id {
            LoopRelationId::CartanCommute => y.supercommutator(
                &self.phi(LoopGenerator::h(inst.i, inst.r))?,
                &self.phi(LoopGenerator::h(inst.j, inst.k))?,
            )?,
            LoopRelationId::CartanWeight => {
                let xj = x(inst.j, inst.k)?;
                let lhs = y.supercommutator(&self.phi(LoopGenerator::h(inst.i, 0))?, &xj)?;
                lhs.sub(&xj.scale(&(sign * rat(c))))
            }
            LoopRelationId::CartanShift => {
                if inst.r == 0 {
                    return Err(LoopError::Inapplicable(inst.to_string()));
                }
                let lhs = y.supercommutator(&self.phi(LoopGenerator::h(inst.i, inst.r))?, &x(inst.j, inst.k)?)?;
                let q = to_hpoly(&qnumber_series(inst.r * c, cap)?).scale(&(sign / rat(inst.r)));
                lhs.sub(&x(inst.j, inst.r + inst.k)?.scale_poly(&q, cap))
            }
            LoopRelationId::PlusMinus => {
                let lhs = y.supercommutator(
                    &self.phi(LoopGenerator::e(inst.i, inst.r))?,
                    &self.phi(LoopGenerator::f(inst.j, inst.k))?,
                )?;
                if inst.i == inst.j {
                    lhs.sub(&self.current_image(inst.i, inst.r + inst.k))
                } else {
                    lhs
                }
            }
            LoopRelationId::ZeroSerre => {
                if c != 0 {
                    return Err(LoopError::Inapplicable(inst.to_string()));
                }
                y.supercommutator(&x(inst.i, inst.r)?, &x(inst.j, inst.k)?)?
            }
        })
    }

    /// All instances of a family with both modes drawn from `modes`
    /// (`r ≠ 0` for the shift family, `r = 0` for the weight family).
    pub fn instances(&self, id: LoopRelationId, modes: &[i64]) -> Vec<LoopInstance> {
        let n = self.y.rank();
        let mut out = Vec::new();
        let sides: &[Kind] = match id {
            LoopRelationId::CartanCommute | LoopRelationId::PlusMinus => &[Kind::Plus],
            _ => &[Kind::Plus, Kind::Minus],
        };
        for i in 0..n {
            for j in 0..n {
                if id == LoopRelationId::ZeroSerre && self.y.c(i, j) != 0 {
                    continue;
                }
                for &side in sides {
                    for &r in modes {
                        match id {
                            LoopRelationId::CartanWeight if r != 0 => continue,
                            LoopRelationId::CartanShift if r == 0 => continue,
                            _ => {}
                        }
                        for &k in modes {
                            out.push(LoopInstance { id, i, j, r, k, side });
                        }
                    }
                }
            }
        }
        out.dedup();
        out
    }

    /// Checks the given instances in parallel; the defect is projected to the length cap.
    pub fn verify(&self, instances: &[LoopInstance]) -> Result<Vec<LoopCheck>, LoopError> {
        let len = self.y.caps().length;
        instances
            .par_iter()
            .map(|inst| {
                let d = self.defect(inst)?.project_length(len);
                Ok(LoopCheck {
                    instance: *inst,
                    label: inst.to_string(),
                    holds: d.is_zero(),
                    defect: self.y.render(&d),
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::yangian::Caps;

    fn h(i: usize, r: u32) -> YLetter {
        YLetter::h(i, r)
    }

    #[test]
    fn t_low_coefficients() {
        let y = Yangian::parse("EEO", Caps::new(3, 6)).unwrap();
        let map = LoopMap::new(&y).unwrap();
        assert_eq!(map.t(0, 0), &YElement::letter(h(0, 0)));
        let mut expected = YElement::letter(h(0, 1));
        expected.add_term(vec![h(0, 0), h(0, 0)], HPoly::monomial(ratio(-1, 2), 1));
        assert_eq!(map.t(0, 1), &expected);
    }

    #[test]
    fn images_have_the_right_leading_terms() {
        let y = Yangian::parse("EEO", Caps::new(3, 6)).unwrap();
        let map = LoopMap::new(&y).unwrap();
        let e = map.phi(LoopGenerator::e(1, 0)).unwrap();
        assert_eq!(e.terms()[&vec![YLetter::xp(1, 0)]].at_zero(), rat(1));
        let h1 = map.phi(LoopGenerator::h(0, 1)).unwrap();
        assert_eq!(h1.terms()[&vec![h(0, 0)]].at_zero(), rat(1));
        assert_eq!(map.g_series(0)[0].constant_term().at_zero(), rat(1));
    }

    #[test]
    fn refuses_adjacent_odd_vertices() {
        let y = Yangian::parse("EOEO", Caps::new(2, 4)).unwrap();
        assert!(matches!(LoopMap::new(&y), Err(LoopError::Constraint { .. })));
    }

    #[test]
    fn generator_parsing() {
        let g: LoopGenerator = "E:1:-2".parse().unwrap();
        assert_eq!(g, LoopGenerator::e(0, -2));
        assert_eq!(g.to_string(), "E[1,-2]");
        assert!("X:1:0".parse::<LoopGenerator>().is_err());
        assert!("E:0:0".parse::<LoopGenerator>().is_err());
    }
}
