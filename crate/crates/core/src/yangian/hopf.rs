//! Coproduct, counit and antipode of the truncated Yangian.
//!
//! The coproduct and the antipode are fixed on `h_{i,0}`, `x^±_{i,0}` and
//! `h_{i,1}`. Higher generators follow the recurrences
//! `x^±_{i,r+1} = ±c_{ii′}⁻¹ [h̃_{i′,1}, x^±_{i,r}]` and
//! `h_{i,r} = [x⁺_{i,r}, x⁻_{i,0}]`, composite letters follow their nested
//! brackets, and products are extended multiplicatively (antimultiplicatively
//! for the antipode).

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Zero};

use super::{memo_get, memo_put, Kind, YElement, YLetter, YMonomial, YTensor, Yangian, YangianError};
use super::{RelationCheck, RelationId};
use crate::exact::{rat, ratio, sign, HPoly, Rational};
use crate::rootdata::{Bialgebra, GlElem, Root};

/// How the coproduct and antipode treat diagrams outside the range where
/// the minimalistic presentation is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfMode {
    /// Refuse diagrams with `|I| = 1`, with `|I| = 3` and `|α₁| = |α₃|`, or
    /// with an odd vertex that has no even neighbour.
    Constrained,
    /// Use the same formulas for every diagram in which each odd vertex has
    /// an even neighbour, and let the verification decide.
    Assumed,
}

/// The first constraint of the minimalistic presentation violated by a
/// diagram with the given simple-root parities, if any.
pub fn minimalistic_violation(parity: &[u8]) -> Option<String> {
    let n = parity.len();
    if n == 1 {
        return Some("a single simple root".to_string());
    }
    if n == 3 && parity[0] == parity[2] {
        return Some("three simple roots with |α₁| = |α₃|".to_string());
    }
    odd_vertex_violation(parity)
}

/// Reports an odd simple root without an even neighbour, if any.
pub fn odd_vertex_violation(parity: &[u8]) -> Option<String> {
    (0..parity.len())
        .find(|&i| parity[i] == 1 && even_neighbour(parity, i).is_none())
        .map(|i| format!("odd vertex {} has no even neighbour", i + 1))
}

fn even_neighbour(parity: &[u8], i: usize) -> Option<usize> {
    if parity[i] == 0 {
        return Some(i);
    }
    let left = i.checked_sub(1).filter(|&j| parity[j] == 0);
    let right = Some(i + 1).filter(|&j| j < parity.len() && parity[j] == 0);
    left.or(right)
}

#[derive(Debug, Default)]
pub(crate) struct HopfCache {
    delta: RwLock<HashMap<YLetter, YTensor>>,
    antipode: RwLock<HashMap<YLetter, YElement>>,
}

impl Yangian {
    /// The coproduct mode chosen at construction.
    pub fn hopf_mode(&self) -> HopfMode {
        self.hopf_mode
    }

    /// Checks the constraints under which the minimalistic presentation holds.
    pub fn minimalistic_constraints(&self) -> Result<(), YangianError> {
        self.constraint_result(minimalistic_violation(&self.cell_data.parity))
    }

    fn odd_vertices_have_even_neighbours(&self) -> Result<(), YangianError> {
        self.constraint_result(odd_vertex_violation(&self.cell_data.parity))
    }

    fn constraint_result(&self, violation: Option<String>) -> Result<(), YangianError> {
        match violation {
            None => Ok(()),
            Some(reason) => Err(YangianError::Constraint { diagram: self.diagram().to_eo_string(), reason }),
        }
    }

    /// Checks that the Hopf structure is available in the chosen mode.
    pub fn hopf_available(&self) -> Result<(), YangianError> {
        match self.hopf_mode {
            HopfMode::Constrained => self.minimalistic_constraints(),
            HopfMode::Assumed => self.odd_vertices_have_even_neighbours(),
        }
    }

    fn i_prime_opt(&self, i: usize) -> Option<usize> {
        even_neighbour(&self.cell_data.parity, i)
    }

    /// The index `i′` of the recurrence: `i` itself for an even root, otherwise
    /// the even neighbour with the smaller index.
    pub fn i_prime(&self, i: usize) -> Result<usize, YangianError> {
        self.i_prime_opt(i).ok_or_else(|| YangianError::Constraint {
            diagram: self.diagram().to_eo_string(),
            reason: format!("odd vertex {} has no even neighbour", i + 1),
        })
    }

    /// Matrix of a level-0 root letter under `x⁺_{i,0} ↦ e_i`, `x⁻_{i,0} ↦ f_i`, `h_{i,0} ↦ h_i`.
    pub fn letter_matrix(&self, l: &YLetter) -> GlElem {
        let alg = &self.alg;
        match l.kind {
            Kind::Cartan => alg.h(usize::from(l.lo)).clone(),
            Kind::Plus | Kind::Minus => {
                let pick = |k: u8| if l.kind == Kind::Plus { alg.e(usize::from(k)) } else { alg.f(usize::from(k)) };
                let mut m = pick(l.lo).clone();
                for k in l.lo + 1..=l.hi {
                    m = alg.bracket(&m, pick(k));
                }
                m
            }
        }
    }

    /// The scalar `κ` with `x^±_{β,0} ↦ κ e_β` (resp. `κ f_β`) in the matrix realization.
    pub fn kappa(&self, kind: Kind, root: &Root) -> Rational {
        let target = match kind {
            Kind::Plus => self.alg.root_e(root),
            Kind::Minus => self.alg.root_f(root),
            Kind::Cartan => return Rational::one(),
        };
        let m = self.letter_matrix(&YLetter::x(kind, root, 0));
        let (&(a, b), t) = target.entries().iter().next().expect("root vectors are nonzero");
        let k = m.get(a, b) / t;
        debug_assert_eq!(target.scale(&k), m);
        k
    }

    /// The root vector `e_β` (for `Plus`) or `f_β` (for `Minus`) with `⟨e_β, f_β⟩ = 1`.
    pub fn root_vector(&self, kind: Kind, root: &Root) -> YElement {
        YElement::letter(YLetter::x(kind, root, 0)).scale(&self.kappa(kind, root).recip())
    }

    /// `h_{i,1} − (ħ/2) h_{i,0}²`.
    pub fn h_tilde(&self, i: usize) -> YElement {
        let h0 = YLetter::h(i, 0);
        let sq = YElement::monomial(vec![h0, h0], HPoly::monomial(ratio(-1, 2), 1));
        YElement::letter(YLetter::h(i, 1)).add(&sq)
    }

    /// `Σ_{α ∈ Δ⁺} (α_i, α) f_α ⊗ e_α`.
    fn weighted_root_tensor(&self, i: usize) -> YTensor {
        let rs = self.root_system();
        let mut out = YTensor::zero(2);
        for r in rs.positive_roots() {
            let w = rs.form(&Root::simple(i), r);
            if w == 0 {
                continue;
            }
            let t = self.tensor_of(&[self.root_vector(Kind::Minus, r), self.root_vector(Kind::Plus, r)]);
            out = out.add(&t.scale(&rat(w)));
        }
        out
    }

    /// The root part `Σ_{α ∈ Δ⁺} f_α ⊗ e_α` of `Ω⁺`.
    pub fn omega_plus_roots(&self) -> YTensor {
        let mut out = YTensor::zero(2);
        for r in self.root_system().positive_roots() {
            out = out.add(&self.tensor_of(&[self.root_vector(Kind::Minus, r), self.root_vector(Kind::Plus, r)]));
        }
        out
    }

    /// `[1 ⊗ x⁺_{i,0}, Ω⁺]`, with the Cartan part of `Ω⁺` contracted to `−h_i ⊗ x⁺_{i,0}`.
    pub fn omega_plus_bracket_right(&self, i: usize) -> YTensor {
        let x = YElement::letter(YLetter::xp(i, 0));
        let one_x = self.tensor_of(&[YElement::one(), x.clone()]);
        let roots = self.tensor_bracket(&one_x, &self.omega_plus_roots()).expect("homogeneous");
        let cartan = self.tensor_of(&[YElement::letter(YLetter::h(i, 0)), x]).scale(&-Rational::one());
        roots.add(&cartan)
    }

    /// `[x⁻_{i,0} ⊗ 1, Ω⁺]`, with the Cartan part of `Ω⁺` contracted to `x⁻_{i,0} ⊗ h_i`.
    pub fn omega_plus_bracket_left(&self, i: usize) -> YTensor {
        let x = YElement::letter(YLetter::xm(i, 0));
        let x_one = self.tensor_of(&[x.clone(), YElement::one()]);
        let roots = self.tensor_bracket(&x_one, &self.omega_plus_roots()).expect("homogeneous");
        let cartan = self.tensor_of(&[x, YElement::letter(YLetter::h(i, 0))]);
        roots.add(&cartan)
    }

    /// `x ⊗ 1 + 1 ⊗ x`.
    pub fn boxed(&self, x: &YElement) -> YTensor {
        self.tensor_of(&[x.clone(), YElement::one()]).add(&self.tensor_of(&[YElement::one(), x.clone()]))
    }

    /// Coproduct of one PBW letter.
    pub fn coproduct_letter(&self, l: YLetter) -> Result<YTensor, YangianError> {
        self.check_letter(&l)?;
        self.hopf_available()?;
        if let Some(t) = memo_get(&self.hopf_cache.delta, &l) {
            return Ok(t);
        }
        let out = self.coproduct_letter_uncached(l)?;
        memo_put(&self.hopf_cache.delta, l, out.clone());
        Ok(out)
    }

    fn coproduct_letter_uncached(&self, l: YLetter) -> Result<YTensor, YangianError> {
        let r = u32::from(l.level);
        if let Some((a, y)) = l.split() {
            return self.tensor_bracket(&self.coproduct_letter(a)?, &self.coproduct_letter(y)?);
        }
        let i = usize::from(l.lo);
        Ok(match (l.kind, r) {
            (_, 0) => self.boxed(&YElement::letter(l)),
            (Kind::Cartan, 1) => {
                let h0 = YElement::letter(YLetter::h(i, 0));
                let corr = self.tensor_of(&[h0.clone(), h0]).sub(&self.weighted_root_tensor(i));
                self.boxed(&YElement::letter(l)).add(&self.scale_tensor_hbar(&corr))
            }
            (Kind::Cartan, _) => {
                let xp = self.coproduct_letter(YLetter::xp(i, r))?;
                let xm = self.coproduct_letter(YLetter::xm(i, 0))?;
                self.tensor_bracket(&xp, &xm)?
            }
            (_, _) => {
                let j = self.i_prime(i)?;
                let ht = self.coproduct_h_tilde(j)?;
                let prev = self.coproduct_letter(l.at_level(r - 1))?;
                let c = ratio(l.kind.sign(), self.c(i, j));
                self.tensor_bracket(&ht, &prev)?.scale(&c)
            }
        })
    }

    /// `Δ(h̃_{j,1}) = Δ(h_{j,1}) − (ħ/2) Δ(h_{j,0})²`.
    pub fn coproduct_h_tilde(&self, j: usize) -> Result<YTensor, YangianError> {
        let d0 = self.coproduct_letter(YLetter::h(j, 0))?;
        let sq = self.tensor_mul(&d0, &d0);
        let half = self.scale_tensor_poly(&sq, &HPoly::monomial(ratio(-1, 2), 1));
        Ok(self.coproduct_letter(YLetter::h(j, 1))?.add(&half))
    }

    fn scale_tensor_hbar(&self, t: &YTensor) -> YTensor {
        self.scale_tensor_poly(t, &HPoly::hbar_pow(1))
    }

    /// Multiplies a tensor by a polynomial in ħ, truncated at the degree cap.
    pub fn scale_tensor_poly(&self, t: &YTensor, c: &HPoly) -> YTensor {
        let mut out = YTensor::zero(t.arity());
        for (k, x) in t.terms() {
            let lv: u32 = k.iter().map(|m| super::monomial_levels(m)).sum();
            if lv <= self.cap() {
                out.add_term(k.clone(), x.mul_trunc(c, (self.cap() - lv) as usize));
            }
        }
        out
    }

    /// Coproduct of a monomial, the ordered product of the letter coproducts.
    pub fn coproduct_monomial(&self, m: &[YLetter]) -> Result<YTensor, YangianError> {
        let mut acc = self.tensor_of(&[YElement::one(), YElement::one()]);
        for &l in m {
            acc = self.tensor_mul(&acc, &self.coproduct_letter(l)?);
        }
        Ok(acc)
    }

    /// Coproduct of an element.
    pub fn coproduct(&self, x: &YElement) -> Result<YTensor, YangianError> {
        let mut out = YTensor::zero(2);
        for (m, c) in x.terms() {
            out = out.add(&self.scale_tensor_poly(&self.coproduct_monomial(m)?, c));
        }
        Ok(out)
    }

    /// `Δᵒᵖ = τ ∘ Δ`.
    pub fn coproduct_op(&self, x: &YElement) -> Result<YTensor, YangianError> {
        Ok(self.tau(&self.coproduct(x)?))
    }

    /// Applies the coproduct to one slot of a tensor.
    pub fn coproduct_slot(&self, t: &YTensor, slot: usize) -> Result<YTensor, YangianError> {
        self.map_slot(t, slot, |m| self.coproduct_monomial(m))
    }

    /// Applies the counit to one slot of a tensor.
    pub fn counit_slot(&self, t: &YTensor, slot: usize) -> Result<YTensor, YangianError> {
        self.map_slot(t, slot, |m| {
            let mut out = YTensor::zero(0);
            if m.is_empty() {
                out.add_term(Vec::new(), HPoly::one());
            }
            Ok(out)
        })
    }

    /// The counit: the coefficient of the empty monomial.
    pub fn counit(&self, x: &YElement) -> HPoly {
        x.constant_term()
    }

    /// Reads a one-factor tensor as an element.
    pub fn tensor_to_element(&self, t: &YTensor) -> YElement {
        assert_eq!(t.arity(), 1, "expected a single tensor factor");
        let mut out = YElement::zero();
        for (k, c) in t.terms() {
            out.add_term(k[0].clone(), c.clone());
        }
        out
    }

    /// Antipode of one PBW letter.
    pub fn antipode_letter(&self, l: YLetter) -> Result<YElement, YangianError> {
        self.check_letter(&l)?;
        self.hopf_available()?;
        if let Some(v) = memo_get(&self.hopf_cache.antipode, &l) {
            return Ok(v);
        }
        let out = self.antipode_letter_uncached(l)?;
        memo_put(&self.hopf_cache.antipode, l, out.clone());
        Ok(out)
    }

    fn antipode_letter_uncached(&self, l: YLetter) -> Result<YElement, YangianError> {
        let r = u32::from(l.level);
        let minus = -Rational::one();
        if let Some((a, y)) = l.split() {
            let (sa, sy) = (self.antipode_letter(a)?, self.antipode_letter(y)?);
            let (pa, py) = (self.letter_parity(&a), self.letter_parity(&y));
            return Ok(self.bracket_with(&sa, pa, &sy, py).scale(&minus));
        }
        let i = usize::from(l.lo);
        Ok(match (l.kind, r) {
            (_, 0) => YElement::letter(l).scale(&minus),
            (Kind::Cartan, 1) => self.antipode_h1(i),
            (Kind::Cartan, _) => {
                let sp = self.antipode_letter(YLetter::xp(i, r))?;
                let sm = self.antipode_letter(YLetter::xm(i, 0))?;
                let p = self.cell_data.parity[i];
                self.bracket_with(&sp, p, &sm, p).scale(&minus)
            }
            (_, _) => {
                let j = self.i_prime(i)?;
                let s_ht = self.antipode_h_tilde(j)?;
                let prev = self.antipode_letter(l.at_level(r - 1))?;
                let c = ratio(-l.kind.sign(), self.c(i, j));
                self.bracket_with(&s_ht, 0, &prev, self.letter_parity(&l)).scale(&c)
            }
        })
    }

    /// `S(h_{i,1}) = −h_{i,1} + ħ(h_{i,0}² − Σ_{α ∈ Δ⁺} (α_i, α) f_α e_α)`.
    fn antipode_h1(&self, i: usize) -> YElement {
        let rs = self.root_system();
        let h0 = YLetter::h(i, 0);
        let mut corr = YElement::monomial(vec![h0, h0], HPoly::one());
        for r in rs.positive_roots() {
            let w = rs.form(&Root::simple(i), r);
            if w != 0 {
                let fe = self.mul(&self.root_vector(Kind::Minus, r), &self.root_vector(Kind::Plus, r));
                corr = corr.sub(&fe.scale(&rat(w)));
            }
        }
        YElement::letter(YLetter::h(i, 1))
            .scale(&-Rational::one())
            .add(&corr.scale_poly(&HPoly::hbar_pow(1), self.cap()))
    }

    /// `S(h̃_{j,1}) = S(h_{j,1}) − (ħ/2) S(h_{j,0})²`.
    pub fn antipode_h_tilde(&self, j: usize) -> Result<YElement, YangianError> {
        let s0 = self.antipode_letter(YLetter::h(j, 0))?;
        let sq = self.mul(&s0, &s0).scale_poly(&HPoly::monomial(ratio(-1, 2), 1), self.cap());
        Ok(self.antipode_letter(YLetter::h(j, 1))?.add(&sq))
    }

    /// Antipode of a monomial: `S(l_1 ⋯ l_k) = ± S(l_k) ⋯ S(l_1)` with the Koszul sign.
    pub fn antipode_monomial(&self, m: &[YLetter]) -> Result<YElement, YangianError> {
        let parities: Vec<u8> = m.iter().map(|l| self.letter_parity(l)).collect();
        let mut s = 0u32;
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                s += u32::from(parities[a] & parities[b]);
            }
        }
        let mut acc = YElement::scalar(HPoly::constant(sign(s)));
        for &l in m.iter().rev() {
            acc = self.mul(&acc, &self.antipode_letter(l)?);
        }
        Ok(acc)
    }

    /// Antipode of an element.
    pub fn antipode(&self, x: &YElement) -> Result<YElement, YangianError> {
        let mut out = YElement::zero();
        for (m, c) in x.terms() {
            out.add_assign(&self.antipode_monomial(m)?.scale_poly(c, self.cap()));
        }
        Ok(out)
    }

    /// `μ ∘ (S ⊗ id) ∘ Δ` (for `left = true`) or `μ ∘ (id ⊗ S) ∘ Δ`.
    pub fn antipode_contraction(&self, x: &YElement, left: bool) -> Result<YElement, YangianError> {
        let d = self.coproduct(x)?;
        let mut out = YElement::zero();
        for (k, c) in d.terms() {
            let (a, b) = if left {
                (self.antipode_monomial(&k[0])?, YElement::monomial(k[1].clone(), HPoly::one()))
            } else {
                (YElement::monomial(k[0].clone(), HPoly::one()), self.antipode_monomial(&k[1])?)
            };
            out.add_assign(&self.mul(&a, &b).scale_poly(c, self.cap()));
        }
        Ok(out)
    }

    /// `(Δ ⊗ id)Δ(x) − (id ⊗ Δ)Δ(x)`.
    pub fn coassociativity_defect(&self, x: &YElement) -> Result<YTensor, YangianError> {
        let d = self.coproduct(x)?;
        Ok(self.coproduct_slot(&d, 0)?.sub(&self.coproduct_slot(&d, 1)?))
    }

    /// `(id ⊗ ε)Δ(x) − x` and `(ε ⊗ id)Δ(x) − x`.
    pub fn counit_defects(&self, x: &YElement) -> Result<(YElement, YElement), YangianError> {
        let d = self.coproduct(x)?;
        let right = self.tensor_to_element(&self.counit_slot(&d, 1)?).sub(x);
        let left = self.tensor_to_element(&self.counit_slot(&d, 0)?).sub(x);
        Ok((right, left))
    }

    /// The coefficient of `ħ` in `Δ(x) − Δᵒᵖ(x)`, after checking that the
    /// `ħ`-free part vanishes.
    pub fn classical_cobracket(&self, x: &YElement) -> Result<YTensor, YangianError> {
        let d = self.coproduct(x)?;
        let diff = d.sub(&self.tau(&d));
        let mut out = YTensor::zero(2);
        for (k, c) in diff.terms() {
            if !c.at_zero().is_zero() {
                return Err(YangianError::Inapplicable("Δ − Δᵒᵖ does not vanish at ħ = 0".to_string()));
            }
            out.add_term(k.clone(), HPoly::constant(c.coeff(1)));
        }
        Ok(out)
    }

    /// Value of a degree-zero monomial of length one in the matrix realization.
    pub fn monomial_matrix(&self, m: &YMonomial) -> Option<(GlElem, u32)> {
        match m.as_slice() {
            [l] => {
                let mat = match l.kind {
                    Kind::Cartan => self.letter_matrix(l),
                    _ => self.letter_matrix(&l.at_level(0)),
                };
                Some((mat, u32::from(l.level)))
            }
            _ => None,
        }
    }

    /// The Hopf suite: `Δ` on the minimal relations, coassociativity and
    /// counit on `h_{i,0}`, `x^±_{i,0}`, `h_{i,1}`, the antipode axiom on the
    /// minimal generators, and the cobracket of `h_{i,1}` against the current
    /// algebra.
    pub fn hopf_checks(&self) -> Result<Vec<RelationCheck>, YangianError> {
        self.hopf_available()?;
        let mut out = self.verify_coproduct(&RelationId::minimal())?;
        let check = |relation: &str, label: String, defect: Option<String>| RelationCheck {
            relation: relation.to_string(),
            label,
            holds: defect.is_none(),
            defect: defect.unwrap_or_default(),
        };
        for i in 0..self.rank() {
            for l in [YLetter::h(i, 0), YLetter::xp(i, 0), YLetter::xm(i, 0), YLetter::h(i, 1)] {
                let x = YElement::letter(l);
                let d = self.coassociativity_defect(&x)?;
                out.push(check("coassociativity", l.to_string(), (!d.is_zero()).then(|| self.render_tensor(&d))));
                let (right, left) = self.counit_defects(&x)?;
                let defect = (!right.is_zero() || !left.is_zero())
                    .then(|| format!("{} | {}", self.render(&right), self.render(&left)));
                out.push(check("counit", l.to_string(), defect));
            }
        }
        let mut letters = Vec::new();
        for i in 0..self.rank() {
            for r in 0..=1.min(self.cap()) {
                letters.extend([YLetter::h(i, r), YLetter::xp(i, r), YLetter::xm(i, r)]);
            }
        }
        for l in letters {
            for (left, side) in [(true, "S*id"), (false, "id*S")] {
                let d = self.antipode_contraction(&YElement::letter(l), left)?;
                out.push(check("antipode", format!("{l} {side}"), (!d.is_zero()).then(|| self.render(&d))));
            }
        }
        let bialg = Bialgebra::new(self.matrix_algebra());
        for i in 0..self.rank() {
            let l = YLetter::h(i, 1);
            let c = self.classical_cobracket(&YElement::letter(l))?;
            let defect = match self.to_loop_tensor(&c) {
                Some(t) if t == bialg.delta(self.matrix_algebra().h(i), 1) => None,
                Some(_) => Some("cobracket differs from the current algebra".to_string()),
                None => Some("cobracket is not a tensor of letters".to_string()),
            };
            out.push(check("quantization", l.to_string(), defect));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yangian::Caps;

    #[test]
    fn constraints_and_i_prime() {
        let y = Yangian::parse("EEO", Caps::new(2, 4)).unwrap();
        assert!(y.minimalistic_constraints().is_ok());
        assert_eq!(y.i_prime(1).unwrap(), 0);
        let y = Yangian::parse("EEOO", Caps::new(2, 4)).unwrap();
        assert!(y.minimalistic_constraints().is_err());
        assert!(y.coproduct_letter(YLetter::h(0, 0)).is_err());
        let y = Yangian::with_mode(&"EEOO".parse().unwrap(), Caps::new(2, 4), HopfMode::Assumed).unwrap();
        assert!(y.coproduct_letter(YLetter::h(0, 1)).is_ok());
        let y = Yangian::parse("EOEO", Caps::new(2, 4)).unwrap();
        assert!(y.minimalistic_constraints().is_err());
    }

    #[test]
    fn kappa_relates_letters_and_root_vectors() {
        let y = Yangian::parse("EEOO", Caps::new(1, 4)).unwrap();
        for r in y.root_system().positive_roots() {
            assert_eq!(y.kappa(Kind::Plus, r), Rational::one());
            assert!(!y.kappa(Kind::Minus, r).is_zero());
        }
    }

    #[test]
    fn primitive_generators() {
        let y = Yangian::parse("EEO", Caps::new(2, 4)).unwrap();
        let h = YElement::letter(YLetter::h(0, 0));
        assert_eq!(y.coproduct(&h).unwrap(), y.boxed(&h));
        assert_eq!(y.antipode(&h).unwrap(), h.scale(&-Rational::one()));
        assert!(y.antipode_contraction(&h, true).unwrap().is_zero());
        assert_eq!(y.counit(&YElement::one()), HPoly::one());
        assert!(y.counit(&YElement::letter(YLetter::h(0, 1))).is_zero());
    }
}
