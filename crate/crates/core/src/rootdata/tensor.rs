//! Tensor powers of the current and loop superalgebras, the Casimir element
//! and the two co-supercommutators.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{GlElem, SuperMatrixAlg};
use crate::exact::{ratio, sign, Rational};

/// The basis element `E_ab z^power` of `gl(m|n)[z, z⁻¹]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopUnit {
    /// Row index (0-based).
    pub a: usize,
    /// Column index (0-based).
    pub b: usize,
    /// Exponent of the loop variable.
    pub power: i32,
}

/// A linear combination of tensor products `u_1 ⊗ … ⊗ u_k` of [`LoopUnit`]s.
///
/// The loop variable of the `s`-th factor plays the role of the `s`-th
/// spectral variable (`u`, `v`, …).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LoopTensor {
    terms: BTreeMap<Vec<LoopUnit>, Rational>,
}

impl LoopTensor {
    /// The zero tensor.
    pub fn zero() -> Self {
        Self::default()
    }

    /// Nonzero terms.
    pub fn terms(&self) -> &BTreeMap<Vec<LoopUnit>, Rational> {
        &self.terms
    }

    /// True when every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c` times a basis tensor.
    pub fn add_term(&mut self, key: Vec<LoopUnit>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// The tensor `x_1 z^{p_1} ⊗ … ⊗ x_k z^{p_k}` expanded over matrix units.
    pub fn product(factors: &[(&GlElem, i32)]) -> Self {
        let mut keys: Vec<(Vec<LoopUnit>, Rational)> = vec![(Vec::new(), Rational::one())];
        for (x, p) in factors {
            let mut next = Vec::new();
            for (k, c) in &keys {
                for (&(a, b), cx) in x.entries() {
                    let mut k2 = k.clone();
                    k2.push(LoopUnit { a, b, power: *p });
                    next.push((k2, c * cx));
                }
            }
            keys = next;
        }
        let mut out = Self::zero();
        for (k, c) in keys {
            out.add_term(k, c);
        }
        out
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    /// Koszul-signed permutation of tensor factors: factor `s` moves to slot `perm[s]`.
    pub fn permute(&self, alg: &SuperMatrixAlg, perm: &[usize]) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let parities: Vec<u8> = k.iter().map(|u| alg.unit_parity(u.a, u.b)).collect();
            let mut s = 0u32;
            for x in 0..k.len() {
                for y in x + 1..k.len() {
                    if perm[x] > perm[y] {
                        s += u32::from(parities[x] & parities[y]);
                    }
                }
            }
            let mut key = k.clone();
            for (x, u) in k.iter().enumerate() {
                key[perm[x]] = *u;
            }
            out.add_term(key, sign(s) * c);
        }
        out
    }

    /// Flip of a two-fold tensor, `τ(a ⊗ b) = (−1)^{|a||b|} b ⊗ a`.
    pub fn tau(&self, alg: &SuperMatrixAlg) -> Self {
        self.permute(alg, &[1, 0])
    }

    /// `[1 ⊗ … ⊗ x z^p ⊗ … ⊗ 1, t]` with `x z^p` in the given slot.
    pub fn bracket_slot(&self, alg: &SuperMatrixAlg, x: &GlElem, p: i32, slot: usize) -> Self {
        let px = alg.parity(x).unwrap_or(0);
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let before: u32 = k[..slot].iter().map(|u| u32::from(alg.unit_parity(u.a, u.b))).sum();
            let s = sign(u32::from(px) * before);
            let t = GlElem::unit(k[slot].a, k[slot].b, Rational::one());
            let br = alg.bracket(x, &t);
            for (&(a, b), cb) in br.entries() {
                let mut key = k.clone();
                key[slot] = LoopUnit { a, b, power: k[slot].power + p };
                out.add_term(key, &s * c * cb);
            }
        }
        out
    }

    /// Adjoint action of `x z^p` on every factor, `[□x, t]`.
    pub fn act(&self, alg: &SuperMatrixAlg, x: &GlElem, p: i32) -> Self {
        let arity = self.terms.keys().next().map_or(0, |k| k.len());
        let mut out = Self::zero();
        for slot in 0..arity {
            out = out.add(&self.bracket_slot(alg, x, p, slot));
        }
        out
    }

    /// Applies an even linear map `F: g → g^{⊗r}` to one slot.
    pub fn map_slot(&self, slot: usize, f: &impl Fn(LoopUnit) -> LoopTensor) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let image = f(k[slot]);
            for (ik, ic) in image.terms() {
                let mut key: Vec<LoopUnit> = k[..slot].to_vec();
                key.extend(ik.iter().copied());
                key.extend(k[slot + 1..].iter().copied());
                out.add_term(key, c * ic);
            }
        }
        out
    }

    /// Multiplies a two-fold tensor by a Laurent polynomial `Σ c_{ij} u^i v^j`.
    pub fn mul_laurent(&self, poly: &Laurent2) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            for (&(i, j), pc) in &poly.0 {
                let mut key = k.clone();
                key[0].power += i;
                key[1].power += j;
                out.add_term(key, c * pc);
            }
        }
        out
    }

    /// True when every term has total parity zero.
    pub fn is_even(&self, alg: &SuperMatrixAlg) -> bool {
        self.terms.keys().all(|k| k.iter().map(|u| alg.unit_parity(u.a, u.b)).sum::<u8>() % 2 == 0)
    }
}

/// A Laurent polynomial in two variables `u, v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent2(pub BTreeMap<(i32, i32), Rational>);

impl Laurent2 {
    fn add_term(&mut self, e: (i32, i32), c: Rational) {
        let x = self.0.entry(e).or_insert_with(Rational::zero);
        *x += c;
        if x.is_zero() {
            self.0.remove(&e);
        }
    }

    /// `(u^m − v^m)/(u − v)` as a Laurent polynomial.
    pub fn difference_quotient(m: i32) -> Self {
        let mut out = Laurent2::default();
        if m > 0 {
            for k in 0..m {
                out.add_term((k, m - 1 - k), Rational::one());
            }
        } else if m < 0 {
            let p = -m;
            for k in 0..p {
                out.add_term((k - p, -1 - k), -Rational::one());
            }
        }
        out
    }

    /// Product with `u + v`.
    pub fn times_u_plus_v(&self) -> Self {
        let mut out = Laurent2::default();
        for (&(i, j), c) in &self.0 {
            out.add_term((i + 1, j), c.clone());
            out.add_term((i, j + 1), c.clone());
        }
        out
    }
}

/// Which co-supercommutator to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cobracket {
    /// `δ` on the polynomial current algebra.
    Current,
    /// `φ` on the loop algebra.
    Loop,
}

/// The Casimir element together with the co-supercommutators built from it.
#[derive(Clone, Debug)]
pub struct Bialgebra<'a> {
    alg: &'a SuperMatrixAlg,
    omega: LoopTensor,
    w: LoopTensor,
}

/// Summands of the Casimir element as pairs of matrices.
pub fn casimir_summands(alg: &SuperMatrixAlg) -> Vec<(GlElem, GlElem)> {
    let rs = alg.root_system();
    let mut out: Vec<(GlElem, GlElem)> = alg.cartan_pairs().to_vec();
    for r in rs.positive_roots() {
        let s = sign(u32::from(rs.parity(r)));
        out.push((alg.root_e(r).scale(&s), alg.root_f(r).clone()));
    }
    for r in rs.positive_roots() {
        out.push((alg.root_f(r).clone(), alg.root_e(r).clone()));
    }
    out
}

/// Summands of `w = Σ f_α ⊗ e_α − Σ (−1)^{|α|} e_α ⊗ f_α`.
pub fn w_summands(alg: &SuperMatrixAlg) -> Vec<(GlElem, GlElem)> {
    let rs = alg.root_system();
    let mut out = Vec::new();
    for r in rs.positive_roots() {
        out.push((alg.root_f(r).clone(), alg.root_e(r).clone()));
    }
    for r in rs.positive_roots() {
        let s = -sign(u32::from(rs.parity(r)));
        out.push((alg.root_e(r).scale(&s), alg.root_f(r).clone()));
    }
    out
}

fn sum_pairs(pairs: &[(GlElem, GlElem)]) -> LoopTensor {
    pairs.iter().fold(LoopTensor::zero(), |acc, (x, y)| acc.add(&LoopTensor::product(&[(x, 0), (y, 0)])))
}

impl<'a> Bialgebra<'a> {
    /// Precomputes `Ω` and `w`.
    pub fn new(alg: &'a SuperMatrixAlg) -> Self {
        Bialgebra { alg, omega: sum_pairs(&casimir_summands(alg)), w: sum_pairs(&w_summands(alg)) }
    }

    /// The underlying matrix algebra.
    pub fn alg(&self) -> &SuperMatrixAlg {
        self.alg
    }

    /// The Casimir element.
    pub fn omega(&self) -> &LoopTensor {
        &self.omega
    }

    /// The element `w`.
    pub fn w(&self) -> &LoopTensor {
        &self.w
    }

    /// `δ(x z^m) = [x ⊗ 1, Ω] (u^m − v^m)/(u − v)`.
    pub fn delta(&self, x: &GlElem, m: i32) -> LoopTensor {
        if m == 0 {
            return LoopTensor::zero();
        }
        self.omega.bracket_slot(self.alg, x, 0, 0).mul_laurent(&Laurent2::difference_quotient(m))
    }

    /// `φ(x z^m) = ½([x⊗1, Ω](u+v)(u^m − v^m)/(u − v) + [x u^m ⊗ 1 + 1 ⊗ x v^m, w])`.
    pub fn phi(&self, x: &GlElem, m: i32) -> LoopTensor {
        let first =
            self.omega.bracket_slot(self.alg, x, 0, 0).mul_laurent(&Laurent2::difference_quotient(m).times_u_plus_v());
        let second = self.w.bracket_slot(self.alg, x, m, 0).add(&self.w.bracket_slot(self.alg, x, m, 1));
        first.add(&second).scale(&ratio(1, 2))
    }

    /// Applies the chosen co-supercommutator to a basis element.
    pub fn cobracket_unit(&self, kind: Cobracket, u: LoopUnit) -> LoopTensor {
        let x = GlElem::unit(u.a, u.b, Rational::one());
        match kind {
            Cobracket::Current => self.delta(&x, u.power),
            Cobracket::Loop => self.phi(&x, u.power),
        }
    }

    /// Applies the chosen co-supercommutator to `x z^m`.
    pub fn cobracket(&self, kind: Cobracket, x: &GlElem, m: i32) -> LoopTensor {
        match kind {
            Cobracket::Current => self.delta(x, m),
            Cobracket::Loop => self.phi(x, m),
        }
    }

    /// `δ + τ∘δ` on `x z^m`; zero when co-antisymmetry holds.
    pub fn co_antisymmetry_defect(&self, kind: Cobracket, x: &GlElem, m: i32) -> LoopTensor {
        let d = self.cobracket(kind, x, m);
        d.add(&d.tau(self.alg))
    }

    /// `(δ⊗id)δ − (id⊗δ)δ − (id⊗τ)(δ⊗id)δ` on `x z^m`; zero when the co-Jacobi identity holds.
    pub fn co_jacobi_defect(&self, kind: Cobracket, x: &GlElem, m: i32) -> LoopTensor {
        let d = self.cobracket(kind, x, m);
        let f = |u: LoopUnit| self.cobracket_unit(kind, u);
        let left = d.map_slot(0, &f);
        let right = d.map_slot(1, &f);
        let swapped = left.permute(self.alg, &[0, 2, 1]);
        left.sub(&right).sub(&swapped)
    }

    /// `δ([x,y]) − x·δ(y) + (−1)^{|x||y|} y·δ(x)`; zero when the cocycle condition holds.
    pub fn cocycle_defect(&self, kind: Cobracket, x: (&GlElem, i32), y: (&GlElem, i32)) -> LoopTensor {
        let px = u32::from(self.alg.parity(x.0).unwrap_or(0));
        let py = u32::from(self.alg.parity(y.0).unwrap_or(0));
        let xy = self.alg.bracket(x.0, y.0);
        let lhs = self.cobracket(kind, &xy, x.1 + y.1);
        let t1 = self.cobracket(kind, y.0, y.1).act(self.alg, x.0, x.1);
        let t2 = self.cobracket(kind, x.0, x.1).act(self.alg, y.0, y.1).scale(&sign(px * py));
        lhs.sub(&t1).add(&t2)
    }

    /// `[□x, Ω]`; zero when the Casimir is invariant under `x`.
    pub fn invariance_defect(&self, x: &GlElem) -> LoopTensor {
        self.omega.act(self.alg, x, 0)
    }

    /// Casimir checks: `Ω` is even, `τ(Ω) = Ω`, and `[□x, Ω] = 0` for every Chevalley generator.
    pub fn casimir_checks(&self) -> Vec<(String, bool)> {
        let alg = self.alg;
        let mut out = vec![
            ("omega-even".to_string(), self.omega.is_even(alg)),
            ("omega-supersymmetric".to_string(), self.omega.tau(alg) == self.omega),
        ];
        for (name, x) in alg.chevalley_generators() {
            out.push((format!("[box {name}, omega]=0"), self.invariance_defect(&x).is_zero()));
        }
        out
    }

    /// Bialgebra axioms of the current cobracket on Chevalley generators times `z^m`, `0 ≤ m ≤ max_power`:
    /// co-antisymmetry, co-Jacobi and the cocycle condition.
    pub fn bialgebra_checks(&self, max_power: i32) -> Vec<(String, bool)> {
        let gens = self.alg.chevalley_generators();
        let mut out = Vec::new();
        for (nx, x) in &gens {
            for m in 0..=max_power {
                out.push((
                    format!("co-antisymmetry {nx} z^{m}"),
                    self.co_antisymmetry_defect(Cobracket::Current, x, m).is_zero(),
                ));
                out.push((format!("co-jacobi {nx} z^{m}"), self.co_jacobi_defect(Cobracket::Current, x, m).is_zero()));
                for (ny, y) in &gens {
                    for n in 0..=max_power {
                        out.push((
                            format!("cocycle {nx} z^{m}, {ny} z^{n}"),
                            self.cocycle_defect(Cobracket::Current, (x, m), (y, n)).is_zero(),
                        ));
                    }
                }
            }
        }
        out
    }
}
