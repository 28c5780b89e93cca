//! The universal enveloping superalgebra `U(g[t])` of the current algebra
//! (with `U(g)` as its level-zero part) in PBW normal form, Koszul-signed
//! tensor squares, and the half Casimir `Ω⁺`.
//!
//! PBW letters are ordered `f`-block, then `h`-block, then `e`-block; inside
//! a block by root (or Cartan index) and then by level.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{fmt_rational, sign, Rational};
use crate::rootdata::{GlElem, Root, RootDataError, SuperMatrixAlg};

/// Errors raised by the enveloping algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvelopingError {
    /// A matrix outside the span of the PBW letters.
    #[error(transparent)]
    RootData(#[from] RootDataError),
    /// A bracket of elements that are not homogeneous.
    #[error("element is not homogeneous")]
    Inhomogeneous,
}

/// Block of a PBW letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// Lowering root vectors `f_β`.
    F,
    /// Cartan elements `h_i` (and the extra diagonal letter when present).
    H,
    /// Raising root vectors `e_β`.
    E,
}

/// A PBW letter `x t^level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ULetter {
    /// Block.
    pub block: Block,
    /// Root index in the fixed order for `F`/`E`, Cartan index for `H`.
    pub idx: usize,
    /// Power of the current variable.
    pub level: u32,
}

/// An ordered PBW monomial.
pub type UMonomial = Vec<ULetter>;

/// A linear combination of PBW monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UEElement {
    terms: BTreeMap<UMonomial, Rational>,
}

impl UEElement {
    /// Zero.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit.
    pub fn one() -> Self {
        Self::monomial(Vec::new(), Rational::one())
    }

    /// `c` times a monomial (not normalized).
    pub fn monomial(m: UMonomial, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    /// A single letter.
    pub fn letter(l: ULetter) -> Self {
        Self::monomial(vec![l], Rational::one())
    }

    /// Nonzero terms.
    pub fn terms(&self) -> &BTreeMap<UMonomial, Rational> {
        &self.terms
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · m` in place.
    pub fn add_term(&mut self, m: UMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
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
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rational::zero)
    }
}

/// A linear combination of `a ⊗ b` for PBW monomials `a`, `b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2 {
    terms: BTreeMap<(UMonomial, UMonomial), Rational>,
}

impl Tensor2 {
    /// Zero.
    pub fn zero() -> Self {
        Self::default()
    }

    /// `a ⊗ b` for two elements.
    pub fn pure(a: &UEElement, b: &UEElement) -> Self {
        let mut out = Self::zero();
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                out.add_term(x.clone(), y.clone(), cx * cy);
            }
        }
        out
    }

    /// Nonzero terms.
    pub fn terms(&self) -> &BTreeMap<(UMonomial, UMonomial), Rational> {
        &self.terms
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · a ⊗ b` in place.
    pub fn add_term(&mut self, a: UMonomial, b: UMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
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
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), x * c);
        }
        out
    }
}

/// `U(g[t])` for one realization, with memoized straightening.
///
/// With the gl extension an additional Cartan letter `d = E_11` is present,
/// which turns the algebra into `U(gl(m|n)[t])`; it is needed for the half
/// Casimir when `m = n`.
#[derive(Debug)]
pub struct UEAlgebra {
    alg: SuperMatrixAlg,
    gl_extension: bool,
    memo: RwLock<HashMap<(UMonomial, ULetter), UEElement>>,
}

impl UEAlgebra {
    /// Builds the algebra; `gl_extension` adds the letter `d = E_11`.
    pub fn new(alg: SuperMatrixAlg, gl_extension: bool) -> Self {
        UEAlgebra { alg, gl_extension, memo: RwLock::new(HashMap::new()) }
    }

    /// Builds the algebra with the gl extension exactly when the Casimir needs it.
    pub fn for_casimir(alg: SuperMatrixAlg) -> Self {
        let ext = alg.uses_gl_cartan();
        Self::new(alg, ext)
    }

    /// The matrix realization.
    pub fn matrix_algebra(&self) -> &SuperMatrixAlg {
        &self.alg
    }

    /// Number of Cartan letters.
    pub fn cartan_letters(&self) -> usize {
        self.alg.rank() + usize::from(self.gl_extension)
    }

    /// The letter `f_β t^level`.
    pub fn f(&self, r: &Root, level: u32) -> ULetter {
        ULetter { block: Block::F, idx: self.alg.root_system().root_index(r), level }
    }

    /// The letter `e_β t^level`.
    pub fn e(&self, r: &Root, level: u32) -> ULetter {
        ULetter { block: Block::E, idx: self.alg.root_system().root_index(r), level }
    }

    /// The letter `h_i t^level`.
    pub fn h(&self, i: usize, level: u32) -> ULetter {
        ULetter { block: Block::H, idx: i, level }
    }

    /// Root of an `F`/`E` letter.
    pub fn root_of(&self, l: &ULetter) -> Root {
        self.alg.root_system().positive_roots()[l.idx]
    }

    /// Parity of a letter.
    pub fn letter_parity(&self, l: &ULetter) -> u8 {
        match l.block {
            Block::H => 0,
            _ => self.alg.root_system().parity(&self.root_of(l)),
        }
    }

    /// Parity of a monomial.
    pub fn monomial_parity(&self, m: &[ULetter]) -> u8 {
        m.iter().fold(0, |acc, l| acc ^ self.letter_parity(l))
    }

    /// Parity of a homogeneous element.
    pub fn parity(&self, x: &UEElement) -> Result<u8, EnvelopingError> {
        let mut it = x.terms().keys().map(|m| self.monomial_parity(m));
        let Some(first) = it.next() else { return Ok(0) };
        if it.all(|p| p == first) {
            Ok(first)
        } else {
            Err(EnvelopingError::Inhomogeneous)
        }
    }

    /// The matrix of a letter (its level is ignored).
    pub fn letter_matrix(&self, l: &ULetter) -> GlElem {
        match l.block {
            Block::F => self.alg.root_f(&self.root_of(l)).clone(),
            Block::E => self.alg.root_e(&self.root_of(l)).clone(),
            Block::H if l.idx == self.alg.rank() => GlElem::unit(0, 0, Rational::one()),
            Block::H => self.alg.h(l.idx).clone(),
        }
    }

    /// Writes a matrix at the given level as a combination of letters.
    pub fn from_matrix(&self, x: &GlElem, level: u32) -> Result<UEElement, EnvelopingError> {
        let mut x = x.clone();
        let mut out = UEElement::zero();
        if self.gl_extension {
            let str_x = self.alg.supertrace(&x);
            if !str_x.is_zero() {
                let c = str_x * sign(u32::from(self.alg.root_system().diagram().parity(0)));
                out.add_term(vec![self.h(self.alg.rank(), level)], c.clone());
                x = x.sub(&GlElem::unit(0, 0, c));
            }
        }
        let d = self.alg.decompose(&x)?;
        for (i, c) in d.cartan.into_iter().enumerate() {
            out.add_term(vec![self.h(i, level)], c);
        }
        for (r, c) in d.e {
            out.add_term(vec![self.e(&r, level)], c);
        }
        for (r, c) in d.f {
            out.add_term(vec![self.f(&r, level)], c);
        }
        Ok(out)
    }

    /// Bracket of two letters, a linear combination of letters.
    pub fn letter_bracket(&self, a: &ULetter, b: &ULetter) -> UEElement {
        let m = self.alg.bracket(&self.letter_matrix(a), &self.letter_matrix(b));
        self.from_matrix(&m, a.level + b.level).expect("brackets stay in the algebra")
    }

    /// Normal form of `m · x` for a PBW monomial `m` and a letter `x`.
    fn monomial_times_letter(&self, m: &[ULetter], x: ULetter) -> UEElement {
        let Some(&y) = m.last() else { return UEElement::letter(x) };
        if y < x || (y == x && self.letter_parity(&x) == 0) {
            let mut w = m.to_vec();
            w.push(x);
            return UEElement::monomial(w, Rational::one());
        }
        if y == x {
            // Odd letters square to half their bracket, which vanishes for root vectors.
            return UEElement::zero();
        }
        let key = (m.to_vec(), x);
        if let Some(v) = self.memo.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let prefix = &m[..m.len() - 1];
        let s = sign(u32::from(self.letter_parity(&x) & self.letter_parity(&y)));
        let swapped = self.mul_letter(&self.monomial_times_letter(prefix, x), y).scale(&s);
        let corr = self.mul(&UEElement::monomial(prefix.to_vec(), Rational::one()), &self.letter_bracket(&y, &x));
        let out = swapped.add(&corr);
        self.memo.write().expect("memo lock").insert(key, out.clone());
        out
    }

    /// Normal form of `a · x`.
    pub fn mul_letter(&self, a: &UEElement, x: ULetter) -> UEElement {
        let mut out = UEElement::zero();
        for (m, c) in a.terms() {
            for (m2, c2) in self.monomial_times_letter(m, x).terms {
                out.add_term(m2, c * c2);
            }
        }
        out
    }

    /// Normal form of a product.
    pub fn mul(&self, a: &UEElement, b: &UEElement) -> UEElement {
        let mut out = UEElement::zero();
        for (m, c) in b.terms() {
            let mut acc = a.clone();
            for &l in m {
                acc = self.mul_letter(&acc, l);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Normal form of a word of letters.
    pub fn normal_form(&self, word: &[ULetter]) -> UEElement {
        word.iter().fold(UEElement::one(), |acc, &l| self.mul_letter(&acc, l))
    }

    /// Brings an arbitrary combination (whose monomials may be unordered words) to normal form.
    pub fn normalize(&self, x: &UEElement) -> UEElement {
        let mut out = UEElement::zero();
        for (m, c) in x.terms() {
            out = out.add(&self.normal_form(m).scale(c));
        }
        out
    }

    /// Super commutator `[x, y] = xy − (−1)^{|x||y|} yx` of homogeneous elements.
    pub fn supercommutator(&self, x: &UEElement, y: &UEElement) -> Result<UEElement, EnvelopingError> {
        self.v_bracket(x, y, &Rational::one())
    }

    /// Anticommutator `{x, y} = xy + (−1)^{|x||y|} yx` of homogeneous elements.
    pub fn anticommutator(&self, x: &UEElement, y: &UEElement) -> Result<UEElement, EnvelopingError> {
        self.v_bracket(x, y, &-Rational::one())
    }

    /// `[x, y]_v = xy − (−1)^{|x||y|} v yx` of homogeneous elements.
    pub fn v_bracket(&self, x: &UEElement, y: &UEElement, v: &Rational) -> Result<UEElement, EnvelopingError> {
        let s = sign(u32::from(self.parity(x)? & self.parity(y)?));
        Ok(self.mul(x, y).sub(&self.mul(y, x).scale(&(s * v))))
    }

    /// Parity of a homogeneous tensor.
    pub fn tensor_parity(&self, t: &Tensor2) -> Result<u8, EnvelopingError> {
        let mut it = t.terms().keys().map(|(a, b)| self.monomial_parity(a) ^ self.monomial_parity(b));
        let Some(first) = it.next() else { return Ok(0) };
        if it.all(|p| p == first) {
            Ok(first)
        } else {
            Err(EnvelopingError::Inhomogeneous)
        }
    }

    /// Koszul-signed product `(x⊗y)(x'⊗y') = (−1)^{|y||x'|} xx' ⊗ yy'`.
    pub fn tensor_mul(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((x, y), c) in a.terms() {
            for ((x2, y2), c2) in b.terms() {
                let s = sign(u32::from(self.monomial_parity(y) & self.monomial_parity(x2)));
                let left = self.normal_form(&[x.as_slice(), x2.as_slice()].concat());
                let right = self.normal_form(&[y.as_slice(), y2.as_slice()].concat());
                let coeff = s * c * c2;
                for (l, cl) in left.terms() {
                    for (r, cr) in right.terms() {
                        out.add_term(l.clone(), r.clone(), &coeff * cl * cr);
                    }
                }
            }
        }
        out
    }

    /// Super commutator of homogeneous tensors.
    pub fn tensor_bracket(&self, a: &Tensor2, b: &Tensor2) -> Result<Tensor2, EnvelopingError> {
        let s = sign(u32::from(self.tensor_parity(a)? & self.tensor_parity(b)?));
        Ok(self.tensor_mul(a, b).sub(&self.tensor_mul(b, a).scale(&s)))
    }

    /// `τ(a ⊗ b) = (−1)^{|a||b|} b ⊗ a`.
    pub fn tau(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a, b), c) in t.terms() {
            let s = sign(u32::from(self.monomial_parity(a) & self.monomial_parity(b)));
            out.add_term(b.clone(), a.clone(), s * c);
        }
        out
    }

    /// `□(x) = x ⊗ 1 + 1 ⊗ x`.
    pub fn boxed(&self, x: &UEElement) -> Tensor2 {
        Tensor2::pure(x, &UEElement::one()).add(&Tensor2::pure(&UEElement::one(), x))
    }

    fn cartan_tensor(&self) -> Result<Tensor2, EnvelopingError> {
        let mut out = Tensor2::zero();
        for (dual, h) in self.alg.cartan_pairs() {
            out = out.add(&Tensor2::pure(&self.from_matrix(dual, 0)?, &self.from_matrix(h, 0)?));
        }
        Ok(out)
    }

    /// The half Casimir `Ω⁺ = Σ h^k ⊗ h_k + Σ f_α ⊗ e_α`.
    pub fn omega_plus(&self) -> Result<Tensor2, EnvelopingError> {
        let mut out = self.cartan_tensor()?;
        for r in self.alg.root_system().positive_roots() {
            out = out.add(&Tensor2::pure(&UEElement::letter(self.f(r, 0)), &UEElement::letter(self.e(r, 0))));
        }
        Ok(out)
    }

    /// The three brackets of `□` applied to simple generators with `Ω⁺`:
    /// `[□h_i, Ω⁺] = 0`, `[□e_i, Ω⁺] = −e_i ⊗ h_i`, `[□f_i, Ω⁺] = h_i ⊗ f_i`.
    pub fn omega_plus_checks(&self) -> Result<Vec<(String, bool)>, EnvelopingError> {
        let op = self.omega_plus()?;
        let mut out = Vec::new();
        for i in 0..self.alg.rank() {
            let h = UEElement::letter(self.h(i, 0));
            let e = UEElement::letter(self.e(&Root::simple(i), 0));
            let f = UEElement::letter(self.f(&Root::simple(i), 0));
            let minus_one = -Rational::one();
            out.push((format!("[box h{}, omega+]=0", i + 1), self.tensor_bracket(&self.boxed(&h), &op)?.is_zero()));
            out.push((
                format!("[box e{0}, omega+]=-e{0}(x)h{0}", i + 1),
                self.tensor_bracket(&self.boxed(&e), &op)? == Tensor2::pure(&e, &h).scale(&minus_one),
            ));
            out.push((
                format!("[box f{0}, omega+]=h{0}(x)f{0}", i + 1),
                self.tensor_bracket(&self.boxed(&f), &op)? == Tensor2::pure(&h, &f),
            ));
        }
        Ok(out)
    }

    /// The Casimir `Ω` written in PBW letters.
    pub fn omega(&self) -> Result<Tensor2, EnvelopingError> {
        let mut out = self.cartan_tensor()?;
        let rs = self.alg.root_system();
        for r in rs.positive_roots() {
            let e = UEElement::letter(self.e(r, 0));
            let f = UEElement::letter(self.f(r, 0));
            out = out.add(&Tensor2::pure(&e, &f).scale(&sign(u32::from(rs.parity(r)))));
            out = out.add(&Tensor2::pure(&f, &e));
        }
        Ok(out)
    }

    /// The Cartan part `Σ h^k ⊗ h_k` of the Casimir in PBW letters.
    pub fn omega_cartan(&self) -> Result<Tensor2, EnvelopingError> {
        self.cartan_tensor()
    }

    /// Renders a letter, e.g. `f[1..2]`, `h[1]`, `e[2,1]` (level shown when nonzero).
    pub fn render_letter(&self, l: &ULetter) -> String {
        let (name, body) = match l.block {
            Block::F => ("f", self.root_of(l).to_string()),
            Block::E => ("e", self.root_of(l).to_string()),
            Block::H if l.idx == self.alg.rank() => ("d", String::new()),
            Block::H => ("h", (l.idx + 1).to_string()),
        };
        match (body.is_empty(), l.level) {
            (true, 0) => name.to_string(),
            (true, k) => format!("{name}[{k}]"),
            (false, 0) => format!("{name}[{body}]"),
            (false, k) => format!("{name}[{body},{k}]"),
        }
    }

    /// Renders an element in canonical text form.
    pub fn render(&self, x: &UEElement) -> String {
        render_terms(x.terms().iter().map(|(m, c)| (self.render_monomial(m), c)))
    }

    /// Renders a tensor in canonical text form.
    pub fn render_tensor(&self, t: &Tensor2) -> String {
        render_terms(
            t.terms()
                .iter()
                .map(|((a, b), c)| (format!("({}) ⊗ ({})", self.render_monomial(a), self.render_monomial(b)), c)),
        )
    }

    fn render_monomial(&self, m: &[ULetter]) -> String {
        if m.is_empty() {
            "1".to_string()
        } else {
            m.iter().map(|l| self.render_letter(l)).collect::<Vec<_>>().join(" ")
        }
    }
}

/// Joins `coefficient · body` terms with signs.
pub(crate) fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a Rational)>) -> String {
    let mut out = String::new();
    for (body, c) in terms {
        let neg = c < &Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{} {}", fmt_rational(&abs), body));
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

impl fmt::Display for ULetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}@{}", self.block, self.idx, self.level)
    }
}
