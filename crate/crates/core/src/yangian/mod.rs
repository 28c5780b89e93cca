//! The Drinfeld super Yangian truncated at a finite ℕ₀-degree.
//!
//! Elements are written in the PBW basis: an `x⁻` block, then an `h` block,
//! then an `x⁺` block, each ordered by root and then by level. The composite
//! letters are `x^±_{[lo..hi],r} = [...[x^±_{lo,r}, x^±_{lo+1,0}], ..., x^±_{hi,0}]`.
//! The degree of `ħ^k` times a monomial is `k` plus the sum of the levels;
//! everything of degree above the cap is dropped, which is exact because
//! those terms span a two-sided ideal.
//!
//! Straightening swaps adjacent letters. Brackets of a Cartan letter with a
//! root letter, and of `x⁺` with `x⁻`, follow from the defining relations
//! and the super Jacobi identity. Products of two letters of the same sign
//! are computed once per weight and degree by exact linear algebra on words
//! in the simple generators ([`cells`]), and every such computation is
//! certified by comparing the quotient dimension with the PBW count.

mod cells;
mod hopf;
mod pbw;
mod relations;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::enveloping::render_terms;
use crate::exact::{rat, ratio, sign, HPoly, Rational};
use crate::rootdata::{ParityDiagram, Root, RootDataError, RootSystem, SuperMatrixAlg};

pub use hopf::{minimalistic_violation, odd_vertex_violation, HopfMode};
pub use pbw::{pbw_generating_count, CellReport, GradedCount};
pub use relations::{CoproductEvaluator, Evaluator, Expr, Relation, RelationCheck, RelationId};

use cells::{Cell, CellData};

/// Errors raised by the Yangian module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YangianError {
    /// The degree cap must be positive.
    #[error("the degree cap must be at least 1")]
    ZeroCap,
    /// A generator string could not be parsed or names a missing root.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    /// A level or degree above the truncation cap.
    #[error("level {level} exceeds the degree cap {cap}")]
    OutOfCap {
        /// Requested level.
        level: u32,
        /// Degree cap.
        cap: u32,
    },
    /// The diagram is outside the range where the coproduct is defined.
    #[error("diagram {diagram}: {reason}")]
    Constraint {
        /// Diagram in E/O notation.
        diagram: String,
        /// Which constraint fails.
        reason: String,
    },
    /// The requested relation does not apply to the given indices.
    #[error("relation {0} does not apply to these indices")]
    Inapplicable(String),
    /// A homogeneous component failed the PBW dimension check.
    #[error("weight {weight:?}, degree {degree}: quotient dimension {found} but PBW count {expected}")]
    Certification {
        /// Weight in simple-root coordinates.
        weight: Vec<u8>,
        /// ℕ₀-degree.
        degree: u32,
        /// Dimension of the quotient by the relations.
        found: usize,
        /// Number of ordered PBW monomials.
        expected: usize,
    },
    /// An element that is not homogeneous where a parity was needed.
    #[error("element is not homogeneous")]
    Inhomogeneous,
    /// Invalid root data.
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Block of a PBW letter; the derived order is the PBW block order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Kind {
    /// Lowering letters `x⁻`.
    Minus,
    /// Cartan letters `h`.
    Cartan,
    /// Raising letters `x⁺`.
    Plus,
}

impl Kind {
    /// `+1` for `x⁺`, `−1` for `x⁻`, `0` for `h`.
    pub fn sign(self) -> i64 {
        match self {
            Kind::Minus => -1,
            Kind::Cartan => 0,
            Kind::Plus => 1,
        }
    }
}

/// A PBW letter: `x^±_{[lo..hi], level}` or `h_{lo, level}` (with `lo = hi`).
///
/// Indices are 0-based simple-root indices. The derived order is the PBW
/// order: block, then root, then level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YLetter {
    /// Block.
    pub kind: Kind,
    /// First simple index of the root.
    pub lo: u8,
    /// Last simple index of the root.
    pub hi: u8,
    /// Level `r` (the power of the loop variable).
    pub level: u8,
}

impl YLetter {
    /// `h_{i,r}`.
    pub fn h(i: usize, r: u32) -> Self {
        YLetter { kind: Kind::Cartan, lo: i as u8, hi: i as u8, level: r as u8 }
    }

    /// `x⁺_{i,r}`.
    pub fn xp(i: usize, r: u32) -> Self {
        Self::x(Kind::Plus, &Root::simple(i), r)
    }

    /// `x⁻_{i,r}`.
    pub fn xm(i: usize, r: u32) -> Self {
        Self::x(Kind::Minus, &Root::simple(i), r)
    }

    /// `x^±_{β,r}` for a positive root.
    pub fn x(kind: Kind, root: &Root, r: u32) -> Self {
        YLetter { kind, lo: root.lo as u8, hi: root.hi as u8, level: r as u8 }
    }

    /// Root of a root letter.
    pub fn root(&self) -> Root {
        Root::interval(self.lo as usize, self.hi as usize)
    }

    /// True for simple generators `h_{i,r}`, `x^±_{i,r}`.
    pub fn is_simple(&self) -> bool {
        self.lo == self.hi
    }

    /// The same letter at another level.
    pub fn at_level(&self, r: u32) -> Self {
        YLetter { level: r as u8, ..*self }
    }

    /// For a composite root letter, the decomposition `[A, y]` of its definition.
    pub fn split(&self) -> Option<(YLetter, YLetter)> {
        if self.kind == Kind::Cartan || self.lo == self.hi {
            return None;
        }
        let a = YLetter { hi: self.hi - 1, ..*self };
        let y = YLetter { lo: self.hi, hi: self.hi, level: 0, kind: self.kind };
        Some((a, y))
    }
}

impl fmt::Display for YLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            Kind::Minus => "x-",
            Kind::Cartan => "h",
            Kind::Plus => "x+",
        };
        write!(f, "{name}[{},{}]", self.root(), self.level)
    }
}

impl FromStr for YLetter {
    type Err = YangianError;

    /// Parses `h:i:r`, `x+:i:r`, `x-:i:r` or `x±:lo..hi:r` with 1-based indices.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || YangianError::UnknownGenerator(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        let [kind, root, level] = parts[..] else { return Err(bad()) };
        let kind = match kind {
            "h" => Kind::Cartan,
            "x+" | "e" => Kind::Plus,
            "x-" | "f" => Kind::Minus,
            _ => return Err(bad()),
        };
        let level: u8 = level.parse().map_err(|_| bad())?;
        let (lo, hi) = match root.split_once("..") {
            Some((a, b)) => (a.parse::<u8>().map_err(|_| bad())?, b.parse::<u8>().map_err(|_| bad())?),
            None => {
                let i = root.parse::<u8>().map_err(|_| bad())?;
                (i, i)
            }
        };
        if lo == 0 || hi < lo || (kind == Kind::Cartan && lo != hi) {
            return Err(bad());
        }
        Ok(YLetter { kind, lo: lo - 1, hi: hi - 1, level })
    }
}

impl Serialize for YLetter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A PBW monomial.
pub type YMonomial = Vec<YLetter>;

/// Sum of the levels of a monomial.
pub fn monomial_levels(m: &[YLetter]) -> u32 {
    m.iter().map(|l| u32::from(l.level)).sum()
}

/// A linear combination of PBW monomials with coefficients in `ℚ[ħ]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YElement {
    terms: BTreeMap<YMonomial, HPoly>,
}

impl YElement {
    /// Zero.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit.
    pub fn one() -> Self {
        Self::scalar(HPoly::one())
    }

    /// A scalar in `ℚ[ħ]`.
    pub fn scalar(c: HPoly) -> Self {
        Self::monomial(Vec::new(), c)
    }

    /// `c · m` (the monomial is stored as given).
    pub fn monomial(m: YMonomial, c: HPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    /// A single letter.
    pub fn letter(l: YLetter) -> Self {
        Self::monomial(vec![l], HPoly::one())
    }

    /// Nonzero terms.
    pub fn terms(&self) -> &BTreeMap<YMonomial, HPoly> {
        &self.terms
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · m` in place.
    pub fn add_term(&mut self, m: YMonomial, c: HPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// In-place sum.
    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Rational multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.scale(c));
        }
        out
    }

    /// Multiple by a polynomial in ħ, truncated at total degree `cap`.
    pub fn scale_poly(&self, c: &HPoly, cap: u32) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            let lv = monomial_levels(m);
            if lv <= cap {
                out.add_term(m.clone(), x.mul_trunc(c, (cap - lv) as usize));
            }
        }
        out
    }

    /// The substitution `ħ ↦ −ħ`.
    pub fn flip_hbar(&self) -> Self {
        YElement { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.flip())).collect() }
    }

    /// Value at `ħ = 0`.
    pub fn at_hbar_zero(&self) -> BTreeMap<YMonomial, Rational> {
        self.terms.iter().filter(|(_, c)| !c.at_zero().is_zero()).map(|(m, c)| (m.clone(), c.at_zero())).collect()
    }

    /// Coefficient of `ħ^k`, as an element with rational coefficients.
    pub fn hbar_coefficient(&self, k: usize) -> BTreeMap<YMonomial, Rational> {
        self.terms.iter().filter(|(_, c)| !c.coeff(k).is_zero()).map(|(m, c)| (m.clone(), c.coeff(k))).collect()
    }

    /// Drops monomials longer than `len`.
    pub fn project_length(&self, len: usize) -> Self {
        YElement {
            terms: self.terms.iter().filter(|(m, _)| m.len() <= len).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, c)| monomial_levels(m) + c.degree().unwrap_or(0) as u32).max()
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> HPoly {
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }
}

/// A linear combination of tensor products of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YTensor {
    arity: usize,
    terms: BTreeMap<Vec<YMonomial>, HPoly>,
}

impl YTensor {
    /// Zero in the given tensor power.
    pub fn zero(arity: usize) -> Self {
        YTensor { arity, terms: BTreeMap::new() }
    }

    /// Number of tensor factors.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Nonzero terms.
    pub fn terms(&self) -> &BTreeMap<Vec<YMonomial>, HPoly> {
        &self.terms
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · (m_1 ⊗ … ⊗ m_n)` in place.
    pub fn add_term(&mut self, key: Vec<YMonomial>, c: HPoly) {
        debug_assert_eq!(key.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
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

    /// Rational multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.arity);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.scale(c));
        }
        out
    }

    /// Drops terms with a factor longer than `len`.
    pub fn project_length(&self, len: usize) -> Self {
        YTensor {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.iter().all(|m| m.len() <= len))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `ħ^k` with rational coefficients.
    pub fn hbar_coefficient(&self, k: usize) -> BTreeMap<Vec<YMonomial>, Rational> {
        self.terms.iter().filter(|(_, c)| !c.coeff(k).is_zero()).map(|(m, c)| (m.clone(), c.coeff(k))).collect()
    }
}

/// Degree and length caps of a truncated Yangian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// ℕ₀-degree cap `N`: terms of degree above `N` vanish.
    pub degree: u32,
    /// Length cap `L`, applied as a final projection of reported results.
    pub length: usize,
}

impl Caps {
    /// Caps `(N, L)`.
    pub fn new(degree: u32, length: usize) -> Self {
        Caps { degree, length }
    }
}

type Memo<K, V> = RwLock<HashMap<K, V>>;

fn memo_get<K: std::hash::Hash + Eq, V: Clone>(m: &Memo<K, V>, k: &K) -> Option<V> {
    m.read().expect("memo lock").get(k).cloned()
}

fn memo_put<K: std::hash::Hash + Eq, V>(m: &Memo<K, V>, k: K, v: V) {
    m.write().expect("memo lock").insert(k, v);
}

/// The truncated Drinfeld super Yangian of one parity diagram.
///
/// All caches are synchronized, so one instance can be shared across threads.
#[derive(Debug)]
pub struct Yangian {
    alg: SuperMatrixAlg,
    caps: Caps,
    hopf_mode: HopfMode,
    cell_data: CellData,
    cells: Memo<(Vec<u8>, u32), Arc<Cell>>,
    pairs: Memo<(YLetter, YLetter), YElement>,
    inserts: Memo<(YMonomial, YLetter), YElement>,
    brackets: Memo<(YLetter, YLetter), YElement>,
    hopf_cache: hopf::HopfCache,
}

impl Yangian {
    /// Builds the truncated Yangian of a diagram with the given caps.
    pub fn new(diagram: &ParityDiagram, caps: Caps) -> Result<Self, YangianError> {
        Self::with_mode(diagram, caps, HopfMode::Constrained)
    }

    /// Builds the truncated Yangian and chooses how the coproduct treats excluded diagrams.
    pub fn with_mode(diagram: &ParityDiagram, caps: Caps, hopf_mode: HopfMode) -> Result<Self, YangianError> {
        if caps.degree == 0 {
            return Err(YangianError::ZeroCap);
        }
        let rs = RootSystem::new(diagram.clone());
        let cell_data = CellData { parity: rs.diagram().simple_root_parities(), cartan: rs.cartan().to_vec() };
        let alg = SuperMatrixAlg::new(rs)?;
        Ok(Yangian {
            alg,
            caps,
            hopf_mode,
            cell_data,
            cells: RwLock::new(HashMap::new()),
            pairs: RwLock::new(HashMap::new()),
            inserts: RwLock::new(HashMap::new()),
            brackets: RwLock::new(HashMap::new()),
            hopf_cache: hopf::HopfCache::default(),
        })
    }

    /// Parses the diagram and builds the truncated Yangian.
    pub fn parse(diagram: &str, caps: Caps) -> Result<Self, YangianError> {
        Self::new(&diagram.parse()?, caps)
    }

    /// The root system.
    pub fn root_system(&self) -> &RootSystem {
        self.alg.root_system()
    }

    /// The matrix realization of the underlying Lie superalgebra.
    pub fn matrix_algebra(&self) -> &SuperMatrixAlg {
        &self.alg
    }

    /// The parity diagram.
    pub fn diagram(&self) -> &ParityDiagram {
        self.root_system().diagram()
    }

    /// Rank `|I|`.
    pub fn rank(&self) -> usize {
        self.root_system().rank()
    }

    /// Truncation caps.
    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// Degree cap `N`.
    pub fn cap(&self) -> u32 {
        self.caps.degree
    }

    /// `c_{ij} = (α_i, α_j)`.
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.root_system().c(i, j)
    }

    /// Parity of a letter.
    pub fn letter_parity(&self, l: &YLetter) -> u8 {
        match l.kind {
            Kind::Cartan => 0,
            _ => self.cell_data.letter_parity((l.lo, l.hi, l.level)),
        }
    }

    /// Parity of a monomial.
    pub fn monomial_parity(&self, m: &[YLetter]) -> u8 {
        m.iter().fold(0, |acc, l| acc ^ self.letter_parity(l))
    }

    /// Parity of a homogeneous element (zero counts as even).
    pub fn parity(&self, x: &YElement) -> Result<u8, YangianError> {
        let mut it = x.terms().keys().map(|m| self.monomial_parity(m));
        let Some(first) = it.next() else { return Ok(0) };
        if it.all(|p| p == first) {
            Ok(first)
        } else {
            Err(YangianError::Inhomogeneous)
        }
    }

    /// Checks that a letter exists in this diagram and fits the degree cap.
    pub fn check_letter(&self, l: &YLetter) -> Result<(), YangianError> {
        if usize::from(l.hi) >= self.rank() || l.lo > l.hi {
            return Err(YangianError::UnknownGenerator(l.to_string()));
        }
        if u32::from(l.level) > self.cap() {
            return Err(YangianError::OutOfCap { level: u32::from(l.level), cap: self.cap() });
        }
        Ok(())
    }

    fn fits(&self, levels: u32) -> bool {
        levels <= self.cap()
    }

    /// Product of two elements in PBW normal form.
    pub fn mul(&self, a: &YElement, b: &YElement) -> YElement {
        let mut out = YElement::zero();
        for (m, c) in b.terms() {
            let mut acc = a.clone();
            for &l in m {
                if acc.is_zero() {
                    break;
                }
                acc = self.mul_letter(&acc, l);
            }
            out.add_assign(&acc.scale_poly(c, self.cap()));
        }
        out
    }

    /// Product of an element with a letter on the right.
    pub fn mul_letter(&self, a: &YElement, x: YLetter) -> YElement {
        let mut out = YElement::zero();
        for (m, c) in a.terms() {
            let base = monomial_levels(m) + u32::from(x.level);
            if base + c.valuation().unwrap_or(0) as u32 > self.cap() {
                continue;
            }
            for (m2, c2) in self.monomial_times_letter(m, x).terms {
                let lv = monomial_levels(&m2);
                out.add_term(m2, c.mul_trunc(&c2, (self.cap() - lv) as usize));
            }
        }
        out
    }

    /// Normal form of a word of letters.
    pub fn normal_form(&self, word: &[YLetter]) -> YElement {
        word.iter().fold(YElement::one(), |acc, &l| self.mul_letter(&acc, l))
    }

    /// Normal form of a combination whose monomials may be unordered words.
    pub fn normalize(&self, x: &YElement) -> YElement {
        let mut out = YElement::zero();
        for (m, c) in x.terms() {
            out.add_assign(&self.normal_form(m).scale_poly(c, self.cap()));
        }
        out
    }

    fn monomial_times_letter(&self, m: &[YLetter], x: YLetter) -> YElement {
        if !self.fits(monomial_levels(m) + u32::from(x.level)) {
            return YElement::zero();
        }
        let Some(&y) = m.last() else { return YElement::letter(x) };
        if y < x || (y == x && self.letter_parity(&x) == 0) {
            let mut w = m.to_vec();
            w.push(x);
            return YElement::monomial(w, HPoly::one());
        }
        let key = (m.to_vec(), x);
        if let Some(v) = memo_get(&self.inserts, &key) {
            return v;
        }
        let prefix = YElement::monomial(m[..m.len() - 1].to_vec(), HPoly::one());
        let out = self.mul(&prefix, &self.pair(y, x));
        memo_put(&self.inserts, key, out.clone());
        out
    }

    /// Normal form of `y · x` for letters with `y ≥ x`.
    fn pair(&self, y: YLetter, x: YLetter) -> YElement {
        if let Some(v) = memo_get(&self.pairs, &(y, x)) {
            return v;
        }
        let out = if y.kind == x.kind && y.kind != Kind::Cartan {
            self.cell_product(y, x)
        } else {
            let s = sign(u32::from(self.letter_parity(&x) & self.letter_parity(&y)));
            let swapped = YElement::monomial(vec![x, y], HPoly::constant(s));
            swapped.add(&self.letter_bracket(y, x))
        };
        memo_put(&self.pairs, (y, x), out.clone());
        out
    }

    /// The certified cell of the positive half with the given weight and degree.
    pub(crate) fn cell(&self, weight: &[u8], degree: u32) -> Result<Arc<Cell>, YangianError> {
        let key = (weight.to_vec(), degree);
        if let Some(c) = memo_get(&self.cells, &key) {
            return Ok(c);
        }
        let cell = Cell::build(&self.cell_data, weight, degree).map_err(|f| YangianError::Certification {
            weight: weight.to_vec(),
            degree,
            found: f.quotient_dimension,
            expected: f.pbw_count,
        })?;
        let cell = Arc::new(cell);
        memo_put(&self.cells, key, cell.clone());
        Ok(cell)
    }

    /// Certifies one homogeneous component of the positive half and returns
    /// `(number of spanning words, quotient dimension)`.
    pub fn certify_cell(&self, weight: &[u8], degree: u32) -> Result<(usize, usize), YangianError> {
        let c = self.cell(weight, degree)?;
        Ok((c.word_count(), c.dimension()))
    }

    /// Product of two root letters of the same sign through the certified cells.
    ///
    /// The negative half is the image of the positive half under
    /// `x⁺_{i,r} ↦ x⁻_{i,r}`, `ħ ↦ −ħ`.
    fn cell_product(&self, y: YLetter, x: YLetter) -> YElement {
        let mut weight = vec![0u8; self.rank()];
        for l in [y, x] {
            for k in l.lo..=l.hi {
                weight[k as usize] += 1;
            }
        }
        let degree = u32::from(y.level) + u32::from(x.level);
        let cell = self.cell(&weight, degree).unwrap_or_else(|e| panic!("straightening is not certified: {e}"));
        let v = cells::product(
            &self.cell_data.expand_letter((y.lo, y.hi, y.level)),
            &self.cell_data.expand_letter((x.lo, x.hi, x.level)),
        );
        let mut out = YElement::zero();
        for (k, m, c) in cell.reduce(&v) {
            let mono = m.into_iter().map(|(lo, hi, r)| YLetter { kind: y.kind, lo, hi, level: r }).collect();
            out.add_term(mono, HPoly::monomial(c, k as usize));
        }
        if y.kind == Kind::Minus {
            out.flip_hbar()
        } else {
            out
        }
    }

    /// Supercommutator of homogeneous elements with known parities.
    pub fn bracket_with(&self, a: &YElement, pa: u8, b: &YElement, pb: u8) -> YElement {
        let s = sign(u32::from(pa & pb));
        self.mul(a, b).sub(&self.mul(b, a).scale(&s))
    }

    /// Anticommutator of homogeneous elements with known parities.
    pub fn anticommutator_with(&self, a: &YElement, pa: u8, b: &YElement, pb: u8) -> YElement {
        let s = sign(u32::from(pa & pb));
        self.mul(a, b).add(&self.mul(b, a).scale(&s))
    }

    /// Supercommutator `[a, b]` of homogeneous elements.
    pub fn supercommutator(&self, a: &YElement, b: &YElement) -> Result<YElement, YangianError> {
        Ok(self.bracket_with(a, self.parity(a)?, b, self.parity(b)?))
    }

    /// Anticommutator `{a, b}` of homogeneous elements.
    pub fn anticommutator(&self, a: &YElement, b: &YElement) -> Result<YElement, YangianError> {
        Ok(self.anticommutator_with(a, self.parity(a)?, b, self.parity(b)?))
    }

    fn letter_elem(&self, l: YLetter) -> YElement {
        if self.fits(u32::from(l.level)) {
            YElement::letter(l)
        } else {
            YElement::zero()
        }
    }

    /// `[a, b]` for two letters, in normal form.
    pub fn letter_bracket(&self, a: YLetter, b: YLetter) -> YElement {
        if !self.fits(u32::from(a.level) + u32::from(b.level)) {
            return YElement::zero();
        }
        if let Some(v) = memo_get(&self.brackets, &(a, b)) {
            return v;
        }
        let (pa, pb) = (self.letter_parity(&a), self.letter_parity(&b));
        let out = match (a.kind, b.kind) {
            (Kind::Cartan, Kind::Cartan) => YElement::zero(),
            (Kind::Cartan, _) => self.h_bracket(a, b),
            (_, Kind::Cartan) => self.h_bracket(b, a).scale(&-Rational::one()),
            (Kind::Plus, Kind::Minus) => self.plus_minus_bracket(a, b),
            (Kind::Minus, Kind::Plus) => self.plus_minus_bracket(b, a).scale(&-sign(u32::from(pa & pb))),
            _ => {
                let ab = self.normal_form(&[a, b]);
                let ba = self.normal_form(&[b, a]);
                ab.sub(&ba.scale(&sign(u32::from(pa & pb))))
            }
        };
        memo_put(&self.brackets, (a, b), out.clone());
        out
    }

    /// `[h_{i,r}, x^±_{β,s}]`.
    fn h_bracket(&self, h: YLetter, x: YLetter) -> YElement {
        let (i, r) = (usize::from(h.lo), u32::from(h.level));
        let pm = x.kind.sign();
        if let Some((a, y)) = x.split() {
            // ad h is an even derivation.
            let (pa, py) = (self.letter_parity(&a), self.letter_parity(&y));
            let t1 = self.bracket_with(&self.letter_bracket(h, a), pa, &self.letter_elem(y), py);
            let t2 = self.bracket_with(&self.letter_elem(a), pa, &self.letter_bracket(h, y), py);
            return t1.add(&t2);
        }
        let j = usize::from(x.lo);
        let c = self.c(i, j);
        if i == j && self.cell_data.parity[i] == 1 {
            return YElement::zero();
        }
        if r == 0 {
            return self.letter_elem(x).scale(&rat(pm * c));
        }
        // [h_{i,r}, x_{j,s}] = [h_{i,r-1}, x_{j,s+1}] ± (c ħ/2) {h_{i,r-1}, x_{j,s}}
        let lower = h.at_level(r - 1);
        let shifted = self.letter_bracket(lower, x.at_level(u32::from(x.level) + 1));
        let px = self.letter_parity(&x);
        let anti = self.anticommutator_with(&self.letter_elem(lower), 0, &self.letter_elem(x), px);
        let corr = anti.scale_poly(&HPoly::monomial(ratio(pm * c, 2), 1), self.cap());
        shifted.add(&corr)
    }

    /// `[x⁺_{β,r}, x⁻_{γ,s}]`.
    fn plus_minus_bracket(&self, p: YLetter, m: YLetter) -> YElement {
        if let Some((a, y)) = p.split() {
            // [[A, y], Z] = [A, [y, Z]] − (−1)^{|A||y|} [y, [A, Z]]
            let (pa, py, pz) = (self.letter_parity(&a), self.letter_parity(&y), self.letter_parity(&m));
            let t1 = self.bracket_with(&self.letter_elem(a), pa, &self.letter_bracket(y, m), py ^ pz);
            let t2 = self.bracket_with(&self.letter_elem(y), py, &self.letter_bracket(a, m), pa ^ pz);
            return t1.sub(&t2.scale(&sign(u32::from(pa & py))));
        }
        if let Some((c, w)) = m.split() {
            // [X, [C, w]] = [[X, C], w] + (−1)^{|X||C|} [C, [X, w]]
            let (px, pc, pw) = (self.letter_parity(&p), self.letter_parity(&c), self.letter_parity(&w));
            let t1 = self.bracket_with(&self.letter_bracket(p, c), px ^ pc, &self.letter_elem(w), pw);
            let t2 = self.bracket_with(&self.letter_elem(c), pc, &self.letter_bracket(p, w), px ^ pw);
            return t1.add(&t2.scale(&sign(u32::from(px & pc))));
        }
        if p.lo == m.lo {
            self.letter_elem(YLetter::h(usize::from(p.lo), u32::from(p.level) + u32::from(m.level)))
        } else {
            YElement::zero()
        }
    }

    /// Multiplies out a tensor with `n` factors into the algebra, `a ⊗ b ↦ ab`.
    pub fn multiply_out(&self, t: &YTensor) -> YElement {
        let mut out = YElement::zero();
        for (key, c) in t.terms() {
            let mut acc = YElement::one();
            for m in key {
                acc = self.mul(&acc, &YElement::monomial(m.clone(), HPoly::one()));
            }
            out.add_assign(&acc.scale_poly(c, self.cap()));
        }
        out
    }

    /// `a_1 ⊗ … ⊗ a_n` for elements.
    pub fn tensor_of(&self, factors: &[YElement]) -> YTensor {
        let mut out = YTensor::zero(factors.len());
        let mut partial: Vec<(Vec<YMonomial>, HPoly)> = vec![(Vec::new(), HPoly::one())];
        for f in factors {
            let mut next = Vec::new();
            for (key, c) in &partial {
                for (m, d) in f.terms() {
                    let mut k = key.clone();
                    k.push(m.clone());
                    let lv: u32 = k.iter().map(|m| monomial_levels(m)).sum();
                    if lv <= self.cap() {
                        let prod = c.mul_trunc(d, (self.cap() - lv) as usize);
                        if !prod.is_zero() {
                            next.push((k, prod));
                        }
                    }
                }
            }
            partial = next;
        }
        for (k, c) in partial {
            out.add_term(k, c);
        }
        out
    }

    /// Parity of a homogeneous tensor.
    pub fn tensor_parity(&self, t: &YTensor) -> Result<u8, YangianError> {
        let mut it = t.terms().keys().map(|k| k.iter().fold(0, |acc, m| acc ^ self.monomial_parity(m)));
        let Some(first) = it.next() else { return Ok(0) };
        if it.all(|p| p == first) {
            Ok(first)
        } else {
            Err(YangianError::Inhomogeneous)
        }
    }

    /// Koszul-signed product in a tensor power.
    pub fn tensor_mul(&self, a: &YTensor, b: &YTensor) -> YTensor {
        assert_eq!(a.arity, b.arity, "tensor arities differ");
        let n = a.arity;
        let mut out = YTensor::zero(n);
        for (ka, ca) in a.terms() {
            let pa: Vec<u8> = ka.iter().map(|m| self.monomial_parity(m)).collect();
            let la: u32 = ka.iter().map(|m| monomial_levels(m)).sum();
            for (kb, cb) in b.terms() {
                let lb: u32 = kb.iter().map(|m| monomial_levels(m)).sum();
                let hb = ca.valuation().unwrap_or(0) + cb.valuation().unwrap_or(0);
                if la + lb + hb as u32 > self.cap() {
                    continue;
                }
                let pb: Vec<u8> = kb.iter().map(|m| self.monomial_parity(m)).collect();
                // b_j passes a_i for i > j.
                let mut s = 0u32;
                for i in 0..n {
                    for j in 0..i {
                        s += u32::from(pa[i] & pb[j]);
                    }
                }
                let coeff = ca.mul_trunc(cb, (self.cap() - la - lb) as usize).scale(&sign(s));
                if coeff.is_zero() {
                    continue;
                }
                let factors: Vec<YElement> = (0..n)
                    .map(|i| {
                        let x = YElement::monomial(ka[i].clone(), HPoly::one());
                        self.mul(&x, &YElement::monomial(kb[i].clone(), HPoly::one()))
                    })
                    .collect();
                let prod = self.tensor_of(&factors);
                for (k, c) in prod.terms {
                    let lv: u32 = k.iter().map(|m| monomial_levels(m)).sum();
                    out.add_term(k, c.mul_trunc(&coeff, (self.cap() - lv) as usize));
                }
            }
        }
        out
    }

    /// Supercommutator of homogeneous tensors.
    pub fn tensor_bracket(&self, a: &YTensor, b: &YTensor) -> Result<YTensor, YangianError> {
        let s = sign(u32::from(self.tensor_parity(a)? & self.tensor_parity(b)?));
        Ok(self.tensor_mul(a, b).sub(&self.tensor_mul(b, a).scale(&s)))
    }

    /// Anticommutator of homogeneous tensors.
    pub fn tensor_anticommutator(&self, a: &YTensor, b: &YTensor) -> Result<YTensor, YangianError> {
        let s = sign(u32::from(self.tensor_parity(a)? & self.tensor_parity(b)?));
        Ok(self.tensor_mul(a, b).add(&self.tensor_mul(b, a).scale(&s)))
    }

    /// `τ(a ⊗ b) = (−1)^{|a||b|} b ⊗ a`.
    pub fn tau(&self, t: &YTensor) -> YTensor {
        assert_eq!(t.arity, 2, "τ acts on tensor squares");
        let mut out = YTensor::zero(2);
        for (k, c) in t.terms() {
            let s = sign(u32::from(self.monomial_parity(&k[0]) & self.monomial_parity(&k[1])));
            out.add_term(vec![k[1].clone(), k[0].clone()], c.scale(&s));
        }
        out
    }

    /// Applies an even linear map to one tensor slot, producing `arity − 1 + k` factors.
    pub fn map_slot<F>(&self, t: &YTensor, slot: usize, f: F) -> Result<YTensor, YangianError>
    where
        F: Fn(&YMonomial) -> Result<YTensor, YangianError>,
    {
        let mut out: Option<YTensor> = None;
        for (key, c) in t.terms() {
            let image = f(&key[slot])?;
            let mut acc = YTensor::zero(t.arity - 1 + image.arity);
            for (ik, ic) in image.terms() {
                let mut k: Vec<YMonomial> = key[..slot].to_vec();
                k.extend(ik.iter().cloned());
                k.extend(key[slot + 1..].iter().cloned());
                let lv: u32 = k.iter().map(|m| monomial_levels(m)).sum();
                if lv <= self.cap() {
                    acc.add_term(k, ic.mul_trunc(c, (self.cap() - lv) as usize));
                }
            }
            out = Some(match out {
                Some(o) => o.add(&acc),
                None => acc,
            });
        }
        Ok(out.unwrap_or_else(|| YTensor::zero(t.arity)))
    }

    /// Renders an element canonically, e.g. `x-[1..2,0] h[1,1] x+[2,3]`.
    pub fn render(&self, x: &YElement) -> String {
        render_poly_terms(x.terms().iter().map(|(m, c)| (render_monomial(m), c)))
    }

    /// Renders a tensor canonically with factors separated by ` ⊗ `.
    pub fn render_tensor(&self, t: &YTensor) -> String {
        render_poly_terms(t.terms().iter().map(|(k, c)| {
            let body = k.iter().map(|m| format!("({})", render_monomial(m))).collect::<Vec<_>>().join(" ⊗ ");
            (body, c)
        }))
    }
}

/// Renders a monomial, `1` for the empty one.
pub fn render_monomial(m: &[YLetter]) -> String {
    if m.is_empty() {
        "1".to_string()
    } else {
        m.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn render_poly_terms<'a>(terms: impl Iterator<Item = (String, &'a HPoly)>) -> String {
    let mut rows: Vec<(String, Rational)> = Vec::new();
    for (body, c) in terms {
        for (k, v) in c.terms() {
            let b = match (k, body.as_str()) {
                (0, _) => body.clone(),
                (_, "1") => hbar_power(k),
                _ => format!("{} {}", hbar_power(k), body),
            };
            rows.push((b, v.clone()));
        }
    }
    render_terms(rows.iter().map(|(b, c)| (b.clone(), c)))
}

fn hbar_power(k: usize) -> String {
    if k == 1 {
        "hbar".to_string()
    } else {
        format!("hbar^{k}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(d: &str, n: u32) -> Yangian {
        Yangian::parse(d, Caps::new(n, 6)).unwrap()
    }

    #[test]
    fn letter_parsing_and_rendering() {
        let l: YLetter = "x-:1..2:0".parse().unwrap();
        assert_eq!(l, YLetter::x(Kind::Minus, &Root::interval(0, 1), 0));
        let m = vec![l, YLetter::h(0, 1), YLetter::xp(1, 3)];
        assert_eq!(render_monomial(&m), "x-[1..2,0] h[1,1] x+[2,3]");
        assert!("h:1..2:0".parse::<YLetter>().is_err());
        assert!("q:1:0".parse::<YLetter>().is_err());
    }

    #[test]
    fn straightening_examples() {
        let yg = y("EEO", 4);
        let (e, f) = (YLetter::xp(0, 0), YLetter::xm(0, 0));
        let mut expected = YElement::monomial(vec![f, e], HPoly::one());
        expected.add_term(vec![YLetter::h(0, 0)], HPoly::one());
        assert_eq!(yg.normal_form(&[e, f]), expected);
        let (h1, h2) = (YLetter::h(0, 0), YLetter::h(1, 3));
        assert_eq!(yg.normal_form(&[h2, h1]), YElement::monomial(vec![h1, h2], HPoly::one()));
        let odd = YLetter::xp(1, 0);
        assert!(yg.normal_form(&[odd, odd]).is_zero());
        // The odd generator x⁺_{2,0} paired with x⁻_{2,0} swaps with a sign.
        let mut expected = YElement::monomial(vec![YLetter::xm(1, 0), odd], HPoly::int(-1));
        expected.add_term(vec![YLetter::h(1, 0)], HPoly::one());
        assert_eq!(yg.normal_form(&[odd, YLetter::xm(1, 0)]), expected);
    }

    #[test]
    fn degree_truncation() {
        let yg = y("EEO", 2);
        assert!(yg.normal_form(&[YLetter::xp(0, 2), YLetter::xp(0, 1)]).is_zero());
        assert!(!yg.normal_form(&[YLetter::xp(0, 1), YLetter::xp(0, 1)]).is_zero());
    }
}
