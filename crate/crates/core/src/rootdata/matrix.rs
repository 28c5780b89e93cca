//! The supermatrix realization of `sl(m|n)` for a parity diagram.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{Root, RootDataError, RootSystem};
use crate::exact::{fmt_rational, linalg, rat, sign, Rational};

/// A sparse `(m+n)×(m+n)` matrix `Σ c_ab E_ab` (0-based indices).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlElem {
    entries: BTreeMap<(usize, usize), Rational>,
}

impl GlElem {
    /// The zero matrix.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The matrix unit `c E_ab`.
    pub fn unit(a: usize, b: usize, c: Rational) -> Self {
        let mut x = Self::zero();
        x.add_entry(a, b, c);
        x
    }

    /// Adds `c` to the `(a, b)` entry.
    pub fn add_entry(&mut self, a: usize, b: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry((a, b)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&(a, b));
        }
    }

    /// Nonzero entries.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.entries
    }

    /// Entry `(a, b)`.
    pub fn get(&self, a: usize, b: usize) -> Rational {
        self.entries.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    /// True for the zero matrix.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.entries {
            out.add_entry(a, b, c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GlElem { entries: self.entries.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), x) in &self.entries {
            for (&(c, d), y) in other.entries.range((b, 0)..(b + 1, 0)) {
                debug_assert_eq!(b, c);
                out.add_entry(a, d, x * y);
            }
        }
        out
    }

    /// True when every entry lies on the diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(a, b)| a == b)
    }
}

impl fmt::Display for GlElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.entries.iter().map(|((a, b), c)| format!("{} E{},{}", fmt_rational(c), a + 1, b + 1)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Components of a matrix in the Chevalley-type basis of `sl(m|n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Coefficients of `h_1, …, h_{m+n-1}`.
    pub cartan: Vec<Rational>,
    /// Coefficients of the root vectors `e_β`.
    pub e: Vec<(Root, Rational)>,
    /// Coefficients of the root vectors `f_β`.
    pub f: Vec<(Root, Rational)>,
}

/// `sl(m|n)` realized inside supermatrices, with Chevalley generators,
/// root vectors, the invariant form and the Casimir data.
#[derive(Clone, Debug)]
pub struct SuperMatrixAlg {
    rs: RootSystem,
    e: Vec<GlElem>,
    f: Vec<GlElem>,
    h: Vec<GlElem>,
    root_e: Vec<GlElem>,
    root_f: Vec<GlElem>,
    f_scalars: Vec<Rational>,
    cartan_pairs: Vec<(GlElem, GlElem)>,
    gl_cartan: bool,
}

impl SuperMatrixAlg {
    /// Builds the realization.
    ///
    /// The simple generators are `e_i = E_{i,i+1}` and `f_i = (−1)^{|ε_i|} E_{i+1,i}`, so that
    /// `h_i = [e_i, f_i] = (−1)^{|ε_i|} E_ii − (−1)^{|ε_{i+1}|} E_{i+1,i+1}` and
    /// `str(e_i f_i) = 1`. Composite `f_β` are rescaled so that `⟨e_β, f_β⟩ = 1`.
    ///
    /// When `m = n` the Cartan part of the Casimir uses the full diagonal
    /// `Σ (−1)^{|ε_k|} E_kk ⊗ E_kk` because the form is degenerate on the span of the `h_i`.
    pub fn new(rs: RootSystem) -> Result<Self, RootDataError> {
        let d = rs.diagram().clone();
        let rank = rs.rank();
        let size = d.len();
        let mut alg = SuperMatrixAlg {
            rs,
            e: Vec::new(),
            f: Vec::new(),
            h: Vec::new(),
            root_e: Vec::new(),
            root_f: Vec::new(),
            f_scalars: Vec::new(),
            cartan_pairs: Vec::new(),
            gl_cartan: false,
        };
        for i in 0..rank {
            alg.e.push(GlElem::unit(i, i + 1, rat(1)));
            alg.f.push(GlElem::unit(i + 1, i, sign(u32::from(d.parity(i)))));
        }
        for i in 0..rank {
            let h = alg.bracket(&alg.e[i], &alg.f[i]);
            alg.h.push(h);
        }
        let roots: Vec<Root> = alg.rs.positive_roots().to_vec();
        for r in &roots {
            let mut e = alg.e[r.lo].clone();
            for k in r.lo + 1..=r.hi {
                e = alg.bracket(&e, &alg.e[k]);
            }
            let mut f = alg.f[r.hi].clone();
            for k in (r.lo..r.hi).rev() {
                f = alg.bracket(&f, &alg.f[k]);
            }
            let p = alg.pair(&e, &f);
            if p.is_zero() {
                return Err(RootDataError::DegeneratePairing(format!("root {r}")));
            }
            let s = Rational::one() / p;
            alg.root_e.push(e);
            alg.root_f.push(f.scale(&s));
            alg.f_scalars.push(s);
        }
        if d.n_even() != d.n_odd() {
            let gram: Vec<Vec<Rational>> =
                (0..rank).map(|i| (0..rank).map(|j| alg.pair(&alg.h[i], &alg.h[j])).collect()).collect();
            let inv = linalg::invert(&gram)
                .ok_or_else(|| RootDataError::DegeneratePairing("Cartan subalgebra".to_string()))?;
            for k in 0..rank {
                let mut dual = GlElem::zero();
                for l in 0..rank {
                    dual = dual.add(&alg.h[l].scale(&inv[k][l]));
                }
                alg.cartan_pairs.push((dual, alg.h[k].clone()));
            }
        } else {
            alg.gl_cartan = true;
            for k in 0..size {
                let s = sign(u32::from(d.parity(k)));
                alg.cartan_pairs.push((GlElem::unit(k, k, s), GlElem::unit(k, k, rat(1))));
            }
        }
        Ok(alg)
    }

    /// Parses a diagram and builds its realization.
    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        Self::new(RootSystem::parse(s)?)
    }

    /// Root data.
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Parity of the matrix unit `E_ab`.
    pub fn unit_parity(&self, a: usize, b: usize) -> u8 {
        self.rs.diagram().parity(a) ^ self.rs.diagram().parity(b)
    }

    /// Parity of a homogeneous matrix, `None` if it mixes parities or is zero.
    pub fn parity(&self, x: &GlElem) -> Option<u8> {
        let mut it = x.entries().keys().map(|&(a, b)| self.unit_parity(a, b));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Super commutator, extended bilinearly from matrix units.
    pub fn bracket(&self, x: &GlElem, y: &GlElem) -> GlElem {
        let mut out = GlElem::zero();
        for (&(a, b), cx) in x.entries() {
            let px = self.unit_parity(a, b);
            for (&(c, d), cy) in y.entries() {
                let coeff = cx * cy;
                if b == c {
                    out.add_entry(a, d, coeff.clone());
                }
                if d == a {
                    let py = self.unit_parity(c, d);
                    out.add_entry(c, b, -(sign(u32::from(px & py)) * coeff));
                }
            }
        }
        out
    }

    /// Supertrace `Σ (−1)^{|ε_k|} x_kk`.
    pub fn supertrace(&self, x: &GlElem) -> Rational {
        x.entries()
            .iter()
            .filter(|((a, b), _)| a == b)
            .map(|((a, _), c)| sign(u32::from(self.rs.diagram().parity(*a))) * c)
            .sum()
    }

    /// Invariant form `⟨x, y⟩ = str(xy)`.
    pub fn pair(&self, x: &GlElem, y: &GlElem) -> Rational {
        self.supertrace(&x.mul(y))
    }

    /// Chevalley generator `e_i`.
    pub fn e(&self, i: usize) -> &GlElem {
        &self.e[i]
    }

    /// Chevalley generator `f_i`.
    pub fn f(&self, i: usize) -> &GlElem {
        &self.f[i]
    }

    /// Chevalley generator `h_i`.
    pub fn h(&self, i: usize) -> &GlElem {
        &self.h[i]
    }

    /// Root vector `e_β`.
    pub fn root_e(&self, r: &Root) -> &GlElem {
        &self.root_e[self.rs.root_index(r)]
    }

    /// Root vector `f_β` (rescaled).
    pub fn root_f(&self, r: &Root) -> &GlElem {
        &self.root_f[self.rs.root_index(r)]
    }

    /// Rescaling applied to the bracketed `f_β` to reach `⟨e_β, f_β⟩ = 1`.
    pub fn f_scalar(&self, r: &Root) -> &Rational {
        &self.f_scalars[self.rs.root_index(r)]
    }

    /// Pairs `(h^k, h_k)` of dual Cartan elements whose sum of tensors is the Cartan part of the Casimir.
    pub fn cartan_pairs(&self) -> &[(GlElem, GlElem)] {
        &self.cartan_pairs
    }

    /// True when the Cartan part of the Casimir lives in `gl(m|n)` (the case `m = n`).
    pub fn uses_gl_cartan(&self) -> bool {
        self.gl_cartan
    }

    /// Coefficients of a diagonal matrix in the basis `h_i`, or `None` outside their span.
    pub fn cartan_coords(&self, x: &GlElem) -> Option<Vec<Rational>> {
        if !x.is_diagonal() {
            return None;
        }
        let d = self.rs.diagram();
        let n = d.len();
        let mut coords = Vec::with_capacity(n - 1);
        let mut prev = Rational::zero();
        for k in 0..n - 1 {
            let c = sign(u32::from(d.parity(k))) * x.get(k, k) + &prev;
            coords.push(c.clone());
            prev = c;
        }
        let last = -(sign(u32::from(d.parity(n - 1))) * &prev);
        (last == x.get(n - 1, n - 1)).then_some(coords)
    }

    /// Splits an element of `sl(m|n)` into Cartan and root-vector components.
    pub fn decompose(&self, x: &GlElem) -> Result<Decomposition, RootDataError> {
        let mut diag = GlElem::zero();
        let mut e = Vec::new();
        let mut f = Vec::new();
        for (&(a, b), c) in x.entries() {
            if a == b {
                diag.add_entry(a, b, c.clone());
            } else if a < b {
                let r = Root::interval(a, b - 1);
                e.push((r, c / self.root_e(&r).get(a, b)));
            } else {
                let r = Root::interval(b, a - 1);
                f.push((r, c / self.root_f(&r).get(a, b)));
            }
        }
        let cartan = self.cartan_coords(&diag).ok_or(RootDataError::NotInSubalgebra)?;
        e.sort();
        f.sort();
        Ok(Decomposition { cartan, e, f })
    }

    /// The Chevalley generators `e_i`, `f_i`, `h_i` with their names.
    pub fn chevalley_generators(&self) -> Vec<(String, GlElem)> {
        let mut out = Vec::with_capacity(3 * self.rank());
        for i in 0..self.rank() {
            out.push((format!("e{}", i + 1), self.e[i].clone()));
            out.push((format!("f{}", i + 1), self.f[i].clone()));
            out.push((format!("h{}", i + 1), self.h[i].clone()));
        }
        out
    }

    /// Relation checks of the Chevalley presentation, by name.
    ///
    /// The Serre-type relations are checked for every parity, not only the
    /// parities for which they are part of the presentation.
    pub fn check_presentation(&self) -> Vec<(String, bool)> {
        let rank = self.rank();
        let mut out = Vec::new();
        let c = |i: usize, j: usize| rat(self.rs.c(i, j));
        for i in 0..rank {
            for j in 0..rank {
                out.push((format!("[h{},h{}]=0", i + 1, j + 1), self.bracket(&self.h[i], &self.h[j]).is_zero()));
                out.push((
                    format!("[h{},e{}]=c e", i + 1, j + 1),
                    self.bracket(&self.h[i], &self.e[j]) == self.e[j].scale(&c(i, j)),
                ));
                out.push((
                    format!("[h{},f{}]=-c f", i + 1, j + 1),
                    self.bracket(&self.h[i], &self.f[j]) == self.f[j].scale(&-c(i, j)),
                ));
                let ef = self.bracket(&self.e[i], &self.f[j]);
                let expected = if i == j { self.h[i].clone() } else { GlElem::zero() };
                out.push((format!("[e{},f{}]=δh", i + 1, j + 1), ef == expected));
            }
        }
        for i in 0..rank {
            let ok = self.bracket(&self.e[i], &self.e[i]).is_zero() && self.bracket(&self.f[i], &self.f[i]).is_zero();
            out.push((format!("[e{0},e{0}]=[f{0},f{0}]=0", i + 1), ok));
        }
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let k = 1 + self.rs.c(i, j).unsigned_abs();
                let mut xe = self.e[j].clone();
                let mut xf = self.f[j].clone();
                for _ in 0..k {
                    xe = self.bracket(&self.e[i], &xe);
                    xf = self.bracket(&self.f[i], &xf);
                }
                out.push((format!("(ad e{})^{} e{}=0", i + 1, k, j + 1), xe.is_zero() && xf.is_zero()));
            }
        }
        for j in 1..rank.saturating_sub(1) {
            let e3 = self.bracket(&self.bracket(&self.bracket(&self.e[j - 1], &self.e[j]), &self.e[j + 1]), &self.e[j]);
            let f3 = self.bracket(&self.bracket(&self.bracket(&self.f[j - 1], &self.f[j]), &self.f[j + 1]), &self.f[j]);
            out.push((format!("[[[e{},e{}],e{}],e{}]=0", j, j + 1, j + 2, j + 1), e3.is_zero() && f3.is_zero()));
        }
        out
    }
}
