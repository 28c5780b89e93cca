//! The complete Weyl group `S_{m+n}` acting on the weight basis, its
//! parity-preserving Weyl subgroup, the ℤ₂-grading coming from the canonical
//! decomposition of permutations, and Coxeter relation checks.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::rootdata::{ParityDiagram, RootDataError};

/// Errors raised by permutation constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    /// The one-line notation is not a permutation of `1..=n`.
    #[error("not a permutation of 1..={0}: {1:?}")]
    NotAPermutation(usize, Vec<usize>),
    /// Lengths of a permutation and a diagram disagree.
    #[error("permutation of {perm} points applied to a diagram of length {diagram}")]
    SizeMismatch {
        /// Number of points permuted.
        perm: usize,
        /// Length of the diagram.
        diagram: usize,
    },
    /// Propagated diagram error.
    #[error(transparent)]
    Diagram(#[from] RootDataError),
}

/// A permutation of `{0, …, n−1}` stored in one-line notation.
///
/// Composition follows function composition: `a.compose(&b)` applies `b` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    /// The identity on `n` points.
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Builds a permutation from 0-based one-line notation.
    pub fn new(images: Vec<usize>) -> Result<Self, WeylError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(WeylError::NotAPermutation(n, images.iter().map(|x| x + 1).collect()));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self, WeylError> {
        if images.contains(&0) {
            return Err(WeylError::NotAPermutation(images.len(), images.to_vec()));
        }
        Self::new(images.iter().map(|x| x - 1).collect())
    }

    /// The simple reflection `σ_k` swapping `k` and `k+1` (0-based).
    pub fn simple(n: usize, k: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(k, k + 1);
        Perm(v)
    }

    /// The reversal `i ↦ n−1−i`.
    pub fn reversal(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the permutation of zero points.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of a point.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// One-line notation, 0-based.
    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// One-line notation, 1-based.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self^k`.
    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.len()), |acc, _| acc.compose(self))
    }

    /// All permutations of `n` points in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(cur.clone()));
            // Next lexicographic permutation.
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("a larger element exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The cycle `σ_k ∘ σ_{k−1} ∘ … ∘ σ_j` (0-based, `j ≤ k`); it sends `j` to `k+1`.
///
/// `j = k + 1` gives the identity, so the set `Σ_k` is `{chain(n, k, j) : 0 ≤ j ≤ k+1}`.
pub fn chain(n: usize, k: usize, j: usize) -> Perm {
    (j..=k).fold(Perm::identity(n), |acc, l| Perm::simple(n, l).compose(&acc))
}

/// One factor `w_k ∈ Σ_k` of the canonical decomposition, stored as the start index `j` of the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainFactor {
    /// The index `k` of the set `Σ_k` (0-based).
    pub k: usize,
    /// Lowest simple reflection in the chain; `k + 1` means the identity.
    pub start: usize,
}

impl ChainFactor {
    /// The factor as a permutation of `n` points.
    pub fn to_perm(&self, n: usize) -> Perm {
        chain(n, self.k, self.start)
    }

    /// Simple reflections in the chain, from the last applied to the first.
    pub fn reflections(&self) -> impl Iterator<Item = usize> {
        (self.start..=self.k).rev()
    }
}

/// The unique `(w_1, …, w_{n−1}) ∈ Σ_1 × … × Σ_{n−1}` with `w = w_1 ∘ … ∘ w_{n−1}`.
pub fn canonical_decompose(w: &Perm) -> Vec<ChainFactor> {
    let n = w.len();
    let mut rest = w.clone();
    let mut factors = Vec::with_capacity(n.saturating_sub(1));
    for k in (0..n.saturating_sub(1)).rev() {
        // The rightmost factor is the only one moving a point to k+1.
        let j = rest.inverse().apply(k + 1);
        let f = ChainFactor { k, start: j };
        rest = rest.compose(&f.to_perm(n).inverse());
        factors.push(f);
    }
    debug_assert!(rest.is_identity());
    factors.reverse();
    factors
}

/// Recomposes `w_1 ∘ … ∘ w_{n−1}`.
pub fn recompose(n: usize, factors: &[ChainFactor]) -> Perm {
    factors.iter().fold(Perm::identity(n), |acc, f| acc.compose(&f.to_perm(n)))
}

/// Grade `|σ_i| = |ε_i| + |ε_{i+1}|` of a simple reflection for a diagram.
pub fn simple_grade(diagram: &ParityDiagram, i: usize) -> u8 {
    diagram.simple_root_parity(i)
}

/// Grade of a permutation: the sum of the grades of the simple reflections
/// in its canonical decomposition.
pub fn grade(w: &Perm, diagram: &ParityDiagram) -> Result<u8, WeylError> {
    check_size(w, diagram)?;
    let mut g = 0;
    for f in canonical_decompose(w) {
        for l in f.reflections() {
            g ^= simple_grade(diagram, l);
        }
    }
    Ok(g)
}

/// A permutation together with its grade for a fixed diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedPermutation {
    /// The permutation.
    pub perm: Perm,
    /// Its ℤ₂-grade.
    pub grade: u8,
}

impl GradedPermutation {
    /// Attaches the grade computed from the canonical decomposition.
    pub fn new(perm: Perm, diagram: &ParityDiagram) -> Result<Self, WeylError> {
        let grade = grade(&perm, diagram)?;
        Ok(GradedPermutation { perm, grade })
    }
}

fn check_size(w: &Perm, d: &ParityDiagram) -> Result<(), WeylError> {
    if w.len() != d.len() {
        return Err(WeylError::SizeMismatch { perm: w.len(), diagram: d.len() });
    }
    Ok(())
}

/// Transports a diagram along `ε_i ↦ ε_{w(i)}`: the image has parity `d_i` at position `w(i)`.
pub fn act_on_basis(w: &Perm, diagram: &ParityDiagram) -> Result<ParityDiagram, WeylError> {
    check_size(w, diagram)?;
    let mut p = vec![0; w.len()];
    for i in 0..w.len() {
        p[w.apply(i)] = diagram.parity(i);
    }
    Ok(ParityDiagram::new(p)?)
}

/// Action on a lattice vector written in the basis `ε_1, …, ε_{m+n}`.
pub fn act_on_weight(w: &Perm, coords: &[i64]) -> Vec<i64> {
    let mut out = vec![0; coords.len()];
    for (i, c) in coords.iter().enumerate() {
        out[w.apply(i)] += c;
    }
    out
}

/// True when `w` maps even indices to even indices and odd to odd.
pub fn is_weyl_member(w: &Perm, diagram: &ParityDiagram) -> bool {
    w.len() == diagram.len() && (0..w.len()).all(|i| diagram.parity(w.apply(i)) == diagram.parity(i))
}

/// All members of the parity-preserving subgroup `W ≅ S_{n₊} × S_{n₋}`.
pub fn weyl_members(diagram: &ParityDiagram) -> Vec<Perm> {
    Perm::all(diagram.len()).into_iter().filter(|w| is_weyl_member(w, diagram)).collect()
}

/// One Coxeter relation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterCheck {
    /// Which group: `"W"` or `"Wc"`.
    pub group: &'static str,
    /// The relation in text form.
    pub relation: String,
    /// Whether it holds.
    pub pass: bool,
}

/// Coxeter relations of `W(n₊, n₋)` and `W_c(n₊, n₋)` on the standard diagram.
pub fn check_coxeter(n_even: usize, n_odd: usize) -> Vec<CoxeterCheck> {
    let n = n_even + n_odd;
    let mut out = Vec::new();
    let mut push_group = |group: &'static str, gens: &[usize]| {
        let s = |k: usize| Perm::simple(n, k);
        for &i in gens {
            out.push(CoxeterCheck { group, relation: format!("s{}^2=id", i + 1), pass: s(i).pow(2).is_identity() });
        }
        for &i in gens {
            for &j in gens {
                if i + 1 == j {
                    let pass = s(i).compose(&s(j)).pow(3).is_identity();
                    out.push(CoxeterCheck { group, relation: format!("(s{}s{})^3=id", i + 1, j + 1), pass });
                }
                if i + 1 < j {
                    let pass = s(i).compose(&s(j)) == s(j).compose(&s(i));
                    out.push(CoxeterCheck {
                        group,
                        relation: format!("s{}s{}=s{}s{}", i + 1, j + 1, j + 1, i + 1),
                        pass,
                    });
                }
            }
        }
    };
    // Simple reflections of W live inside the even block and the odd block of the standard diagram.
    let w_gens: Vec<usize> = (0..n.saturating_sub(1)).filter(|&k| k + 1 != n_even).collect();
    push_group("W", &w_gens);
    let wc_gens: Vec<usize> = (0..n.saturating_sub(1)).collect();
    push_group("Wc", &wc_gens);
    out
}

/// Serializable overview of both groups for a diagram.
#[derive(Clone, Debug, Serialize)]
pub struct WeylSummary {
    /// Parity string.
    pub diagram: String,
    /// Order of the parity-preserving subgroup.
    pub weyl_order: usize,
    /// Order of the complete Weyl group.
    pub complete_order: usize,
    /// Grades of the simple reflections.
    pub simple_grades: Vec<u8>,
    /// Parity-preserving permutations with their grades.
    pub members: Vec<GradedPermutation>,
    /// Coxeter relation checks on the standard diagram with the same counts.
    pub coxeter: Vec<CoxeterCheck>,
}

/// Builds the overview for a diagram.
pub fn summary(diagram: &ParityDiagram) -> WeylSummary {
    let members: Vec<GradedPermutation> =
        weyl_members(diagram).into_iter().map(|w| GradedPermutation::new(w, diagram).expect("sizes agree")).collect();
    WeylSummary {
        diagram: diagram.to_string(),
        weyl_order: members.len(),
        complete_order: (1..=diagram.len()).product(),
        simple_grades: (0..diagram.rank()).map(|i| simple_grade(diagram, i)).collect(),
        members,
        coxeter: check_coxeter(diagram.n_even(), diagram.n_odd()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> ParityDiagram {
        ParityDiagram::parse(s).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let id = Perm::identity(3);
        let f = canonical_decompose(&id);
        assert!(f.iter().all(|x| x.to_perm(3).is_identity()));
        let s1 = Perm::simple(3, 0);
        let f = canonical_decompose(&s1);
        assert_eq!(f[0].to_perm(3), s1);
        assert!(f[1].to_perm(3).is_identity());
        for w in Perm::all(4) {
            assert_eq!(recompose(4, &canonical_decompose(&w)), w);
        }
    }

    #[test]
    fn chains_have_the_displayed_form() {
        // σ_3 σ_2 σ_1 sends 1 to 4 and shifts 2, 3, 4 down.
        assert_eq!(chain(4, 2, 0).one_based(), vec![4, 1, 2, 3]);
        assert!(chain(4, 2, 3).is_identity());
    }

    #[test]
    fn grade_examples() {
        assert_eq!(grade(&Perm::simple(2, 0), &d("EO")).unwrap(), 1);
        assert_eq!(grade(&Perm::simple(3, 0), &d("EEO")).unwrap(), 0);
        assert_eq!(grade(&Perm::identity(3), &d("EOE")).unwrap(), 0);
        assert!(grade(&Perm::identity(2), &d("EEO")).is_err());
    }

    #[test]
    fn action_examples() {
        assert_eq!(act_on_basis(&Perm::simple(3, 1), &d("EEO")).unwrap(), d("EOE"));
        assert_eq!(act_on_basis(&Perm::identity(4), &d("EOOE")).unwrap(), d("EOOE"));
        assert_eq!(act_on_basis(&Perm::reversal(3), &d("EEO")).unwrap(), d("OEE"));
        assert_eq!(act_on_weight(&Perm::simple(3, 0), &[1, -1, 0]), vec![-1, 1, 0]);
    }

    #[test]
    fn member_examples() {
        assert_eq!(weyl_members(&d("EEO")).len(), 2);
        assert_eq!(weyl_members(&d("EEOO")).len(), 4);
        let st = d("EEOO");
        assert!(weyl_members(&st).iter().all(|w| grade(w, &st).unwrap() == 0));
    }

    #[test]
    fn coxeter_examples() {
        assert!(check_coxeter(2, 1).iter().all(|c| c.pass));
        let s = |k| Perm::simple(3, k);
        assert!(s(0).compose(&s(1)).pow(3).is_identity());
        let t = |k| Perm::simple(4, k);
        assert_eq!(t(0).compose(&t(2)), t(2).compose(&t(0)));
    }

    #[test]
    fn invalid_permutations() {
        assert!(Perm::from_one_based(&[1, 1, 2]).is_err());
        assert!(Perm::from_one_based(&[0, 1]).is_err());
        assert_eq!(Perm::from_one_based(&[2, 1]).unwrap(), Perm::simple(2, 0));
    }
}
