//! Roots, the bilinear form and the Cartan matrix.

use std::fmt;

use serde::Serialize;

use super::{ParityDiagram, RootDataError};

/// A positive root `α_lo + α_{lo+1} + … + α_hi = ε_lo − ε_{hi+1}` (0-based simple indices).
///
/// The derived ordering compares `lo` first and then `hi`, which is the
/// fixed total order on positive roots used for every PBW ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    /// First simple root in the interval.
    pub lo: usize,
    /// Last simple root in the interval (inclusive).
    pub hi: usize,
}

impl Root {
    /// The simple root `α_i`.
    pub fn simple(i: usize) -> Self {
        Root { lo: i, hi: i }
    }

    /// The root `α_lo + … + α_hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        assert!(lo <= hi, "empty root interval");
        Root { lo, hi }
    }

    /// Height: the number of simple roots in the interval.
    pub fn height(&self) -> usize {
        self.hi - self.lo + 1
    }

    /// True for a simple root.
    pub fn is_simple(&self) -> bool {
        self.lo == self.hi
    }

    /// The pair of 0-based ε-indices `(j, i)` with the root equal to `ε_j − ε_i`.
    pub fn eps_pair(&self) -> (usize, usize) {
        (self.lo, self.hi + 1)
    }

    /// Coordinates in the simple-root basis.
    pub fn coords(&self, rank: usize) -> Vec<i64> {
        (0..rank).map(|k| i64::from(self.lo <= k && k <= self.hi)).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_simple() {
            write!(f, "{}", self.lo + 1)
        } else {
            write!(f, "{}..{}", self.lo + 1, self.hi + 1)
        }
    }
}

/// Height of a root given in the simple-root basis.
pub fn root_height(coords: &[i64]) -> i64 {
    coords.iter().sum()
}

/// Root data attached to a parity diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    diagram: ParityDiagram,
    positive: Vec<Root>,
    cartan: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Builds all root data of a diagram.
    pub fn new(diagram: ParityDiagram) -> Self {
        let rank = diagram.rank();
        let mut positive = Vec::with_capacity(rank * (rank + 1) / 2);
        for lo in 0..rank {
            for hi in lo..rank {
                positive.push(Root { lo, hi });
            }
        }
        let mut rs = RootSystem { diagram, positive, cartan: Vec::new() };
        rs.cartan =
            (0..rank).map(|i| (0..rank).map(|j| rs.form(&Root::simple(i), &Root::simple(j))).collect()).collect();
        rs
    }

    /// Parses a parity string and builds its root system.
    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        Ok(Self::new(ParityDiagram::parse(s)?))
    }

    /// The underlying diagram.
    pub fn diagram(&self) -> &ParityDiagram {
        &self.diagram
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// `(ε_a, ε_b)` for 0-based indices.
    pub fn eps_form(&self, a: usize, b: usize) -> i64 {
        if a != b {
            0
        } else if self.diagram.parity(a) == 0 {
            1
        } else {
            -1
        }
    }

    /// Bilinear form of two positive roots.
    pub fn form(&self, x: &Root, y: &Root) -> i64 {
        let (a, b) = x.eps_pair();
        let (c, d) = y.eps_pair();
        self.eps_form(a, c) - self.eps_form(a, d) - self.eps_form(b, c) + self.eps_form(b, d)
    }

    /// Bilinear form of two weights given in simple-root coordinates.
    pub fn form_coords(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * yj * self.cartan[i][j];
            }
        }
        s
    }

    /// Positive roots in the fixed total order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Index of a positive root in [`RootSystem::positive_roots`].
    pub fn root_index(&self, r: &Root) -> usize {
        let rank = self.rank();
        // Each smaller `lo` contributes `rank - lo` roots.
        r.lo * rank - r.lo * r.lo.saturating_sub(1) / 2 + (r.hi - r.lo)
    }

    /// Parity of a positive root.
    pub fn parity(&self, r: &Root) -> u8 {
        let (a, b) = r.eps_pair();
        self.diagram.parity(a) ^ self.diagram.parity(b)
    }

    /// Parity of the simple root `α_i`.
    pub fn simple_parity(&self, i: usize) -> u8 {
        self.diagram.simple_root_parity(i)
    }

    /// Cartan entry `c_ij = (α_i, α_j)`.
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// The Cartan matrix.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Root data in a serializable form.
    pub fn summary(&self) -> RootSummary {
        RootSummary {
            diagram: self.diagram.to_string(),
            n_even: self.diagram.n_even(),
            n_odd: self.diagram.n_odd(),
            cartan: self.cartan.clone(),
            simple_root_parities: self.diagram.simple_root_parities(),
            positive_roots: self
                .positive
                .iter()
                .map(|r| RootInfo {
                    interval: r.to_string(),
                    eps: format!("e{}-e{}", r.lo + 1, r.hi + 2),
                    height: r.height(),
                    parity: self.parity(r),
                })
                .collect(),
        }
    }
}

/// Serializable summary of a root system.
#[derive(Clone, Debug, Serialize)]
pub struct RootSummary {
    /// Parity string.
    pub diagram: String,
    /// Number of even basis vectors.
    pub n_even: usize,
    /// Number of odd basis vectors.
    pub n_odd: usize,
    /// Cartan matrix, row-major.
    pub cartan: Vec<Vec<i64>>,
    /// Parities of the simple roots.
    pub simple_root_parities: Vec<u8>,
    /// Positive roots in the fixed total order.
    pub positive_roots: Vec<RootInfo>,
}

/// Serializable description of one positive root.
#[derive(Clone, Debug, Serialize)]
pub struct RootInfo {
    /// Simple-root interval, 1-based (a single index for simple roots).
    pub interval: String,
    /// Difference of basis weights, 1-based.
    pub eps: String,
    /// Height.
    pub height: usize,
    /// Parity bit.
    pub parity: u8,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: `c_ij` from the parities of the basis vectors directly.
    fn cartan_oracle(p: &[u8]) -> Vec<Vec<i64>> {
        let s = |k: usize| if p[k] == 0 { 1 } else { -1 };
        let r = p.len() - 1;
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            s(i) + s(i + 1)
                        } else if j == i + 1 {
                            -s(i + 1)
                        } else if i == j + 1 {
                            -s(i)
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn cartan_examples() {
        let rs = RootSystem::parse("EEO").unwrap();
        assert_eq!(rs.cartan(), &[vec![2, -1], vec![-1, 0]]);
        assert_eq!(rs.diagram().simple_root_parities(), vec![0, 1]);
        let rs = RootSystem::parse("EOE").unwrap();
        assert_eq!(rs.cartan(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(rs.diagram().simple_root_parities(), vec![1, 1]);
        let rs = RootSystem::parse("EEEEE").unwrap();
        for i in 0..4 {
            assert_eq!(rs.c(i, i), 2);
            if i + 1 < 4 {
                assert_eq!(rs.c(i, i + 1), -1);
            }
        }
    }

    #[test]
    fn cartan_matches_oracle_and_parity_rule() {
        for len in 2..=6 {
            for d in ParityDiagram::all_super_of_length(len) {
                let rs = RootSystem::new(d.clone());
                assert_eq!(rs.cartan(), cartan_oracle(d.parities()).as_slice(), "{d}");
                for i in 0..rs.rank() {
                    for j in 0..rs.rank() {
                        assert_eq!(rs.c(i, j), rs.c(j, i));
                    }
                    assert_eq!(rs.c(i, i) == 0, rs.simple_parity(i) == 1);
                }
                assert_eq!(rs.positive_roots().len(), len * (len - 1) / 2);
            }
        }
    }

    #[test]
    fn heights_and_order() {
        assert_eq!(root_height(&Root::simple(0).coords(2)), 1);
        assert_eq!(root_height(&[1, 1]), 2);
        assert_eq!(root_height(&Root::interval(0, 2).coords(3)), 3);
        let rs = RootSystem::parse("EEOO").unwrap();
        for (k, r) in rs.positive_roots().iter().enumerate() {
            assert_eq!(rs.root_index(r), k);
        }
        let roots = rs.positive_roots();
        assert!(roots.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(roots[0], Root::interval(0, 0));
        assert_eq!(roots[2], Root::interval(0, 2));
    }

    #[test]
    fn form_is_cartan_on_coordinates() {
        let rs = RootSystem::parse("EOEO").unwrap();
        for x in rs.positive_roots() {
            for y in rs.positive_roots() {
                assert_eq!(rs.form(x, y), rs.form_coords(&x.coords(3), &y.coords(3)));
            }
        }
    }
}
