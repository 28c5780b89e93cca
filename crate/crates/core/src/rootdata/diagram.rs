//! Parity sequences describing Dynkin diagrams of type A(m-1, n-1).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::RootDataError;

/// Parities of the basis vectors `ε_1, …, ε_{m+n}`: 0 for even, 1 for odd.
///
/// Sequences of length at least 2 are accepted. Sequences with a single
/// parity describe ordinary `sl(N)` (or its odd mirror) and are kept for
/// comparison; [`ParityDiagram::is_super`] reports whether both parities occur.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityDiagram {
    parities: Vec<u8>,
}

impl ParityDiagram {
    /// Builds a diagram from parity bits.
    pub fn new(parities: Vec<u8>) -> Result<Self, RootDataError> {
        if parities.len() < 2 {
            return Err(RootDataError::TooShort(parities.len()));
        }
        if let Some(pos) = parities.iter().position(|&p| p > 1) {
            return Err(RootDataError::Parse { position: pos, found: char::from(b'0' + parities[pos].min(9)) });
        }
        Ok(ParityDiagram { parities })
    }

    /// Parses a string over `E`/`O` (or `0`/`1`).
    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        let mut parities = Vec::with_capacity(s.len());
        for (position, c) in s.trim().chars().enumerate() {
            parities.push(match c {
                'E' | 'e' | '0' => 0,
                'O' | 'o' | '1' => 1,
                found => return Err(RootDataError::Parse { position, found }),
            });
        }
        Self::new(parities)
    }

    /// The distinguished diagram: `m` even entries followed by `n` odd ones.
    pub fn distinguished(m: usize, n: usize) -> Result<Self, RootDataError> {
        if m == 0 || n == 0 {
            return Err(RootDataError::InvalidCounts { n_even: m, n_odd: n });
        }
        let mut parities = vec![0; m];
        parities.extend(std::iter::repeat(1).take(n));
        Self::new(parities)
    }

    /// All diagrams with the given numbers of even and odd entries, in lexicographic order (`E < O`).
    pub fn all_with_counts(n_even: usize, n_odd: usize) -> Vec<Self> {
        let len = n_even + n_odd;
        if len < 2 {
            return Vec::new();
        }
        (0u32..(1 << len))
            .map(|mask| (0..len).map(|k| ((mask >> (len - 1 - k)) & 1) as u8).collect::<Vec<u8>>())
            .filter(|p| p.iter().filter(|&&b| b == 1).count() == n_odd)
            .map(|parities| ParityDiagram { parities })
            .collect()
    }

    /// All diagrams of the given length containing both parities.
    pub fn all_super_of_length(len: usize) -> Vec<Self> {
        (1..len).flat_map(|n_odd| Self::all_with_counts(len - n_odd, n_odd)).collect()
    }

    /// Parity bits.
    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    /// Parity of `ε_k` (0-based index).
    pub fn parity(&self, k: usize) -> u8 {
        self.parities[k]
    }

    /// Number of basis vectors `m + n`.
    pub fn len(&self) -> usize {
        self.parities.len()
    }

    /// Always false: a diagram has at least two entries.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of simple roots `m + n - 1`.
    pub fn rank(&self) -> usize {
        self.parities.len() - 1
    }

    /// Number of even entries `n₊`.
    pub fn n_even(&self) -> usize {
        self.parities.iter().filter(|&&p| p == 0).count()
    }

    /// Number of odd entries `n₋`.
    pub fn n_odd(&self) -> usize {
        self.parities.len() - self.n_even()
    }

    /// True when both parities occur.
    pub fn is_super(&self) -> bool {
        self.n_even() > 0 && self.n_odd() > 0
    }

    /// Parity of the simple root `α_i` (0-based), `|ε_i| + |ε_{i+1}|`.
    pub fn simple_root_parity(&self, i: usize) -> u8 {
        self.parities[i] ^ self.parities[i + 1]
    }

    /// Parities of all simple roots.
    pub fn simple_root_parities(&self) -> Vec<u8> {
        (0..self.rank()).map(|i| self.simple_root_parity(i)).collect()
    }

    /// Number of odd simple roots.
    pub fn odd_simple_count(&self) -> usize {
        self.simple_root_parities().iter().filter(|&&p| p == 1).count()
    }

    /// The diagram read backwards, `ε_k ↦ ε_{m+n+1-k}`.
    pub fn reversed(&self) -> Self {
        ParityDiagram { parities: self.parities.iter().rev().copied().collect() }
    }

    /// The diagram with every parity flipped.
    pub fn swapped(&self) -> Self {
        ParityDiagram { parities: self.parities.iter().map(|p| 1 - p).collect() }
    }

    /// Text form over `E`/`O`.
    pub fn to_eo_string(&self) -> String {
        self.parities.iter().map(|&p| if p == 0 { 'E' } else { 'O' }).collect()
    }
}

impl fmt::Display for ParityDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_eo_string())
    }
}

impl FromStr for ParityDiagram {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl Serialize for ParityDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_eo_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let d = ParityDiagram::parse("EEO").unwrap();
        assert_eq!(d.parities(), &[0, 0, 1]);
        assert_eq!(ParityDiagram::parse("001").unwrap(), d);
        assert_eq!(ParityDiagram::parse("EXO"), Err(RootDataError::Parse { position: 1, found: 'X' }));
        assert_eq!(ParityDiagram::parse("E"), Err(RootDataError::TooShort(1)));
    }

    #[test]
    fn distinguished_diagrams() {
        assert_eq!(ParityDiagram::distinguished(2, 1).unwrap().to_string(), "EEO");
        assert_eq!(ParityDiagram::distinguished(1, 1).unwrap().to_string(), "EO");
        for (m, n) in [(1, 1), (2, 1), (3, 2), (2, 4)] {
            assert_eq!(ParityDiagram::distinguished(m, n).unwrap().odd_simple_count(), 1);
        }
        assert!(ParityDiagram::distinguished(0, 2).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(ParityDiagram::all_with_counts(2, 2).len(), 6);
        let names: Vec<String> = ParityDiagram::all_with_counts(2, 1).iter().map(|d| d.to_string()).collect();
        assert_eq!(names, ["EEO", "EOE", "OEE"]);
        assert_eq!(ParityDiagram::all_super_of_length(6).len(), 62);
    }
}
