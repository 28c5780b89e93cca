//! PBW bookkeeping: counting ordered monomials, certifying the straightening
//! of the positive half, and the specialization `ħ = 0`.

use serde::Serialize;

use super::{Kind, YElement, YLetter, Yangian, YangianError};
use crate::enveloping::{UEAlgebra, UEElement};
use crate::rootdata::LoopTensor;

/// Number of PBW monomials of a given degree and length, counted two ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedCount {
    /// ℕ₀-degree (ħ-exponent plus the sum of levels).
    pub degree: u32,
    /// Number of letters.
    pub length: usize,
    /// Count by enumerating ordered monomials.
    pub enumerated: u64,
    /// Coefficient of the generating function.
    pub generating: u64,
}

/// Outcome of certifying one homogeneous component of the positive half.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellReport {
    /// Weight in simple-root coordinates.
    pub weight: Vec<u8>,
    /// ℕ₀-degree.
    pub degree: u32,
    /// Number of words spanning the component.
    pub words: usize,
    /// Quotient dimension, equal to the PBW count when certified.
    pub dimension: usize,
}

/// Coefficients of `1/(1−t) · Π_{even} 1/(1 − t^r s) · Π_{odd} (1 + t^r s)`
/// over the letters of levels up to `degree`, indexed by `[degree][length]`.
pub fn pbw_generating_count(letter_parities: &[(u32, u8)], degree: u32, length: usize) -> Vec<Vec<u64>> {
    let (nd, nl) = (degree as usize + 1, length + 1);
    let mut poly = vec![vec![0u64; nl]; nd];
    // 1/(1−t) accounts for the powers of ħ.
    for row in poly.iter_mut() {
        row[0] = 1;
    }
    for &(level, parity) in letter_parities {
        let lv = level as usize;
        let mut next = vec![vec![0u64; nl]; nd];
        for d in 0..nd {
            for l in 0..nl {
                let c = poly[d][l];
                if c == 0 {
                    continue;
                }
                let max_k = if parity == 1 { 1 } else { nl };
                let mut k = 0;
                while k <= max_k && d + k * lv < nd && l + k < nl {
                    next[d + k * lv][l + k] += c;
                    k += 1;
                }
            }
        }
        poly = next;
    }
    poly
}

impl Yangian {
    /// Every PBW letter of level at most `max_level`, in PBW order.
    pub fn alphabet(&self, max_level: u32) -> Vec<YLetter> {
        let mut out = Vec::new();
        let roots = self.root_system().positive_roots().to_vec();
        for level in 0..=max_level {
            for r in &roots {
                out.push(YLetter::x(Kind::Minus, r, level));
                out.push(YLetter::x(Kind::Plus, r, level));
            }
            for i in 0..self.rank() {
                out.push(YLetter::h(i, level));
            }
        }
        out.sort();
        out
    }

    /// Enumerates the ordered PBW monomials of level sum `levels` and length `length`.
    pub fn pbw_monomials(&self, levels: u32, length: usize) -> Vec<Vec<YLetter>> {
        let alphabet = self.alphabet(levels);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.enumerate(&alphabet, 0, levels, length, &mut cur, &mut out);
        out
    }

    fn enumerate(
        &self,
        alphabet: &[YLetter],
        start: usize,
        budget: u32,
        remaining: usize,
        cur: &mut Vec<YLetter>,
        out: &mut Vec<Vec<YLetter>>,
    ) {
        if remaining == 0 {
            if budget == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for idx in start..alphabet.len() {
            let l = alphabet[idx];
            if u32::from(l.level) > budget {
                continue;
            }
            let next = if self.letter_parity(&l) == 1 { idx + 1 } else { idx };
            cur.push(l);
            self.enumerate(alphabet, next, budget - u32::from(l.level), remaining - 1, cur, out);
            cur.pop();
        }
    }

    /// Number of PBW basis elements `ħ^k · m` with `k + levels(m) = degree` and `m` of the given length.
    pub fn graded_dimension(&self, degree: u32, length: usize) -> u64 {
        (0..=degree).map(|lv| self.pbw_monomials(lv, length).len() as u64).sum()
    }

    /// Graded dimensions for every degree up to the cap and every length up to the length cap,
    /// compared with the generating function.
    pub fn graded_table(&self) -> Vec<GradedCount> {
        let caps = self.caps();
        let letters: Vec<(u32, u8)> =
            self.alphabet(caps.degree).iter().map(|l| (u32::from(l.level), self.letter_parity(l))).collect();
        let gf = pbw_generating_count(&letters, caps.degree, caps.length);
        let mut out = Vec::new();
        for degree in 0..=caps.degree {
            for length in 0..=caps.length {
                out.push(GradedCount {
                    degree,
                    length,
                    enumerated: self.graded_dimension(degree, length),
                    generating: gf[degree as usize][length],
                });
            }
        }
        out
    }

    /// Weights of the products of two root letters of the same sign: the
    /// components of the positive half used by straightening.
    pub fn straightening_weights(&self) -> Vec<Vec<u8>> {
        let roots = self.root_system().positive_roots().to_vec();
        let mut out = Vec::new();
        for (a, ra) in roots.iter().enumerate() {
            for rb in &roots[a..] {
                let mut w = vec![0u8; self.rank()];
                for r in [ra, rb] {
                    for k in r.lo..=r.hi {
                        w[k] += 1;
                    }
                }
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }

    /// Certifies every component of the positive half used by straightening, at every degree up to the cap.
    pub fn certify_straightening(&self) -> Result<Vec<CellReport>, YangianError> {
        let mut out = Vec::new();
        for w in self.straightening_weights() {
            for degree in 0..=self.cap() {
                let (words, dimension) = self.certify_cell(&w, degree)?;
                out.push(CellReport { weight: w.clone(), degree, words, dimension });
            }
        }
        Ok(out)
    }

    /// The enveloping algebra of the current algebra used as the `ħ = 0` oracle.
    pub fn classical_oracle(&self) -> UEAlgebra {
        UEAlgebra::new(self.matrix_algebra().clone(), false)
    }

    /// Image of a letter at `ħ = 0`: `x^±_{β,r} ↦ κ e_β t^r` (or `κ f_β t^r`), `h_{i,r} ↦ h_i t^r`.
    pub fn classical_letter(&self, ue: &UEAlgebra, l: &YLetter) -> UEElement {
        let level = u32::from(l.level);
        match l.kind {
            Kind::Cartan => UEElement::letter(ue.h(usize::from(l.lo), level)),
            Kind::Plus => UEElement::letter(ue.e(&l.root(), level)).scale(&self.kappa(Kind::Plus, &l.root())),
            Kind::Minus => UEElement::letter(ue.f(&l.root(), level)).scale(&self.kappa(Kind::Minus, &l.root())),
        }
    }

    /// Image of the `ħ = 0` part of an element in the enveloping algebra of the current algebra.
    pub fn classical_image(&self, ue: &UEAlgebra, x: &YElement) -> UEElement {
        let mut out = UEElement::zero();
        for (m, c) in x.at_hbar_zero() {
            let mut acc = UEElement::one();
            for l in &m {
                acc = ue.mul(&acc, &self.classical_letter(ue, l));
            }
            out = out.add(&acc.scale(&c));
        }
        out
    }

    /// Compares the straightening of a word at `ħ = 0` with straightening in the oracle.
    pub fn classical_defect(&self, ue: &UEAlgebra, word: &[YLetter]) -> UEElement {
        let ours = self.classical_image(ue, &self.normal_form(word));
        let mut theirs = UEElement::one();
        for l in word {
            theirs = ue.mul(&theirs, &self.classical_letter(ue, l));
        }
        ours.sub(&theirs)
    }

    /// Reads a tensor whose factors are single letters as an element of the
    /// tensor square of the current algebra. A letter of level `r` goes to
    /// its matrix image times the `r`-th power of the loop variable.
    pub fn to_loop_tensor(&self, t: &super::YTensor) -> Option<LoopTensor> {
        let mut out = LoopTensor::zero();
        for (k, c) in t.terms() {
            if c.degree() != Some(0) {
                return None;
            }
            let (a, ra) = self.monomial_matrix(&k[0])?;
            let (b, rb) = self.monomial_matrix(&k[1])?;
            let scale = c.at_zero();
            out = out.add(&LoopTensor::product(&[(&a, ra as i32), (&b, rb as i32)]).scale(&scale));
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yangian::Caps;

    #[test]
    fn degree_zero_length_one_counts_letters() {
        let y = Yangian::parse("EEO", Caps::new(2, 3)).unwrap();
        // h₁, h₂, and x^± for three positive roots.
        assert_eq!(y.graded_dimension(0, 1), 8);
        assert_eq!(y.graded_dimension(0, 0), 1);
        assert_eq!(y.graded_dimension(2, 0), 1);
    }

    #[test]
    fn enumeration_matches_generating_function() {
        for d in ["EEO", "EOE", "EO"] {
            let y = Yangian::parse(d, Caps::new(3, 3)).unwrap();
            for row in y.graded_table() {
                assert_eq!(row.enumerated, row.generating, "{d} {row:?}");
            }
        }
    }

    #[test]
    fn classical_specialization_examples() {
        let y = Yangian::parse("EEO", Caps::new(3, 4)).unwrap();
        let ue = y.classical_oracle();
        let words = [
            vec![YLetter::xp(0, 1), YLetter::xm(0, 2)],
            vec![YLetter::xp(1, 0), YLetter::xp(0, 1)],
            vec![YLetter::xm(1, 1), YLetter::xm(0, 0), YLetter::h(1, 1)],
        ];
        for w in words {
            assert!(y.classical_defect(&ue, &w).is_zero(), "{w:?}");
        }
    }
}
