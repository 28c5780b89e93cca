//! Exact linear algebra on homogeneous components of the positive half.
//!
//! A cell is the span of all words in the simple generators `x⁺_{i,r}` (times
//! powers of ħ) with a fixed weight and a fixed ℕ₀-degree. The defining
//! relations of the positive half, multiplied on both sides by words, span
//! the relation subspace; ordered PBW monomials must give a basis of the
//! quotient, which is checked when the cell is built.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::exact::{linalg, ratio, sign, Rational};

/// A simple generator `x_{i,r}` as `(i, r)`.
pub(crate) type Simple = (u8, u8);
/// A word in simple generators.
pub(crate) type Word = Vec<Simple>;
/// A PBW letter of the positive half as `(lo, hi, level)`.
pub(crate) type RootLetter = (u8, u8, u8);
/// A linear combination of `ħ^k · word`.
pub(crate) type WordVec = BTreeMap<(u32, Word), Rational>;

/// Diagram data needed to write down the relations.
#[derive(Clone, Debug)]
pub(crate) struct CellData {
    pub parity: Vec<u8>,
    pub cartan: Vec<Vec<i64>>,
}

impl CellData {
    fn rank(&self) -> usize {
        self.parity.len()
    }

    pub fn letter_parity(&self, l: RootLetter) -> u8 {
        (l.0..=l.1).fold(0, |acc, i| acc ^ self.parity[i as usize])
    }

    /// Expansion of the PBW letter `x_{[lo..hi], r}` into words.
    pub fn expand_letter(&self, l: RootLetter) -> WordVec {
        let (lo, hi, r) = l;
        let mut acc = single(0, vec![(lo, r)]);
        let mut p_acc = self.parity[lo as usize];
        for k in lo + 1..=hi {
            let y = single(0, vec![(k, 0)]);
            let p_y = self.parity[k as usize];
            acc = commutator(&acc, p_acc, &y, p_y, &Rational::one());
            p_acc ^= p_y;
        }
        acc
    }
}

fn single(k: u32, w: Word) -> WordVec {
    let mut v = WordVec::new();
    v.insert((k, w), Rational::one());
    v
}

fn add_into(acc: &mut WordVec, key: (u32, Word), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(key.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

/// Concatenation product of word combinations.
pub(crate) fn product(a: &WordVec, b: &WordVec) -> WordVec {
    let mut out = WordVec::new();
    for ((ka, wa), ca) in a {
        for ((kb, wb), cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            add_into(&mut out, (ka + kb, w), ca * cb);
        }
    }
    out
}

/// `ab − s(−1)^{|a||b|} ba`: the supercommutator for `s = 1`, the anticommutator for `s = −1`.
fn commutator(a: &WordVec, pa: u8, b: &WordVec, pb: u8, s: &Rational) -> WordVec {
    let mut out = product(a, b);
    let c = -(s * sign(u32::from(pa & pb)));
    for (k, v) in product(b, a) {
        add_into(&mut out, k, &c * v);
    }
    out
}

fn gen(i: usize, r: u32) -> WordVec {
    single(0, vec![(i as u8, r as u8)])
}

/// One relation of the positive half, with its weight and degree.
struct Relation {
    weight: Vec<u8>,
    degree: u32,
    body: WordVec,
}

fn weight_of(rank: usize, idx: &[usize]) -> Vec<u8> {
    let mut w = vec![0u8; rank];
    for &i in idx {
        w[i] += 1;
    }
    w
}

/// All relation instances of weight `≤ weight` and degree `≤ degree`.
fn relations(data: &CellData, weight: &[u8], degree: u32) -> Vec<Relation> {
    let n = data.rank();
    let fits = |w: &[u8], d: u32| d <= degree && w.iter().zip(weight).all(|(a, b)| a <= b);
    let one = Rational::one();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = data.cartan[i][j];
            let (pi, pj) = (data.parity[i], data.parity[j]);
            let w = weight_of(n, &[i, j]);
            if c != 0 && !(i == j && pi == 1) {
                // [x_{i,r+1}, x_{j,s}] − [x_{i,r}, x_{j,s+1}] − (c/2) ħ {x_{i,r}, x_{j,s}}
                for r in 0..degree {
                    for s in 0..degree - r {
                        if !fits(&w, r + s + 1) {
                            continue;
                        }
                        let mut body = commutator(&gen(i, r + 1), pi, &gen(j, s), pj, &one);
                        for (k, v) in commutator(&gen(i, r), pi, &gen(j, s + 1), pj, &one) {
                            add_into(&mut body, k, -v);
                        }
                        let anti = commutator(&gen(i, r), pi, &gen(j, s), pj, &-one.clone());
                        let coeff = -ratio(c, 2);
                        for ((k, word), v) in anti {
                            add_into(&mut body, (k + 1, word), &coeff * v);
                        }
                        out.push(Relation { weight: w.clone(), degree: r + s + 1, body });
                    }
                }
            }
            if c == 0 && i <= j {
                for r in 0..=degree {
                    for s in 0..=degree - r {
                        if (i == j && s < r) || !fits(&w, r + s) {
                            continue;
                        }
                        let body = commutator(&gen(i, r), pi, &gen(j, s), pj, &one);
                        out.push(Relation { weight: w.clone(), degree: r + s, body });
                    }
                }
            }
            if pi == 0 && (j + 1 == i || i + 1 == j) {
                let w3 = weight_of(n, &[i, i, j]);
                for r in 0..=degree {
                    for s in r..=degree {
                        for t in 0..=degree {
                            if !fits(&w3, r + s + t) {
                                continue;
                            }
                            let inner_s = commutator(&gen(i, s), 0, &gen(j, t), pj, &one);
                            let inner_r = commutator(&gen(i, r), 0, &gen(j, t), pj, &one);
                            let mut body = commutator(&gen(i, r), 0, &inner_s, pj, &one);
                            for (k, v) in commutator(&gen(i, s), 0, &inner_r, pj, &one) {
                                add_into(&mut body, k, v);
                            }
                            out.push(Relation { weight: w3.clone(), degree: r + s + t, body });
                        }
                    }
                }
            }
        }
    }
    for j in 1..n.saturating_sub(1) {
        if data.parity[j] != 1 {
            continue;
        }
        let w4 = weight_of(n, &[j - 1, j, j, j + 1]);
        for r in 0..=degree {
            for s in 0..=degree - r {
                if !fits(&w4, r + s) {
                    continue;
                }
                let (pa, pb, pc) = (data.parity[j - 1], 1u8, data.parity[j + 1]);
                let left = commutator(&gen(j - 1, r), pa, &gen(j, 0), pb, &one);
                let right = commutator(&gen(j, 0), pb, &gen(j + 1, s), pc, &one);
                let body = commutator(&left, pa ^ pb, &right, pb ^ pc, &one);
                out.push(Relation { weight: w4.clone(), degree: r + s, body });
            }
        }
    }
    out
}

/// Distinct arrangements of a multiset of simple indices.
fn arrangements(weight: &[u8]) -> Vec<Vec<u8>> {
    fn go(rest: &mut Vec<u8>, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if rest.iter().all(|&m| m == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            if rest[i] > 0 {
                rest[i] -= 1;
                cur.push(i as u8);
                go(rest, cur, out);
                cur.pop();
                rest[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut weight.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Level vectors of the given length summing to `total`.
fn compositions(len: usize, total: u32) -> Vec<Vec<u8>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(len - 1, total - first) {
            rest.insert(0, first as u8);
            out.push(rest);
        }
    }
    out
}

/// All words of the given weight with level sum `levels`.
fn words(weight: &[u8], levels: u32) -> Vec<Word> {
    let arr = arrangements(weight);
    let len: usize = weight.iter().map(|&m| m as usize).sum();
    let comps = compositions(len, levels);
    let mut out = Vec::with_capacity(arr.len() * comps.len());
    for a in &arr {
        for c in &comps {
            out.push(a.iter().copied().zip(c.iter().copied()).collect());
        }
    }
    out
}

fn inversions(w: &[Simple]) -> usize {
    let mut n = 0;
    for p in 0..w.len() {
        for q in p + 1..w.len() {
            if w[p] > w[q] {
                n += 1;
            }
        }
    }
    n
}

/// Ordered PBW monomials of a given weight and level sum.
pub(crate) fn pbw_monomials(data: &CellData, weight: &[u8], levels: u32) -> Vec<Vec<RootLetter>> {
    let n = data.rank();
    let mut alphabet = Vec::new();
    for lo in 0..n {
        for hi in lo..n {
            if (lo..=hi).all(|k| weight[k] > 0) {
                for r in 0..=levels {
                    alphabet.push((lo as u8, hi as u8, r as u8));
                }
            }
        }
    }
    alphabet.sort();
    fn go(
        data: &CellData,
        alphabet: &[RootLetter],
        start: usize,
        rest: &mut Vec<u8>,
        budget: u32,
        cur: &mut Vec<RootLetter>,
        out: &mut Vec<Vec<RootLetter>>,
    ) {
        if rest.iter().all(|&m| m == 0) {
            if budget == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for idx in start..alphabet.len() {
            let l = alphabet[idx];
            if u32::from(l.2) > budget || (l.0..=l.1).any(|k| rest[k as usize] == 0) {
                continue;
            }
            let odd = data.letter_parity(l) == 1;
            for k in l.0..=l.1 {
                rest[k as usize] -= 1;
            }
            cur.push(l);
            go(data, alphabet, if odd { idx + 1 } else { idx }, rest, budget - u32::from(l.2), cur, out);
            cur.pop();
            for k in l.0..=l.1 {
                rest[k as usize] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(data, &alphabet, 0, &mut weight.to_vec(), levels, &mut Vec::new(), &mut out);
    out
}

/// Sparse row with strictly increasing column indices.
type Row = Vec<(usize, Rational)>;

/// Outcome of building a cell that does not certify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CertificationFailure {
    pub quotient_dimension: usize,
    pub pbw_count: usize,
}

/// A certified homogeneous component of the positive half.
#[derive(Debug)]
pub(crate) struct Cell {
    columns: HashMap<(u32, Word), usize>,
    pivots: HashMap<usize, Row>,
    free: HashMap<usize, usize>,
    basis: Vec<(u32, Vec<RootLetter>)>,
    inverse: Vec<Vec<Rational>>,
    word_count: usize,
}

impl Cell {
    /// Builds and certifies the cell of the given weight and degree.
    pub fn build(data: &CellData, weight: &[u8], degree: u32) -> Result<Cell, CertificationFailure> {
        let mut cols: Vec<(usize, usize, (u32, Word))> = Vec::new();
        for k in 0..=degree {
            for w in words(weight, degree - k) {
                cols.push(((degree - k) as usize, inversions(&w), (k, w)));
            }
        }
        cols.sort();
        let columns: HashMap<(u32, Word), usize> =
            cols.into_iter().enumerate().map(|(i, (_, _, key))| (key, i)).collect();
        let word_count = columns.len();
        let mut cell = Cell {
            columns,
            pivots: HashMap::new(),
            free: HashMap::new(),
            basis: Vec::new(),
            inverse: Vec::new(),
            word_count,
        };
        for rel in relations(data, weight, degree) {
            let rest: Vec<u8> = weight.iter().zip(&rel.weight).map(|(a, b)| a - b).collect();
            let budget = degree - rel.degree;
            for levels in 0..=budget {
                for w in words(&rest, levels) {
                    for split in 0..=w.len() {
                        let mut row = BTreeMap::new();
                        for ((k, body), c) in &rel.body {
                            let mut full = w[..split].to_vec();
                            full.extend_from_slice(body);
                            full.extend_from_slice(&w[split..]);
                            let col = cell.columns[&(k + budget - levels, full)];
                            *row.entry(col).or_insert_with(Rational::zero) += c;
                        }
                        row.retain(|_, c: &mut Rational| !c.is_zero());
                        cell.insert(row);
                    }
                }
            }
        }
        let mut free_cols: Vec<usize> = (0..word_count).filter(|c| !cell.pivots.contains_key(c)).collect();
        free_cols.sort();
        cell.free = free_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        for k in 0..=degree {
            for m in pbw_monomials(data, weight, degree - k) {
                cell.basis.push((k, m));
            }
        }
        let failure = CertificationFailure { quotient_dimension: free_cols.len(), pbw_count: cell.basis.len() };
        if cell.basis.len() != free_cols.len() {
            return Err(failure);
        }
        let mut matrix = Vec::with_capacity(cell.basis.len());
        for (k, m) in &cell.basis {
            let mut v = single(*k, Vec::new());
            for &l in m {
                v = product(&v, &data.expand_letter(l));
            }
            matrix.push(cell.remainder(&v));
        }
        cell.inverse = linalg::invert(&matrix).ok_or(failure)?;
        Ok(cell)
    }

    /// Number of words spanning the cell.
    pub fn word_count(&self) -> usize {
        self.word_count
    }

    /// Dimension of the quotient, equal to the PBW count.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn insert(&mut self, row: BTreeMap<usize, Rational>) {
        let mut row = row;
        while let Some((&lead, _)) = row.last_key_value() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = row.remove(&lead).expect("lead present");
                    for (col, v) in &p[..p.len() - 1] {
                        let e = row.entry(*col).or_insert_with(Rational::zero);
                        *e -= &c * v;
                        if e.is_zero() {
                            row.remove(col);
                        }
                    }
                }
                None => {
                    let inv = row[&lead].recip();
                    let stored: Row = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
                    self.pivots.insert(lead, stored);
                    return;
                }
            }
        }
    }

    /// Reduces a word combination modulo the relations onto the free columns.
    fn remainder(&self, v: &WordVec) -> Vec<Rational> {
        let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
        for (key, c) in v {
            let col = self.columns[key];
            let e = row.entry(col).or_insert_with(Rational::zero);
            *e += c;
        }
        row.retain(|_, c| !c.is_zero());
        let mut out = vec![Rational::zero(); self.free.len()];
        while let Some((lead, c)) = row.pop_last() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    for (col, v) in &p[..p.len() - 1] {
                        let e = row.entry(*col).or_insert_with(Rational::zero);
                        *e -= &c * v;
                        if e.is_zero() {
                            row.remove(col);
                        }
                    }
                }
                None => out[self.free[&lead]] = c,
            }
        }
        out
    }

    /// Coordinates of a word combination in the PBW basis, as `(ħ-power, monomial, coefficient)`.
    pub fn reduce(&self, v: &WordVec) -> Vec<(u32, Vec<RootLetter>, Rational)> {
        let rem = self.remainder(v);
        let mut out = Vec::new();
        for (b, (k, m)) in self.basis.iter().enumerate() {
            let mut c = Rational::zero();
            for (f, r) in rem.iter().enumerate() {
                if !r.is_zero() {
                    c += r * &self.inverse[f][b];
                }
            }
            if !c.is_zero() {
                out.push((*k, m.clone(), c));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(parity: Vec<u8>, cartan: Vec<Vec<i64>>) -> CellData {
        CellData { parity, cartan }
    }

    #[test]
    fn sl2_positive_half_quadratic_cell() {
        // Y⁺(sl2): [x_1, x_0] = ħ x_0² with c = 2.
        let d = data(vec![0], vec![vec![2]]);
        let cell = Cell::build(&d, &[2], 1).unwrap();
        let v = product(&gen(0, 1), &gen(0, 0));
        let red = cell.reduce(&v);
        let x0 = (0u8, 0u8, 0u8);
        let x1 = (0u8, 0u8, 1u8);
        let mut expected = vec![(0, vec![x0, x1], Rational::one()), (1, vec![x0, x0], Rational::one())];
        expected.sort();
        let mut got = red;
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn odd_simple_generators_anticommute() {
        let d = data(vec![1], vec![vec![0]]);
        let cell = Cell::build(&d, &[2], 1).unwrap();
        let red = cell.reduce(&product(&gen(0, 1), &gen(0, 0)));
        assert_eq!(red, vec![(0, vec![(0, 0, 0), (0, 0, 1)], -Rational::one())]);
        assert_eq!(cell.dimension(), 1);
    }

    #[test]
    fn word_counts() {
        assert_eq!(arrangements(&[2, 1]).len(), 3);
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(words(&[1, 1], 1).len(), 4);
    }
}
