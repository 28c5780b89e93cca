//! Small dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use super::Rational;

/// Inverts a square rational matrix, returning `None` when it is singular.
pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Rank of a rational matrix.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, piv);
        for r in rank + 1..rows {
            if !a[r][col].is_zero() {
                let factor = &a[r][col] / &a[rank][col];
                for c in col..cols {
                    let delta = &factor * &a[rank][c];
                    a[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}
