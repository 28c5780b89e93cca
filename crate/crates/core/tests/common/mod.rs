//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use superyangian::exact::{factorial, rat, ratio, HPoly, Rational, TruncSeries};
use superyangian::loopmap::Current;
use superyangian::yangian::{monomial_levels, YLetter, Yangian};

/// Bernoulli numbers from `Σ_{k<m+1} C(m+1,k) B_k = 0`.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=n {
        let mut s = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += factorial(m as u32 + 1) / (factorial(k as u32) * factorial((m + 1 - k) as u32)) * bk;
        }
        b.push(-s / rat(m as i64 + 1));
    }
    b
}

/// Coefficients of `G(v)` in closed form: `−B_p / (p · p!)` for even `p > 0`.
pub fn g_from_bernoulli(order: usize) -> Vec<Rational> {
    let b = bernoulli(order);
    (0..=order)
        .map(|p| if p > 0 && p % 2 == 0 { -(&b[p]) / (rat(p as i64) * factorial(p as u32)) } else { Rational::zero() })
        .collect()
}

/// `2 sinh(v/2) / v = Σ v^{2k} / (4^k (2k+1)!)` up to `order`.
pub fn sinh_quotient(order: u32) -> TruncSeries {
    TruncSeries::from_terms(
        &["v"],
        order,
        (0..=order / 2).map(|k| (vec![2 * k], Rational::one() / (rat(4i64.pow(k)) * factorial(2 * k + 1)))),
    )
}

/// A two-variable series without constant term for round-trip checks.
pub fn sample_series(cap: u32) -> TruncSeries {
    TruncSeries::from_terms(
        &["u", "v"],
        cap,
        [
            (vec![1, 0], rat(1)),
            (vec![0, 1], rat(2)),
            (vec![1, 1], ratio(-1, 3)),
            (vec![0, 3], rat(1)),
            (vec![4, 0], ratio(5, 7)),
        ],
    )
}

/// Direct expansion of `exp(±ħH₀/2) exp(±(q−q⁻¹) Σ_{s≥1} H_{±s} z^s)` in the variables
/// `[hbar, z, H0, H1, …, H5]`, read off at `z^r` and sorted into modes.
pub fn direct_current(current: Current, r: u32, order: u32) -> BTreeMap<Vec<i64>, HPoly> {
    let vars = ["hbar", "z", "H0", "H1", "H2", "H3", "H4", "H5"];
    let cap = order + r + order;
    let s = match current {
        Current::Psi => 1i64,
        Current::Phi => -1,
    };
    let hbar = TruncSeries::var(&vars, cap, "hbar").unwrap();
    let z = TruncSeries::var(&vars, cap, "z").unwrap();
    // q − q⁻¹ = 2 sinh(ħ/2)
    let mut qd = TruncSeries::zero(&vars, cap);
    for k in (1..=order).step_by(2) {
        qd = qd.add(&hbar.pow(k).scale(&(Rational::one() / (rat(2i64.pow(k - 1)) * factorial(k))))).unwrap();
    }
    let mut sum = TruncSeries::zero(&vars, cap);
    for m in 1..=5u32 {
        let h = TruncSeries::var(&vars, cap, &format!("H{m}")).unwrap();
        sum = sum.add(&h.mul(&z.pow(m)).unwrap()).unwrap();
    }
    let h0 = TruncSeries::var(&vars, cap, "H0").unwrap();
    let front = hbar.mul(&h0).unwrap().scale(&ratio(s, 2)).exp().unwrap();
    let body = qd.mul(&sum).unwrap().scale(&rat(s)).exp().unwrap();
    let full = front.mul(&body).unwrap();
    let mut out = BTreeMap::<Vec<i64>, HPoly>::new();
    for (e, c) in full.terms() {
        if e[1] != r || e[0] > order {
            continue;
        }
        let mut key = Vec::new();
        for (v, &p) in e[2..].iter().enumerate() {
            key.extend(std::iter::repeat(s * v as i64).take(p as usize));
        }
        key.sort();
        *out.entry(key).or_default() += &HPoly::monomial(c.clone(), e[0] as usize);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Orbits under reversal and, for balanced all-odd patterns, the parity flip,
/// computed on bit vectors by repeated closure.
pub fn oracle_classes(n_even: usize, n_odd: usize) -> BTreeSet<BTreeSet<Vec<u8>>> {
    let len = n_even + n_odd;
    let all: Vec<Vec<u8>> = (0u32..(1 << len))
        .map(|m| (0..len).map(|k| ((m >> k) & 1) as u8).collect::<Vec<u8>>())
        .filter(|p| p.iter().filter(|&&b| b == 1).count() == n_odd)
        .collect();
    let all_odd = |p: &Vec<u8>| p.windows(2).all(|w| w[0] != w[1]);
    let mut classes = BTreeSet::new();
    for p in &all {
        let mut orbit: BTreeSet<Vec<u8>> = BTreeSet::from([p.clone()]);
        loop {
            let mut next = orbit.clone();
            for q in &orbit {
                next.insert(q.iter().rev().copied().collect());
                if n_even == n_odd && all_odd(q) {
                    next.insert(q.iter().map(|b| 1 - b).collect());
                }
            }
            if next == orbit {
                break;
            }
            orbit = next;
        }
        classes.insert(orbit);
    }
    classes
}

/// Number of parity changes between neighbouring entries.
pub fn odd_simple_count(parities: &[u8]) -> usize {
    parities.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A random word in the PBW letters whose levels fit the degree cap.
pub fn random_word(y: &Yangian, rng: &mut ChaCha8Rng, max_len: usize) -> Vec<YLetter> {
    let alphabet = y.alphabet(y.cap());
    loop {
        let len = rng.gen_range(1..=max_len);
        let w: Vec<YLetter> = (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
        if monomial_levels(&w) <= y.cap() {
            return w;
        }
    }
}
