//! The enveloping algebra of the current algebra: the positive half of the
//! Casimir, super Jacobi identities and PBW counts.

use proptest::prelude::*;
use superyangian::enveloping::*;
use superyangian::exact::rat;
use superyangian::rootdata::{ParityDiagram, Root, SuperMatrixAlg};

fn diagrams_up_to(len: usize) -> Vec<ParityDiagram> {
    (2..=len).flat_map(ParityDiagram::all_super_of_length).collect()
}

fn algebra(d: &ParityDiagram) -> UEAlgebra {
    UEAlgebra::for_casimir(SuperMatrixAlg::new(superyangian::rootdata::RootSystem::new(d.clone())).unwrap())
}

fn all_letters(u: &UEAlgebra, max_level: u32) -> Vec<ULetter> {
    let rs = u.matrix_algebra().root_system();
    let mut out = Vec::new();
    for level in 0..=max_level {
        for r in rs.positive_roots() {
            out.push(u.f(r, level));
            out.push(u.e(r, level));
        }
        for i in 0..u.cartan_letters() {
            out.push(u.h(i, level));
        }
    }
    out
}

#[test]
fn omega_plus_lemma_up_to_length_4() {
    for d in diagrams_up_to(4) {
        let u = algebra(&d);
        let op = u.omega_plus().unwrap();
        for i in 0..d.rank() {
            let h = UEElement::letter(u.h(i, 0));
            let e = UEElement::letter(u.e(&Root::simple(i), 0));
            let f = UEElement::letter(u.f(&Root::simple(i), 0));
            assert!(u.tensor_bracket(&u.boxed(&h), &op).unwrap().is_zero(), "{d} h{i}");
            let lhs = u.tensor_bracket(&u.boxed(&e), &op).unwrap();
            assert_eq!(lhs, Tensor2::pure(&e, &h).scale(&rat(-1)), "{d} x+{i}");
            let lhs = u.tensor_bracket(&u.boxed(&f), &op).unwrap();
            assert_eq!(lhs, Tensor2::pure(&h, &f), "{d} x-{i}");
        }
    }
}

#[test]
fn omega_plus_and_its_flip_give_casimir_plus_cartan() {
    for d in diagrams_up_to(4) {
        let u = algebra(&d);
        let op = u.omega_plus().unwrap();
        let lhs = op.add(&u.tau(&op));
        let rhs = u.omega().unwrap().add(&u.omega_cartan().unwrap());
        assert_eq!(lhs, rhs, "{d}");
    }
}

#[test]
fn casimir_is_invariant_in_the_enveloping_algebra() {
    for d in diagrams_up_to(4) {
        let u = algebra(&d);
        let om = u.omega().unwrap();
        for l in all_letters(&u, 0) {
            let x = UEElement::letter(l);
            assert!(u.tensor_bracket(&u.boxed(&x), &om).unwrap().is_zero(), "{d} {}", u.render_letter(&l));
        }
    }
}

#[test]
fn super_jacobi_on_letters() {
    for d in ["EEO", "EOE", "EOO", "EEOO", "EOEO"] {
        let u = algebra(&d.parse().unwrap());
        let letters = all_letters(&u, 1);
        for a in &letters {
            for b in &letters {
                for c in letters.iter().step_by(3) {
                    let (x, y, z) = (UEElement::letter(*a), UEElement::letter(*b), UEElement::letter(*c));
                    let (px, py, pz) = (u.letter_parity(a), u.letter_parity(b), u.letter_parity(c));
                    let br = |p: &UEElement, q: &UEElement| u.supercommutator(p, q).unwrap();
                    let lhs = br(&x, &br(&y, &z));
                    let rhs = br(&br(&x, &y), &z)
                        .add(&br(&y, &br(&x, &z)).scale(&superyangian::exact::sign(u32::from(px & py))));
                    assert_eq!(lhs, rhs, "{d} {a} {b} {c} parities {px}{py}{pz}");
                }
            }
        }
    }
}

/// Number of PBW monomials of length exactly `k` in `e` even and `o` odd letters.
fn pbw_count(e: usize, o: usize, k: usize) -> usize {
    // Coefficient of t^k in (1+t)^o / (1-t)^e.
    let mut poly = vec![0usize; k + 1];
    poly[0] = 1;
    for _ in 0..o {
        for j in (1..=k).rev() {
            poly[j] += poly[j - 1];
        }
    }
    for _ in 0..e {
        for j in 1..=k {
            poly[j] += poly[j - 1];
        }
    }
    poly[k]
}

#[test]
fn pbw_monomials_are_fixed_and_counted() {
    for d in ["EEO", "EOEO"] {
        let u = algebra(&d.parse().unwrap());
        let letters = all_letters(&u, 0);
        let odd = letters.iter().filter(|l| u.letter_parity(l) == 1).count();
        let even = letters.len() - odd;
        let mut sorted = letters.clone();
        sorted.sort();
        for k in 0..=3 {
            let mut count = 0;
            let mut stack: Vec<Vec<usize>> = vec![vec![]];
            while let Some(idx) = stack.pop() {
                if idx.len() == k {
                    let word: Vec<ULetter> = idx.iter().map(|&i| sorted[i]).collect();
                    assert_eq!(u.normal_form(&word), UEElement::monomial(word.clone(), rat(1)));
                    count += 1;
                    continue;
                }
                let start = idx.last().copied().unwrap_or(0);
                for i in start..sorted.len() {
                    if idx.last() == Some(&i) && u.letter_parity(&sorted[i]) == 1 {
                        continue;
                    }
                    let mut n = idx.clone();
                    n.push(i);
                    stack.push(n);
                }
            }
            assert_eq!(count, pbw_count(even, odd, k), "{d} k={k}");
        }
    }
}

fn word_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(a in word_strategy(30), b in word_strategy(30), c in word_strategy(30)) {
        let u = algebra(&"EOEO".parse().unwrap());
        let letters = all_letters(&u, 1);
        let el = |w: &[usize]| u.normal_form(&w.iter().map(|&i| letters[i % letters.len()]).collect::<Vec<_>>());
        let (x, y, z) = (el(&a), el(&b), el(&c));
        prop_assert_eq!(u.mul(&u.mul(&x, &y), &z), u.mul(&x, &u.mul(&y, &z)));
    }

    #[test]
    fn tensor_product_is_associative(a in word_strategy(20), b in word_strategy(20), c in word_strategy(20)) {
        let u = algebra(&"EEO".parse().unwrap());
        let letters = all_letters(&u, 0);
        let el = |w: &[usize]| {
            let (l, r) = w.split_at(w.len() / 2);
            let f = |s: &[usize]| u.normal_form(&s.iter().map(|&i| letters[i % letters.len()]).collect::<Vec<_>>());
            Tensor2::pure(&f(l), &f(r))
        };
        let (x, y, z) = (el(&a), el(&b), el(&c));
        prop_assert_eq!(u.tensor_mul(&u.tensor_mul(&x, &y), &z), u.tensor_mul(&x, &u.tensor_mul(&y, &z)));
    }
}

#[test]
fn tensor_sign_examples() {
    let u = algebra(&"EEO".parse().unwrap());
    let x = UEElement::letter(u.e(&Root::simple(1), 0));
    let y = UEElement::letter(u.f(&Root::simple(1), 0));
    let one = UEElement::one();
    // (1 ⊗ x)(y ⊗ 1) = -(y ⊗ x) for odd x, y.
    let got = u.tensor_mul(&Tensor2::pure(&one, &x), &Tensor2::pure(&y, &one));
    assert_eq!(got, Tensor2::pure(&y, &x).scale(&rat(-1)));
    assert_eq!(u.tau(&Tensor2::pure(&x, &y)), Tensor2::pure(&y, &x).scale(&rat(-1)));
}
