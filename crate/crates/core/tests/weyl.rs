//! Weyl group suites: the canonical decomposition on S₅, the action on
//! diagrams and weights, Coxeter relations and grades.

use std::collections::BTreeSet;

use proptest::prelude::*;
use superyangian::rootdata::ParityDiagram;
use superyangian::weyl::*;

/// Every tuple of `Σ_1 × … × Σ_{n−1}` recomposes to a different permutation, and all
/// of `S_n` is reached: existence and uniqueness of the canonical decomposition.
#[test]
fn canonical_decomposition_is_bijective_on_s5() {
    let n = 5;
    let mut tuples: Vec<Vec<ChainFactor>> = vec![Vec::new()];
    for k in 0..n - 1 {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..=k + 1).map(move |start| {
                    let mut t2 = t.clone();
                    t2.push(ChainFactor { k, start });
                    t2
                })
            })
            .collect();
    }
    assert_eq!(tuples.len(), 120);
    let images: BTreeSet<Perm> = tuples.iter().map(|t| recompose(n, t)).collect();
    assert_eq!(images.len(), 120);
    for w in Perm::all(n) {
        let f = canonical_decompose(&w);
        assert_eq!(recompose(n, &f), w);
        assert!(f.iter().enumerate().all(|(k, x)| x.k == k && x.start <= k + 1));
    }
}

#[test]
fn rho_is_a_homomorphism_on_s4() {
    let weights: Vec<Vec<i64>> = vec![vec![1, 0, 0, 0], vec![1, -1, 0, 0], vec![0, 2, -1, 3]];
    for ds in ["EEOO", "EOEO", "OEEE", "EEEE"] {
        let diag = ParityDiagram::parse(ds).unwrap();
        for a in Perm::all(4) {
            for b in Perm::all(4) {
                let ab = a.compose(&b);
                let lhs = act_on_basis(&ab, &diag).unwrap();
                let rhs = act_on_basis(&a, &act_on_basis(&b, &diag).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                for wt in &weights {
                    assert_eq!(act_on_weight(&ab, wt), act_on_weight(&a, &act_on_weight(&b, wt)));
                }
            }
        }
    }
}

#[test]
fn coxeter_relations_for_all_types_up_to_5() {
    for total in 2..=5 {
        for n_odd in 0..=total {
            let checks = check_coxeter(total - n_odd, n_odd);
            assert!(checks.iter().all(|c| c.pass), "({}, {n_odd})", total - n_odd);
            let wc = checks.iter().filter(|c| c.group == "Wc").count();
            assert!(wc >= total - 1);
        }
    }
}

#[test]
fn weyl_subgroup_orders_and_grades() {
    for (np, nm) in [(1, 1), (2, 1), (2, 2), (3, 2), (1, 3)] {
        let st = ParityDiagram::distinguished(np, nm).unwrap();
        let members = weyl_members(&st);
        let fact = |k: usize| (1..=k).product::<usize>();
        assert_eq!(members.len(), fact(np) * fact(nm));
        assert!(members.iter().all(|w| grade(w, &st).unwrap() == 0));
        // Closed under composition.
        for a in &members {
            for b in &members {
                assert!(is_weyl_member(&a.compose(b), &st));
            }
        }
    }
}

/// The grade is additive exactly when all simple reflections carry the same grade;
/// on a standard diagram with both parities and at least three points it is not.
#[test]
fn grade_additivity_is_decided_by_simple_grades() {
    for n_odd in 0..=4 {
        let diag = ParityDiagram::new([vec![0u8; 4 - n_odd], vec![1u8; n_odd]].concat()).unwrap();
        let uniform = (0..3).map(|i| simple_grade(&diag, i)).collect::<BTreeSet<_>>().len() == 1;
        let mut additive = true;
        for a in Perm::all(4) {
            for b in Perm::all(4) {
                let g = grade(&a.compose(&b), &diag).unwrap();
                additive &= g == grade(&a, &diag).unwrap() ^ grade(&b, &diag).unwrap();
            }
        }
        assert_eq!(additive, uniform, "{diag}");
    }
    // The alternating diagram has all simple reflections odd, so its grade is the sign character.
    let alt = ParityDiagram::parse("EOEO").unwrap();
    for w in Perm::all(4) {
        let inversions =
            (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| w.apply(i) > w.apply(j)).count();
        assert_eq!(grade(&w, &alt).unwrap(), (inversions % 2) as u8);
    }
}

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::new(v).unwrap())
}

proptest! {
    #[test]
    fn decompose_recompose_round_trip(w in arb_perm(7)) {
        prop_assert_eq!(recompose(7, &canonical_decompose(&w)), w);
    }

    #[test]
    fn action_is_a_homomorphism(a in arb_perm(6), b in arb_perm(6), bits in proptest::collection::vec(0u8..2, 6)) {
        let diag = ParityDiagram::new(bits).unwrap();
        let lhs = act_on_basis(&a.compose(&b), &diag).unwrap();
        let rhs = act_on_basis(&a, &act_on_basis(&b, &diag).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
