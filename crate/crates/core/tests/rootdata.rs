//! Root data and the supermatrix realization: the presentation, the
//! invariant form, the Casimir tensor and the current cobracket.

use num_traits::Zero;
use superyangian::exact::{rat, ratio};
use superyangian::rootdata::*;

fn generators(alg: &SuperMatrixAlg) -> Vec<GlElem> {
    let mut v = Vec::new();
    for i in 0..alg.rank() {
        v.push(alg.e(i).clone());
        v.push(alg.f(i).clone());
        v.push(alg.h(i).clone());
    }
    v
}

fn diagrams_up_to(len: usize) -> Vec<ParityDiagram> {
    (2..=len).flat_map(ParityDiagram::all_super_of_length).collect()
}

#[test]
fn realization_examples() {
    let alg = SuperMatrixAlg::parse("EEO").unwrap();
    assert_eq!(alg.bracket(alg.e(0), alg.f(0)), *alg.h(0));
    assert!(alg.bracket(alg.e(1), alg.e(1)).is_zero());
    let alg = SuperMatrixAlg::parse("EOEO").unwrap();
    let (e1, e2, e3) = (alg.e(0), alg.e(1), alg.e(2));
    assert!(alg.bracket(&alg.bracket(&alg.bracket(e1, e2), e3), e2).is_zero());
    // Without the outer bracket the element is a nonzero root vector.
    assert!(!alg.bracket(&alg.bracket(e1, e2), e3).is_zero());
}

#[test]
fn presentation_holds_for_all_diagrams_up_to_length_6() {
    for d in diagrams_up_to(6) {
        let alg = SuperMatrixAlg::new(RootSystem::new(d.clone())).unwrap();
        for (name, ok) in alg.check_presentation() {
            assert!(ok, "{d}: {name}");
        }
    }
}

#[test]
fn pairing_is_dual_on_root_vectors() {
    for d in diagrams_up_to(5) {
        let alg = SuperMatrixAlg::new(RootSystem::new(d.clone())).unwrap();
        let rs = alg.root_system();
        for a in rs.positive_roots() {
            // Each root space is spanned by a single matrix unit.
            assert_eq!(alg.root_e(a).entries().len(), 1);
            let (j, i) = a.eps_pair();
            assert!(!alg.root_e(a).get(j, i).is_zero());
            for b in rs.positive_roots() {
                let expected = if a == b { rat(1) } else { rat(0) };
                assert_eq!(alg.pair(alg.root_e(a), alg.root_f(b)), expected, "{d} {a} {b}");
            }
        }
        for (k, (dual, h)) in alg.cartan_pairs().iter().enumerate() {
            for (l, (_, h2)) in alg.cartan_pairs().iter().enumerate() {
                assert_eq!(alg.pair(dual, h2), if k == l { rat(1) } else { rat(0) });
            }
            assert_eq!(alg.parity(h), Some(0));
        }
        // Simple root vectors need no rescaling.
        for i in 0..alg.rank() {
            assert_eq!(*alg.f_scalar(&Root::simple(i)), rat(1));
        }
    }
}

#[test]
fn invariant_form_axioms() {
    let alg = SuperMatrixAlg::parse("EOEO").unwrap();
    let gens = generators(&alg);
    for x in &gens {
        for y in &gens {
            let px = alg.parity(x).unwrap();
            let py = alg.parity(y).unwrap();
            let s = if px & py == 1 { rat(-1) } else { rat(1) };
            assert_eq!(alg.pair(x, y), s.clone() * alg.pair(y, x));
            for z in &gens {
                let lhs = alg.pair(&alg.bracket(x, y), z) + s.clone() * alg.pair(y, &alg.bracket(x, z));
                assert!(lhs.is_zero());
            }
        }
    }
}

#[test]
fn decomposition_round_trip() {
    let alg = SuperMatrixAlg::parse("EEOO").unwrap();
    let rs = alg.root_system().clone();
    let x = alg.root_e(&Root::interval(0, 2)).scale(&ratio(3, 2)).add(alg.h(1)).add(alg.root_f(&Root::interval(1, 2)));
    let d = alg.decompose(&x).unwrap();
    assert_eq!(d.cartan, vec![rat(0), rat(1), rat(0)]);
    assert_eq!(d.e, vec![(Root::interval(0, 2), ratio(3, 2))]);
    assert_eq!(d.f, vec![(Root::interval(1, 2), rat(1))]);
    assert_eq!(rs.rank(), 3);
    // The identity matrix is central and lies in sl(2|2) but not in sl(2|1).
    let id = (0..4).fold(GlElem::zero(), |acc, k| acc.add(&GlElem::unit(k, k, rat(1))));
    assert!(alg.cartan_coords(&id).is_some());
    let small = SuperMatrixAlg::parse("EEO").unwrap();
    let id3 = (0..3).fold(GlElem::zero(), |acc, k| acc.add(&GlElem::unit(k, k, rat(1))));
    assert_eq!(small.decompose(&id3), Err(RootDataError::NotInSubalgebra));
}

#[test]
fn casimir_examples() {
    let alg = SuperMatrixAlg::parse("EEO").unwrap();
    assert_eq!(casimir_summands(&alg).len(), 8);
    assert_eq!(w_summands(&alg).len(), 6);
    let bi = Bialgebra::new(&alg);
    assert_eq!(bi.omega().tau(&alg), *bi.omega());
    assert!(bi.invariance_defect(alg.e(0)).is_zero());
    // A non-invariant tensor is detected.
    let half = LoopTensor::product(&[(alg.e(0), 0), (alg.f(0), 0)]);
    assert!(!half.act(&alg, alg.e(0), 0).is_zero());
}

#[test]
fn casimir_suite_up_to_length_4() {
    for d in diagrams_up_to(4) {
        let alg = SuperMatrixAlg::new(RootSystem::new(d.clone())).unwrap();
        let bi = Bialgebra::new(&alg);
        assert!(bi.omega().is_even(&alg), "{d}");
        assert_eq!(bi.omega().tau(&alg), *bi.omega(), "{d}");
        for x in generators(&alg) {
            assert!(bi.invariance_defect(&x).is_zero(), "{d}");
        }
    }
}

#[test]
fn cobracket_examples() {
    let alg = SuperMatrixAlg::parse("EEO").unwrap();
    let bi = Bialgebra::new(&alg);
    for x in generators(&alg) {
        assert!(bi.delta(&x, 0).is_zero());
    }
    let h1 = alg.h(0);
    let direct = bi.omega().bracket_slot(&alg, h1, 0, 0);
    assert_eq!(bi.delta(h1, 1), direct);
    assert!(!direct.is_zero());
    assert!(bi.co_antisymmetry_defect(Cobracket::Current, alg.e(0), 1).is_zero());
    // φ(a z⁰) reduces to ½[□a, w].
    let e1 = alg.e(0);
    let half_w = bi.w().act(&alg, e1, 0).scale(&ratio(1, 2));
    assert_eq!(bi.phi(e1, 0), half_w);
    assert!(bi.co_jacobi_defect(Cobracket::Loop, h1, 1).is_zero());
}

/// Independent oracle for the co-Jacobi check: expand `δ(e_1 u²)` by hand through
/// `[e_1 ⊗ 1, Ω](u + v)` and compare with the library.
#[test]
fn delta_squared_power_matches_hand_expansion() {
    let alg = SuperMatrixAlg::parse("EEO").unwrap();
    let bi = Bialgebra::new(&alg);
    let base = bi.delta(alg.e(0), 1);
    let mut expected = LoopTensor::zero();
    for (k, c) in base.terms() {
        let mut a = k.clone();
        a[0].power += 1;
        expected.add_term(a, c.clone());
        let mut b = k.clone();
        b[1].power += 1;
        expected.add_term(b, c.clone());
    }
    assert_eq!(bi.delta(alg.e(0), 2), expected);
}

#[test]
fn bialgebra_axioms_up_to_length_4() {
    for d in diagrams_up_to(4) {
        let alg = SuperMatrixAlg::new(RootSystem::new(d.clone())).unwrap();
        let bi = Bialgebra::new(&alg);
        let gens = generators(&alg);
        for x in &gens {
            for m in 0..=2 {
                assert!(bi.co_antisymmetry_defect(Cobracket::Current, x, m).is_zero(), "{d}");
                assert!(bi.co_jacobi_defect(Cobracket::Current, x, m).is_zero(), "{d}");
                for y in &gens {
                    for n in 0..=2 {
                        assert!(bi.cocycle_defect(Cobracket::Current, (x, m), (y, n)).is_zero(), "{d}");
                    }
                }
            }
        }
    }
}

#[test]
fn loop_cobracket_axioms_on_small_diagrams() {
    for d in ["EO", "EEO", "EOE", "EEOO"] {
        let alg = SuperMatrixAlg::parse(d).unwrap();
        let bi = Bialgebra::new(&alg);
        let gens = generators(&alg);
        for x in &gens {
            for m in -1..=1 {
                assert!(bi.co_antisymmetry_defect(Cobracket::Loop, x, m).is_zero(), "{d}");
                assert!(bi.co_jacobi_defect(Cobracket::Loop, x, m).is_zero(), "{d}");
                for y in &gens {
                    assert!(bi.cocycle_defect(Cobracket::Loop, (x, m), (y, 1)).is_zero(), "{d}");
                }
            }
        }
    }
}

/// The cocycle condition needs the sign `(−1)^{|x||y|}`: dropping it fails for two odd elements.
#[test]
fn unsigned_cocycle_fails_for_odd_pairs() {
    let alg = SuperMatrixAlg::parse("EEO").unwrap();
    let bi = Bialgebra::new(&alg);
    let (x, y) = (alg.e(1), alg.f(1));
    let lhs = bi.delta(&alg.bracket(x, y), 2);
    let unsigned = bi.delta(y, 1).act(&alg, x, 1).sub(&bi.delta(x, 1).act(&alg, y, 1));
    assert_ne!(lhs, unsigned);
}
