//! Scalar series identities, the Cartan current expansions and the images of
//! the loop relations under `Φ`, each compared with an independent oracle.

use num_traits::{One, Zero};
use proptest::prelude::*;
use superyangian::exact::{factorial, rat, ratio, HPoly, Rational, TruncSeries};
use superyangian::loopmap::{
    cartan_mul, check_ge_identity, g_coefficients, g_series, hbar_over_q_difference, qnumber_series, to_hpoly, Current,
    CurrentExpansion, LoopError, LoopGenerator, LoopInstance, LoopMap, LoopRelationId, Sign,
};
use superyangian::yangian::{Caps, Kind, YElement, YLetter, Yangian};

mod common;
use common::{bernoulli, direct_current, sample_series};

#[test]
fn g_matches_the_bernoulli_form() {
    let order = 12;
    let b = bernoulli(order);
    let g = g_coefficients(order as u32).unwrap();
    for (p, gp) in g.iter().enumerate() {
        let expected =
            if p > 0 && p % 2 == 0 { -(&b[p]) / (rat(p as i64) * factorial(p as u32)) } else { Rational::zero() };
        assert_eq!(gp, &expected, "v^{p}");
    }
    assert_eq!(g[2], ratio(-1, 24));
    assert_eq!(g[4], ratio(1, 2880));
}

#[test]
fn g_exponentiates_to_the_inverse_of_the_sinh_quotient() {
    let order = 12;
    let g = g_series(order).unwrap();
    // 2 sinh(v/2) / v = Σ v^{2k} / (4^k (2k+1)!)
    let sinh = TruncSeries::from_terms(
        &["v"],
        order,
        (0..=order / 2).map(|k| (vec![2 * k], Rational::one() / (rat(4i64.pow(k)) * factorial(2 * k + 1)))),
    );
    assert_eq!(g.exp().unwrap().mul(&sinh).unwrap(), sinh.one_like());
}

#[test]
fn g_order_below_two_is_refused() {
    assert!(matches!(g_series(1), Err(LoopError::Order { min: 2, got: 1 })));
}

#[test]
fn exp_log_and_sqrt_round_trips_at_order_twelve() {
    let f = sample_series(12);
    let one = f.one_like();
    assert_eq!(f.exp().unwrap().log().unwrap(), f);
    let unit = one.add(&f).unwrap();
    assert_eq!(unit.log().unwrap().exp().unwrap(), unit);
    let root = unit.sqrt_unit().unwrap();
    assert_eq!(root.mul(&root).unwrap(), unit);
    let h = hbar_over_q_difference(12).unwrap();
    let s = superyangian::loopmap::sqrt_hbar_over_q_difference(12).unwrap();
    assert_eq!(s.mul(&s).unwrap(), h);
}

#[test]
fn qnumbers_against_the_power_sum() {
    // [n]_q = Σ_{k=0}^{n−1} q^{n−1−2k} with q = e^{ħ/2}
    let cap = 8;
    for n in 1..=4i64 {
        let mut expected = TruncSeries::zero(&["hbar"], cap);
        for k in 0..n {
            let e = ratio(n - 1 - 2 * k, 2);
            let mut term = TruncSeries::zero(&["hbar"], cap);
            for p in 0..=cap {
                term.add_term(vec![p], e.pow(p as i32) / factorial(p));
            }
            expected = expected.add(&term).unwrap();
        }
        assert_eq!(qnumber_series(n, cap).unwrap(), expected, "[{n}]_q");
        assert!(qnumber_series(n, cap).unwrap().add(&qnumber_series(-n, cap).unwrap()).unwrap().is_zero());
    }
    assert_eq!(qnumber_series(2, 4).unwrap().coeff(&[2]), ratio(1, 4));
}

#[test]
fn ge_identity_holds_for_every_admissible_shift() {
    for a in [rat(1), rat(-1), ratio(1, 2), ratio(-1, 2), rat(0)] {
        for sign in [Sign::Plus, Sign::Minus] {
            let report = check_ge_identity(&a, sign, 1, 8).unwrap();
            assert!(report.holds, "a = {a}, {sign:?}: {} vs {}", report.lhs, report.rhs);
        }
    }
}

#[test]
fn ge_identity_refuses_parity_minus_one() {
    assert_eq!(check_ge_identity(&rat(1), Sign::Plus, -1, 8).unwrap_err(), LoopError::InadmissibleParity);
}

#[test]
fn partition_formulas_match_the_direct_expansion() {
    let order = 6;
    for current in [Current::Psi, Current::Phi] {
        for r in 0..=5 {
            let ours = CurrentExpansion::new(current, r).expand(order).unwrap();
            assert_eq!(ours, direct_current(current, r, order), "{current:?} mode {r}");
        }
    }
}

#[test]
fn first_currents_in_closed_form() {
    let psi0 = CurrentExpansion::new(Current::Psi, 0).expand(4).unwrap();
    for n in 0..=4usize {
        let c = HPoly::monomial(Rational::one() / (factorial(n as u32) * rat(2i64.pow(n as u32))), n);
        assert_eq!(psi0[&vec![0i64; n]], c);
    }
    let psi1 = CurrentExpansion::new(Current::Psi, 1).expand(3).unwrap();
    assert_eq!(psi1[&vec![1]], HPoly::from_coeffs(vec![rat(0), rat(1), rat(0), ratio(1, 24)]));
    assert_eq!(psi1[&vec![0, 1]], HPoly::monomial(ratio(1, 2), 2));
}

fn eeo(cap: u32) -> Yangian {
    Yangian::parse("EEO", Caps::new(cap, 6)).unwrap()
}

#[test]
fn t_series_exponentiates_back_to_the_cartan_current() {
    let y = eeo(4);
    let map = LoopMap::new(&y).unwrap();
    let cap = y.cap();
    let top = cap as usize + 1;
    for i in 0..y.rank() {
        // T[k] = ħ t_{i,k−1}, the coefficient of u^{−k}.
        let tcoef: Vec<YElement> = (0..=top)
            .map(|k| {
                if k == 0 {
                    YElement::zero()
                } else {
                    map.t(i, k as u32 - 1).scale_poly(&HPoly::hbar_pow(1), cap + 1)
                }
            })
            .collect();
        let mut total = vec![YElement::zero(); top + 1];
        total[0] = YElement::one();
        let mut power = total.clone();
        for n in 1..=top {
            let mut next = vec![YElement::zero(); top + 1];
            for a in 0..=top {
                for b in 1..=top - a {
                    next[a + b].add_assign(&cartan_mul(&power[a], &tcoef[b], cap + 1));
                }
            }
            power = next;
            for k in 0..=top {
                total[k].add_assign(&power[k].scale(&(Rational::one() / factorial(n as u32))));
            }
        }
        for (k, coef) in total.iter().enumerate().skip(1) {
            let expected = YElement::monomial(vec![YLetter::h(i, k as u32 - 1)], HPoly::hbar_pow(1));
            assert_eq!(coef, &expected, "u^-{k}");
        }
    }
}

#[test]
fn low_t_and_borel_images() {
    let y = eeo(3);
    let map = LoopMap::new(&y).unwrap();
    let h = |r| YLetter::h(0, r);
    let mut t1 = YElement::letter(h(1));
    t1.add_term(vec![h(0), h(0)], HPoly::monomial(ratio(-1, 2), 1));
    assert_eq!(map.t(0, 1), &t1);
    assert_eq!(map.phi(LoopGenerator::h(0, 0)).unwrap(), YElement::letter(h(0)));
    // B(1) + B(−1) only sees even k.
    let even = map.borel(0, 1).add(&map.borel(0, -1));
    let mut expected = YElement::zero();
    for k in (0..=3).step_by(2) {
        expected.add_assign(&map.t(0, k).scale(&(rat(2) / factorial(k))));
    }
    let expected = expected.scale_poly(&to_hpoly(&hbar_over_q_difference(3).unwrap()), 3);
    assert_eq!(even, expected);
}

#[test]
fn root_images_stay_in_the_root_span() {
    let y = eeo(4);
    let map = LoopMap::new(&y).unwrap();
    for i in 0..y.rank() {
        for r in -2..=2 {
            for (gen, kind) in [(LoopGenerator::e(i, r), Kind::Plus), (LoopGenerator::f(i, r), Kind::Minus)] {
                let img = map.phi(gen).unwrap();
                assert!(!img.is_zero());
                for m in img.terms().keys() {
                    let roots: Vec<_> = m.iter().filter(|l| l.kind != Kind::Cartan).collect();
                    assert_eq!(roots.len(), 1, "{gen}: {m:?}");
                    assert_eq!(roots[0].kind, kind);
                    assert_eq!((usize::from(roots[0].lo), usize::from(roots[0].hi)), (i, i));
                }
            }
        }
        assert_eq!(map.g_series(i)[0].constant_term().at_zero(), rat(1));
    }
}

fn check(map: &LoopMap<'_>, instances: Vec<LoopInstance>) {
    assert!(!instances.is_empty());
    for c in map.verify(&instances).unwrap() {
        assert!(c.holds, "{}: {}", c.label, c.defect);
    }
}

#[test]
fn cartan_relations_on_eeo() {
    let y = eeo(4);
    let map = LoopMap::new(&y).unwrap();
    check(&map, map.instances(LoopRelationId::CartanCommute, &[-1, 0, 1]));
    check(&map, map.instances(LoopRelationId::CartanWeight, &[-2, -1, 0, 1, 2]));
    check(&map, map.instances(LoopRelationId::CartanShift, &[-2, -1, 1, 2]));
    // k = 0 as well
    let with_zero: Vec<_> =
        map.instances(LoopRelationId::CartanShift, &[-2, -1, 0, 1, 2]).into_iter().filter(|inst| inst.k == 0).collect();
    check(&map, with_zero);
}

#[test]
fn plus_minus_relation_on_eeo_and_eeoo() {
    for d in ["EEO", "EEOO"] {
        let y = Yangian::parse(d, Caps::new(4, 6)).unwrap();
        let map = LoopMap::new(&y).unwrap();
        let mut inst = Vec::new();
        for i in 0..y.rank() {
            for j in 0..y.rank() {
                for (k, l) in [(0, 0), (1, 0), (0, 1), (-1, 0), (1, 1), (-1, 2)] {
                    inst.push(LoopInstance { id: LoopRelationId::PlusMinus, i, j, r: k, k: l, side: Kind::Plus });
                }
            }
        }
        check(&map, inst);
    }
}

#[test]
fn zero_serre_on_eeoo() {
    let y = Yangian::parse("EEOO", Caps::new(4, 6)).unwrap();
    let map = LoopMap::new(&y).unwrap();
    let inst = map.instances(LoopRelationId::ZeroSerre, &[-1, 0, 1]);
    assert!(inst.iter().any(|x| x.i == 0 && x.j == 2));
    check(&map, inst);
    let bad = LoopInstance { id: LoopRelationId::ZeroSerre, i: 0, j: 1, r: 0, k: 0, side: Kind::Plus };
    assert!(matches!(map.defect(&bad), Err(LoopError::Inapplicable(_))));
}

#[test]
fn a_classical_shift_coefficient_is_detected() {
    // Replacing [2]_q by 2 in [H_{i,1}, E_{i,0}] for an even vertex leaves a defect at order ħ².
    let y = eeo(3);
    let map = LoopMap::new(&y).unwrap();
    let (i, j) = (0, 0);
    let c = y.c(i, j);
    assert_eq!(c, 2);
    let lhs = y
        .supercommutator(&map.phi(LoopGenerator::h(i, 1)).unwrap(), &map.phi(LoopGenerator::e(j, 0)).unwrap())
        .unwrap();
    let wrong = lhs.sub(&map.phi(LoopGenerator::e(j, 1)).unwrap().scale(&rat(c)));
    assert!(!wrong.is_zero());
    let right =
        map.defect(&LoopInstance { id: LoopRelationId::CartanShift, i, j, r: 1, k: 0, side: Kind::Plus }).unwrap();
    assert!(right.is_zero());
}

#[test]
fn adjacent_odd_vertices_are_refused() {
    for d in ["EOE", "OEO", "EOEO"] {
        let y = Yangian::parse(d, Caps::new(2, 4)).unwrap();
        assert!(matches!(LoopMap::new(&y), Err(LoopError::Constraint { .. })), "{d}");
    }
    for d in ["EOO", "EEO", "EEOO", "OEE"] {
        let y = Yangian::parse(d, Caps::new(2, 4)).unwrap();
        assert!(LoopMap::new(&y).is_ok(), "{d}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ge_identity_for_random_shifts(p in -3i64..=3, q in 1i64..=3, plus in any::<bool>()) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let report = check_ge_identity(&ratio(p, q), sign, 1, 6).unwrap();
        prop_assert!(report.holds);
    }

    #[test]
    fn cartan_images_commute(i in 0usize..2, j in 0usize..2, r in -3i64..=3, s in -3i64..=3) {
        let y = eeo(3);
        let map = LoopMap::new(&y).unwrap();
        let inst = LoopInstance { id: LoopRelationId::CartanCommute, i, j, r, k: s, side: Kind::Plus };
        prop_assert!(map.defect(&inst).unwrap().is_zero());
    }
}
