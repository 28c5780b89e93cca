//! Integration tests for the truncated Yangian: relations, Hopf structure,
//! PBW counts and the specialization at `ħ = 0`.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use superyangian::exact::{rat, ratio, HPoly};
use superyangian::rootdata::{Bialgebra, Root};
use superyangian::yangian::{
    Caps, CoproductEvaluator, Evaluator, Expr, HopfMode, Kind, RelationId, YElement, YLetter, YTensor, Yangian,
};

mod common;
use common::random_word;

fn yangian(d: &str, n: u32) -> Yangian {
    Yangian::parse(d, Caps::new(n, 6)).unwrap()
}

fn assumed(d: &str, n: u32) -> Yangian {
    Yangian::with_mode(&d.parse().unwrap(), Caps::new(n, 6), HopfMode::Assumed).unwrap()
}

fn letter(l: YLetter) -> YElement {
    YElement::letter(l)
}

fn minimal_generators(y: &Yangian) -> Vec<YLetter> {
    let mut out = Vec::new();
    for i in 0..y.rank() {
        for r in 0..=1 {
            out.extend([YLetter::h(i, r), YLetter::xp(i, r), YLetter::xm(i, r)]);
        }
    }
    out
}

#[test]
fn defining_and_derived_relations_hold() {
    for d in ["EEO", "EOE", "EEOO", "EOEO"] {
        let y = yangian(d, 3);
        let hopf_indices = (0..y.rank()).all(|i| y.i_prime(i).is_ok());
        let ids: Vec<RelationId> = RelationId::all()
            .into_iter()
            .filter(|id| hopf_indices || !matches!(id, RelationId::RaiseRoot | RelationId::CartanPrimeTwo))
            .collect();
        for c in y.verify_relations(&ids).unwrap() {
            assert!(c.holds, "{d} {} {}: {}", c.relation, c.label, c.defect);
        }
    }
}

#[test]
fn spec_examples_of_straightening() {
    let y = yangian("EEO", 4);
    // [h_{1,0}, h_{2,3}] = 0
    let b = y.supercommutator(&letter(YLetter::h(0, 0)), &letter(YLetter::h(1, 3))).unwrap();
    assert!(b.is_zero());
    // (x⁺_{2,0})² = 0 for the odd root α₂.
    assert!(y.normal_form(&[YLetter::xp(1, 0), YLetter::xp(1, 0)]).is_zero());
    // h̃ acting on x_{j,0} raises the level.
    let ht = y.h_tilde(0);
    let b = y.supercommutator(&ht, &letter(YLetter::xp(1, 0))).unwrap();
    assert_eq!(b, letter(YLetter::xp(1, 1)).scale(&rat(y.c(0, 1))));
}

#[test]
fn recurrences_reproduce_the_abstract_generators() {
    for d in ["EEO", "EEOO"] {
        let y = yangian(d, 4);
        for i in 0..y.rank() {
            for (l, v) in y.higher_generators(i, 4).unwrap() {
                assert_eq!(v, letter(l), "{d} {l}");
            }
        }
    }
}

#[test]
fn coproduct_respects_the_minimal_relations() {
    let y = yangian("EEO", 3);
    for c in y.verify_coproduct(&RelationId::minimal()).unwrap() {
        assert!(c.holds, "{} {}: {}", c.relation, c.label, c.defect);
    }
}

/// A coproduct with the wrong sign in the correction term of `Δ(h_{i,1})`.
struct Mutated<'a>(&'a Yangian);

impl Evaluator for Mutated<'_> {
    type Value = YTensor;

    fn generator(&self, l: YLetter) -> Result<YTensor, superyangian::yangian::YangianError> {
        let good = CoproductEvaluator(self.0).generator(l)?;
        if l.kind == Kind::Cartan && l.level == 1 {
            let boxed = self.0.boxed(&letter(l));
            return Ok(boxed.sub(&good.sub(&boxed)));
        }
        Ok(good)
    }
    fn scalar(&self, c: &HPoly) -> YTensor {
        CoproductEvaluator(self.0).scalar(c)
    }
    fn add(&self, a: &YTensor, b: &YTensor) -> YTensor {
        a.add(b)
    }
    fn scale(&self, a: &YTensor, c: &HPoly) -> YTensor {
        self.0.scale_tensor_poly(a, c)
    }
    fn mul(&self, a: &YTensor, b: &YTensor) -> YTensor {
        self.0.tensor_mul(a, b)
    }
    fn letter_parity(&self, l: &YLetter) -> u8 {
        self.0.letter_parity(l)
    }
}

#[test]
fn a_wrong_coproduct_is_detected() {
    let y = yangian("EEO", 3);
    let rels = y.relation_instances(RelationId::Minimal(3)).unwrap();
    let failing = rels.iter().filter(|r| !Mutated(&y).eval(&r.difference()).unwrap().is_zero()).count();
    assert!(failing > 0);
}

#[test]
fn coproduct_of_level_one_generators() {
    for y in [yangian("EEO", 3), assumed("EEOO", 3)] {
        let hbar = HPoly::hbar_pow(1);
        for i in 0..y.rank() {
            let xp = letter(YLetter::xp(i, 1));
            let expected = y.boxed(&xp).sub(&y.scale_tensor_poly(&y.omega_plus_bracket_right(i), &hbar));
            assert_eq!(y.coproduct(&xp).unwrap(), expected);
            let xm = letter(YLetter::xm(i, 1));
            let expected = y.boxed(&xm).add(&y.scale_tensor_poly(&y.omega_plus_bracket_left(i), &hbar));
            assert_eq!(y.coproduct(&xm).unwrap(), expected);
            // Δ(h̃_{i,1}) = □(h̃_{i,1}) + ħ[h_{i,0} ⊗ 1, Ω⁺]; the Cartan part of Ω⁺ commutes with h ⊗ 1.
            let ht = y.h_tilde(i);
            let h1 = y.tensor_of(&[letter(YLetter::h(i, 0)), YElement::one()]);
            let corr = y.tensor_bracket(&h1, &y.omega_plus_roots()).unwrap();
            let expected = y.boxed(&ht).add(&y.scale_tensor_poly(&corr, &hbar));
            assert_eq!(y.coproduct(&ht).unwrap(), expected);
        }
    }
}

#[test]
fn coproduct_preserves_degree_and_parity() {
    let y = yangian("EEO", 3);
    for l in y.alphabet(2) {
        let d = y.coproduct_letter(l).unwrap();
        assert_eq!(y.tensor_parity(&d).unwrap(), y.letter_parity(&l), "{l}");
        for (k, c) in d.terms() {
            let levels: u32 = k.iter().map(|m| superyangian::yangian::monomial_levels(m)).sum();
            for (e, _) in c.terms() {
                assert_eq!(levels + e as u32, u32::from(l.level), "{l}");
            }
        }
    }
}

#[test]
fn coassociativity_and_counit() {
    for y in [yangian("EEO", 3), assumed("EEOO", 3)] {
        for i in 0..y.rank() {
            for l in [YLetter::h(i, 0), YLetter::xp(i, 0), YLetter::xm(i, 0), YLetter::h(i, 1), YLetter::xp(i, 1)] {
                assert!(y.coassociativity_defect(&letter(l)).unwrap().is_zero(), "{l}");
                let (r, s) = y.counit_defects(&letter(l)).unwrap();
                assert!(r.is_zero() && s.is_zero(), "{l}");
            }
        }
    }
}

#[test]
fn antipode_axiom_on_minimal_generators() {
    let y = yangian("EEO", 3);
    for l in minimal_generators(&y) {
        for left in [true, false] {
            let d = y.antipode_contraction(&letter(l), left).unwrap();
            assert!(d.is_zero(), "{l} {left}: {}", y.render(&d));
        }
    }
    assert_eq!(y.antipode_contraction(&YElement::one(), true).unwrap(), YElement::one());
}

#[test]
fn literal_sign_in_the_antipode_of_h1_fails_the_axiom() {
    // S(h_{i,1}) with the factor (−1)^{1+|α|} on every root term.
    let y = yangian("EEO", 3);
    let rs = y.root_system().clone();
    let i = 0;
    let h0 = YLetter::h(i, 0);
    let mut corr = YElement::monomial(vec![h0, h0], HPoly::one());
    for r in rs.positive_roots() {
        let w = rat(rs.form(&Root::simple(i), r)) * -superyangian::exact::sign(u32::from(rs.parity(r)));
        let fe = y.mul(&y.root_vector(Kind::Minus, r), &y.root_vector(Kind::Plus, r));
        corr = corr.add(&fe.scale(&w));
    }
    let literal = letter(YLetter::h(i, 1)).scale(&rat(-1)).add(&corr.scale_poly(&HPoly::hbar_pow(1), 3));
    assert_ne!(literal, y.antipode(&letter(YLetter::h(i, 1))).unwrap());
    // μ(S ⊗ id)Δ(h_{i,1}) with the literal formula.
    let d = y.coproduct(&letter(YLetter::h(i, 1))).unwrap();
    let mut total = YElement::zero();
    for (k, c) in d.terms() {
        let s = if k[0] == vec![YLetter::h(i, 1)] { literal.clone() } else { y.antipode_monomial(&k[0]).unwrap() };
        total = total.add(&y.mul(&s, &YElement::monomial(k[1].clone(), HPoly::one())).scale_poly(c, 3));
    }
    assert!(!total.is_zero());
}

#[test]
fn quantization_of_h1_matches_the_current_cobracket() {
    for y in [yangian("EEO", 2), assumed("EEOO", 2)] {
        let bialg = Bialgebra::new(y.matrix_algebra());
        for i in 0..y.rank() {
            let c = y.classical_cobracket(&letter(YLetter::h(i, 1))).unwrap();
            let ours = y.to_loop_tensor(&c).unwrap();
            let expected = bialg.delta(y.matrix_algebra().h(i), 1);
            assert_eq!(ours, expected, "{} i={i}", y.diagram().to_eo_string());
        }
    }
}

#[test]
fn hopf_structure_refuses_excluded_diagrams() {
    assert!(yangian("EEOO", 2).coproduct_letter(YLetter::h(0, 1)).is_err());
    assert!(yangian("EO", 2).antipode_letter(YLetter::h(0, 1)).is_err());
    // The presentation itself still works there.
    let y = yangian("EO", 2);
    assert!(y.verify_relations(&RelationId::DEFINING).unwrap().iter().all(|c| c.holds));
}

#[test]
fn graded_counts_match_the_generating_function() {
    for d in ["EEO", "EEOO"] {
        let y = Yangian::parse(d, Caps::new(3, 4)).unwrap();
        for row in y.graded_table() {
            assert_eq!(row.enumerated, row.generating, "{d} {row:?}");
        }
    }
}

#[test]
fn straightening_cells_are_certified() {
    let y = yangian("EEO", 3);
    for c in y.certify_straightening().unwrap() {
        assert!(c.dimension <= c.words);
    }
}

#[test]
fn specialization_at_zero_matches_the_current_algebra() {
    let y = yangian("EEO", 3);
    let ue = y.classical_oracle();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let w = random_word(&y, &mut rng, 4);
        assert!(y.classical_defect(&ue, &w).is_zero(), "{w:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn multiplication_is_associative(seed in 0u64..10_000) {
        let y = yangian("EEO", 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = y.normal_form(&random_word(&y, &mut rng, 2));
        let b = y.normal_form(&random_word(&y, &mut rng, 2));
        let c = y.normal_form(&random_word(&y, &mut rng, 2));
        prop_assert_eq!(y.mul(&y.mul(&a, &b), &c), y.mul(&a, &y.mul(&b, &c)));
    }

    #[test]
    fn normal_forms_are_ordered(seed in 0u64..10_000) {
        let y = yangian("EOE", 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = y.normal_form(&random_word(&y, &mut rng, 4));
        for m in x.terms().keys() {
            prop_assert!(m.windows(2).all(|p| p[0] < p[1] || (p[0] == p[1] && y.letter_parity(&p[0]) == 0)));
        }
    }

    #[test]
    fn counit_is_multiplicative(seed in 0u64..10_000) {
        let y = yangian("EEO", 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = y.normal_form(&random_word(&y, &mut rng, 2)).add(&YElement::one());
        let b = y.normal_form(&random_word(&y, &mut rng, 2)).add(&YElement::scalar(HPoly::constant(ratio(1, 2))));
        let lhs = y.counit(&y.mul(&a, &b));
        let rhs = y.counit(&a).mul_trunc(&y.counit(&b), 2);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_multiplicative_on_letters(seed in 0u64..10_000) {
        let y = yangian("EEO", 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_word(&y, &mut rng, 2);
        let mut expected = y.tensor_of(&[YElement::one(), YElement::one()]);
        for l in &w {
            expected = y.tensor_mul(&expected, &y.coproduct_letter(*l).unwrap());
        }
        prop_assert_eq!(y.coproduct(&y.normal_form(&w)).unwrap(), expected);
    }
}

#[test]
fn expressions_render() {
    let e = Expr::bracket(Expr::h_tilde(0), Expr::gen(YLetter::xp(1, 0)));
    assert!(e.to_string().starts_with('['));
}
