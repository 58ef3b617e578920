use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tclass_core::code::{dual, parse_code, StabilizerCode};
use tclass_core::corpus::corpus;
use tclass_core::endo::{classify, conjugate_algebra, endo_algebra, invariant_under, EndoAlgebra, FamilyCase};
use tclass_core::mat2::Mat2;
use tclass_core::sampling::{random_code, random_sp2};
use tclass_core::symplectic::sp2_elements;

fn arb_code() -> impl Strategy<Value = StabilizerCode> {
    (any::<u64>(), 1usize..9).prop_flat_map(|(seed, n)| {
        (0..=n).prop_map(move |dim| random_code(&mut ChaCha8Rng::seed_from_u64(seed), n, dim))
    })
}

/// The algebra by definition: all 16 matrices tested against the code.
fn definitional_algebra(c: &StabilizerCode) -> EndoAlgebra {
    EndoAlgebra::from_elements(Mat2::all().filter(|&t| invariant_under(c, t)))
}

proptest! {
    #[test]
    fn parse_render_round_trip(c in arb_code()) {
        let text = c.render();
        if c.space().dim() > 0 {
            let back = parse_code(&text).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(back.render(), text);
        }
    }

    #[test]
    fn code_sits_inside_its_dual(c in arb_code()) {
        let d = dual(&c);
        prop_assert!(d.contains_space(c.space()));
        prop_assert_eq!(c.space().dim() + d.dim(), 2 * c.n());
    }

    #[test]
    fn algebra_matches_definition(c in arb_code()) {
        prop_assert_eq!(endo_algebra(&c), definitional_algebra(&c));
    }

    #[test]
    fn classification_is_conjugation_equivariant(c in arb_code(), r in 0usize..6) {
        let r = sp2_elements()[r];
        let moved = c.transform(r).unwrap();
        let (f, g) = (classify(&c), classify(&moved));
        prop_assert_eq!(f.case, g.case);
        prop_assert_eq!(endo_algebra(&f.canonical_code), f.case.canonical_algebra());
        prop_assert_eq!(endo_algebra(&g.canonical_code), g.case.canonical_algebra());
    }
}

#[test]
fn endo_conjugation_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..1000 {
        let n = rng.gen_range(1..8);
        let dim = rng.gen_range(0..=n);
        let c = random_code(&mut rng, n, dim);
        let r = random_sp2(&mut rng);
        let lhs = endo_algebra(&c.transform(r).unwrap());
        assert_eq!(lhs, conjugate_algebra(endo_algebra(&c), r).unwrap());
    }
}

#[test]
fn cases_zero_and_one_have_identity_witness() {
    for e in corpus() {
        let f = classify(&e.code());
        if matches!(f.case, FamilyCase::SelfDualCss | FamilyCase::Gf4Linear) {
            assert_eq!(f.witness, Mat2::IDENTITY, "{}", e.name);
            assert_eq!(f.canonical_code, e.code());
        }
    }
}

#[test]
fn corpus_algebras_match_definition() {
    for e in corpus() {
        assert_eq!(endo_algebra(&e.code()), definitional_algebra(&e.code()), "{}", e.name);
    }
}
