mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use s1s_core::buchi::membership_up;
use s1s_core::complement::ComplementConfig;
use s1s_core::logic::{
    decode_number, encode_full, eval_direct, interp_to_upword, models_full_up, models_up,
    models_up_interp, parse_interpretation, reduce_full, sat_full, sat_min, translate,
    translate_flat, translate_with, upword_to_interp, FullFormula, ParsedFormula, TranslateConfig,
    UpInterpretation,
};
use s1s_core::random::{
    random_full_formula, random_min_formula, random_qf_formula, random_up_word,
};
use s1s_core::UpWord;

fn bits<R: Rng>(r: &mut R, n: usize) -> Vec<UpWord> {
    (0..n).map(|_| random_up_word(r, 2, 3, 3)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quantifier_free_translation_matches_evaluation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let phi = random_qf_formula(&mut r, 3, 4);
        let a = translate(&phi, 3).unwrap();
        for _ in 0..5 {
            let so = bits(&mut r, 3);
            prop_assert_eq!(membership_up(&a, &interp_to_upword(&so)).unwrap(), eval_direct(&phi, &so).unwrap());
        }
    }

    #[test]
    fn optimized_and_literal_translations_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let phi = random_min_formula(&mut r, 2, 3, 1);
        let fast = translate(&phi, 3).unwrap();
        // The literal construction is exponential; skip instances beyond a
        // small color budget.
        let literal = ComplementConfig { max_colors: 2000, ..ComplementConfig::default() };
        let Ok(plain) = translate_with(&phi, 3, &TranslateConfig {
            complement: literal,
            singletons: 0,
            normalize: false,
        }) else { return Ok(()) };
        let plain = plain.nfa;
        let Ok(flat) = translate_flat(&phi, 3, &literal) else { return Ok(()) };
        for _ in 0..5 {
            let sigma = interp_to_upword(&bits(&mut r, 3));
            let expected = membership_up(&flat, &sigma).unwrap();
            prop_assert_eq!(membership_up(&fast, &sigma).unwrap(), expected);
            prop_assert_eq!(membership_up(&plain, &sigma).unwrap(), expected);
        }
    }

    #[test]
    fn satisfying_words_recheck(seed in any::<u64>()) {
        let mut r = rng(seed);
        let phi = random_min_formula(&mut r, 2, 4, 2);
        match sat_min(&phi, 4).unwrap() {
            Some(w) => prop_assert!(models_up_interp(&w, &phi).unwrap()),
            None => {
                for _ in 0..20 {
                    prop_assert!(!models_up_interp(&bits(&mut r, 4), &phi).unwrap());
                }
            }
        }
    }

    #[test]
    fn letters_split_and_join(seed in any::<u64>()) {
        let so = bits(&mut rng(seed), 3);
        let back = upword_to_interp(&interp_to_upword(&so), 3);
        for (a, b) in so.iter().zip(&back) {
            prop_assert!(a.equiv(b));
        }
    }

    #[test]
    fn full_reduction_is_faithful(seed in any::<u64>()) {
        let mut r = rng(seed);
        let phi = random_full_formula(&mut r, 2, 1, 3, 1);
        let interp = UpInterpretation {
            so: bits(&mut r, 1),
            fo: vec![r.gen_range(0..4), r.gen_range(0..4)],
        };
        let direct = models_up(&interp_to_upword(&encode_full(&interp, 2, 1).unwrap()), &reduce_full(&phi, 2, 1), 4).unwrap();
        prop_assert_eq!(models_full_up(&interp, &phi, 2, 1).unwrap(), direct);
    }

    #[test]
    fn full_witnesses_decode(seed in any::<u64>()) {
        let mut r = rng(seed);
        let phi = random_full_formula(&mut r, 2, 1, 3, 1);
        if let Some(w) = sat_full(&phi, 2, 1).unwrap() {
            prop_assert!(models_full_up(&w, &phi, 2, 1).unwrap());
        }
    }

    #[test]
    fn numbers_round_trip(i in 0usize..50) {
        prop_assert_eq!(decode_number(&s1s_core::logic::encode_number(i), 0).unwrap(), i);
    }

    #[test]
    fn surface_syntax_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let phi = random_min_formula(&mut r, 2, 4, 2);
        let names: Vec<String> = (0..4).map(|i| format!("X{i}")).collect();
        let text = phi.render(&names);
        let parsed = ParsedFormula::parse(&text).unwrap();
        let again = ParsedFormula::parse(&parsed.surface.to_string()).unwrap();
        prop_assert_eq!(&again.surface, &parsed.surface);
        prop_assert!(parsed.is_minimal());
    }
}

#[test]
fn examples_from_the_command_line() {
    let p = ParsedFormula::parse("ex1 x. ex1 y. x < y").unwrap();
    let (phi, n1) = p.to_full();
    let w = sat_full(&phi, n1, 0).unwrap();
    assert!(w.is_some());
    let p = ParsedFormula::parse("!(X sub X)").unwrap();
    assert_eq!(sat_min(&p.to_min().unwrap(), 1).unwrap(), None);
    let p = ParsedFormula::parse("X sub Y").unwrap();
    let phi = p.to_min().unwrap();
    let member = parse_interpretation("X = 1|0\nY = 1|0", &[], &p.so_names).unwrap();
    assert!(models_up_interp(&member.so, &phi).unwrap());
    let non = parse_interpretation("X = 1|0\nY = 0|0", &[], &p.so_names).unwrap();
    assert!(!models_up_interp(&non.so, &phi).unwrap());
    assert!(parse_interpretation("X = 1|0", &[], &p.so_names).is_err());
}

#[test]
fn singleton_reduction_of_membership() {
    // ex1 x. x in X: satisfiable, and the witness set is nonempty.
    let phi = FullFormula::ex1(0, FullFormula::FoIn(0, 0));
    let w = sat_full(&phi, 1, 1).unwrap().unwrap();
    assert!((0..10).any(|n| w.so[0].at(n) == 1));
    let lt = reduce_full(&FullFormula::FoLess(0, 1), 2, 0);
    assert!(sat_min(&lt, 3).unwrap().is_some());
}
