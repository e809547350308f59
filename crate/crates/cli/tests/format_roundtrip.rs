use gabidulin_cli::format::{parse_spec, parse_word, spec_to_string, word_to_string};
use gabidulin_core::algebra::{FieldElement, FieldTower, LevelSpec, Rational};
use gabidulin_core::{presets, Automorphism};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn element(tower: &FieldTower, coords: Vec<Rational>) -> FieldElement {
    tower.element(tower.top(), coords).unwrap()
}

proptest! {
    #[test]
    fn kummer_words_round_trip(rows in prop::collection::vec(prop::collection::vec(rational(), 32), 0..5)) {
        let tower = presets::kummer().tower().clone();
        let word: Vec<FieldElement> = rows.into_iter().map(|c| element(&tower, c)).collect();
        let text = word_to_string(&word);
        prop_assert_eq!(parse_word(&text, &tower).unwrap(), word);
    }

    #[test]
    fn cyclotomic_words_round_trip(rows in prop::collection::vec(prop::collection::vec(rational(), 6), 1..7)) {
        let tower = presets::cyclotomic(7, 3).unwrap().tower().clone();
        let word: Vec<FieldElement> = rows.into_iter().map(|c| element(&tower, c)).collect();
        let text = word_to_string(&word);
        prop_assert_eq!(parse_word(&text, &tower).unwrap(), word);
    }

    #[test]
    fn specs_with_rational_moduli_round_trip(c0 in 1i64..50, den in 1i64..9) {
        // θ: y ↦ -y swaps the two roots of Y^2 - c0/den^2.
        let modulus = vec![Rational::new(BigInt::from(-c0), BigInt::from(den * den)), Rational::from_integer(0.into()), Rational::from_integer(1.into())];
        let tower = FieldTower::new(vec![LevelSpec::rational("y", &modulus, 1)]).unwrap();
        let image = -&tower.generator(1);
        let theta = Automorphism::new(&tower, image).unwrap();
        let text = spec_to_string(&theta);
        let back = parse_spec(&text).unwrap();
        prop_assert!(back.same_as(&theta));
        prop_assert_eq!(spec_to_string(&back), text);
    }
}

#[test]
fn preset_specs_round_trip() {
    for name in presets::NAMES.iter().copied().chain(["cyclotomic-11-3", "cyclotomic-7-2"]) {
        let theta = presets::by_name(name).unwrap();
        let text = spec_to_string(&theta);
        let back = parse_spec(&text).unwrap();
        assert!(back.same_as(&theta), "{name}");
        assert_eq!(back.order(), theta.order(), "{name}");
    }
}
