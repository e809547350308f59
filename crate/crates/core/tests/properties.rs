use gabidulin_core::algebra::{FieldElement, FieldTower, LevelSpec, Polynomial};
use gabidulin_core::galois::Automorphism;
use gabidulin_core::presets;
use gabidulin_core::random::Sampler;
use gabidulin_core::rank::{k_rank, rank_distance, weights, RankDistance};
use gabidulin_core::{Error, SkewPolynomial, Word};
use proptest::prelude::*;

fn towers() -> Vec<(&'static str, Automorphism)> {
    vec![
        ("roots8", presets::roots8()),
        ("kummer", presets::kummer()),
        ("cyclotomic-5", presets::cyclotomic(5, 2).unwrap()),
        ("cyclotomic-7", presets::cyclotomic(7, 3).unwrap()),
    ]
}

/// Schoolbook product: multiply as polynomials over the level below and
/// reduce by the defining polynomial.
fn reference_mul(a: &FieldElement, b: &FieldElement) -> FieldElement {
    let t = a.tower();
    let level = a.level();
    if level == 0 {
        return t.from_rational(0, &(&a.coords()[0] * &b.coords()[0]));
    }
    let below = t.field(level - 1);
    let pa = Polynomial::new(below.clone(), a.coeffs_below());
    let pb = Polynomial::new(below, b.coeffs_below());
    let (_, r) = pa.mul(&pb).div_rem(&t.modulus(level)).unwrap();
    t.from_coeffs_below(level, r.coeffs()).unwrap()
}

#[test]
fn field_axioms_hold_on_every_preset() {
    for (name, theta) in towers() {
        let t = theta.tower().clone();
        let top = t.top();
        let mut s = Sampler::new(11);
        for trial in 0..1000 {
            let a = s.element(&t, top);
            let b = s.element(&t, top);
            let c = s.element(&t, top);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c), "{name} #{trial}: associativity");
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c), "{name} #{trial}: distributivity");
            assert_eq!(&a * &b, &b * &a, "{name} #{trial}: commutativity");
            if !a.is_zero() {
                assert!((&a * &a.inv().unwrap()).is_one(), "{name} #{trial}: inverse");
            }
        }
    }
}

#[test]
fn table_multiplication_matches_polynomial_reduction() {
    for (name, theta) in towers() {
        let t = theta.tower().clone();
        let mut s = Sampler::with_bound(5, 9);
        for level in 1..=t.top() {
            for _ in 0..200 {
                let a = s.element(&t, level);
                let b = s.element(&t, level);
                assert_eq!(&a * &b, reference_mul(&a, &b), "{name} level {level}");
            }
        }
    }
}

/// Inverse from Bézout coefficients of the element against the defining
/// polynomial over the level below.
fn euclid_inverse(a: &FieldElement) -> FieldElement {
    let t = a.tower();
    let level = a.level();
    let p = Polynomial::new(t.field(level - 1), a.coeffs_below());
    let (g, s, _) = p.extended_gcd(&t.modulus(level)).unwrap();
    assert!(g.coeffs().len() == 1 && g.coeffs()[0].is_one(), "element shares a factor with the modulus");
    t.from_coeffs_below(level, s.coeffs()).unwrap()
}

#[test]
fn inverse_matches_extended_euclid() {
    for (name, theta) in towers() {
        let t = theta.tower().clone();
        let mut s = Sampler::new(13);
        for level in 1..=t.top() {
            for _ in 0..100 {
                let a = s.nonzero_element(&t, level);
                assert_eq!(a.inv().unwrap(), euclid_inverse(&a), "{name} level {level}");
            }
        }
    }
}

#[test]
fn automorphisms_are_ring_homomorphisms() {
    for (name, theta) in towers() {
        let t = theta.tower().clone();
        let top = t.top();
        let mut s = Sampler::new(12);
        for _ in 0..1000 {
            let a = s.element(&t, top);
            let b = s.element(&t, top);
            assert_eq!(theta.apply(&(&a * &b), 1), &theta.apply(&a, 1) * &theta.apply(&b, 1), "{name}");
            assert_eq!(theta.apply(&(&a + &b), 1), &theta.apply(&a, 1) + &theta.apply(&b, 1), "{name}");
        }
    }
}

#[test]
fn zero_divisor_is_reported_as_non_invertible() {
    // Y^4 - 1 = (Y - 1)(Y + 1)(Y^2 + 1)
    let t = FieldTower::new(vec![LevelSpec::integer("y", &[-1, 0, 0, 0, 1], 1)]).unwrap();
    let y = t.generator(1);
    let zd = &y - &t.one(1);
    assert!(matches!(zd.inv(), Err(Error::NonInvertible { level: 1, .. })));
    assert!((&y * &y.inv().unwrap()).is_one());
}

fn sample_word(theta: &Automorphism, seed: u64, len: usize) -> Word {
    let t = theta.tower();
    let mut s = Sampler::new(seed);
    Word::new((0..len).map(|_| s.sparse_element(t, t.top(), 2)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_distance_is_a_metric(seed in any::<u64>(), len in 1usize..4) {
        let theta = presets::cyclotomic(5, 2).unwrap();
        let x = sample_word(&theta, seed, len);
        let y = sample_word(&theta, seed ^ 0x5555, len);
        let z = sample_word(&theta, seed ^ 0xaaaa, len);
        let d = |a: &Word, b: &Word| match rank_distance(&theta, a, b).unwrap() {
            RankDistance::Rank(r) => r,
            RankDistance::Split { .. } => panic!("admissible automorphism gave split distance"),
        };
        prop_assert_eq!(d(&x, &x), 0);
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z));
    }

    #[test]
    fn weights_agree_under_admissible_automorphism(seed in any::<u64>(), len in 1usize..4) {
        let theta = presets::cyclotomic(7, 3).unwrap();
        let x = sample_word(&theta, seed, len);
        let w = weights(&theta, &x).unwrap();
        prop_assert!(w.w0 == w.w1 && w.w1 == w.w2 && w.w2 == w.w3, "{}", w);
        prop_assert_eq!(w.w3, k_rank(&theta, &x).unwrap());
    }

    #[test]
    fn skew_degrees_add(seed in any::<u64>(), da in 0usize..4, db in 0usize..4) {
        let theta = presets::cyclotomic(5, 2).unwrap();
        let t = theta.tower().clone();
        let mut s = Sampler::new(seed);
        let mut poly = |d: usize| {
            let mut c: Vec<FieldElement> = (0..d).map(|_| s.element(&t, 1)).collect();
            c.push(s.nonzero_element(&t, 1));
            SkewPolynomial::new(&theta, c)
        };
        let a = poly(da);
        let b = poly(db);
        prop_assert_eq!(a.mul(&b).degree().finite(), Some(da + db));
    }
}
