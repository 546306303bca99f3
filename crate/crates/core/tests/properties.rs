//! Randomized property suites for the graded ring and the class/character
//! transforms. Each suite runs at least a thousand seeded cases; exact
//! arithmetic means equality assertions, not tolerances.

use liegiambelli_core::bundle::{char_to_class, class_to_char, ChernCharacter, FormalBundle};
use liegiambelli_core::ring::{Field, GradedSeries, Generator, Monomial};
use liegiambelli_core::ring::Family;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ORDER: u32 = 4;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Random monomial in c_1..c_order with small exponents.
fn random_monomial(rng: &mut ChaCha8Rng) -> Monomial {
    let mut powers = Vec::new();
    for idx in 1..=ORDER {
        if rng.gen_bool(0.4) {
            powers.push((Generator::new(Family::C, idx), rng.gen_range(1..=2u32)));
        }
    }
    Monomial::from_powers(&powers)
}

/// Random series with no constant term; integer coefficients when `integral`.
fn random_nilpotent(rng: &mut ChaCha8Rng, field: Field, integral: bool) -> GradedSeries {
    let nterms = rng.gen_range(0..=6);
    let terms = (0..nterms).filter_map(|_| {
        let m = random_monomial(rng);
        if m.is_one() {
            return None;
        }
        let c = if integral || field == Field::F2 {
            rat(rng.gen_range(-4..=4), 1)
        } else {
            rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
        };
        Some((m, c))
    });
    GradedSeries::from_terms(field, ORDER, terms)
}

fn one_plus(s: &GradedSeries) -> GradedSeries {
    s.add(&GradedSeries::one(s.field(), s.order())).unwrap()
}

#[test]
fn class_char_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc1a55);
    for case in 0..1000 {
        // class -> character -> class on random integral classes
        let rank = rng.gen_range(-5..=6i64);
        let class = one_plus(&random_nilpotent(&mut rng, Field::Q, true));
        let b = FormalBundle::new(rank, class.clone()).unwrap();
        let ch = class_to_char(&b).unwrap();
        assert_eq!(ch.rank(), BigInt::from(rank));
        let back = char_to_class(&ch).unwrap();
        assert_eq!(back.rank(), rank, "case {case}");
        assert_eq!(back.class(), &class, "case {case}");

        // character -> class -> character on random rational characters
        let rank2 = rng.gen_range(-3..=5i64);
        let tail = random_nilpotent(&mut rng, Field::Q, false);
        let series = tail
            .add(&GradedSeries::constant(
                Field::Q,
                ORDER,
                rat(rank2, 1),
            ))
            .unwrap();
        let ch2 = ChernCharacter::new(series.clone()).unwrap();
        let ch2_back = class_to_char(&char_to_class(&ch2).unwrap()).unwrap();
        assert_eq!(ch2_back.series(), &series, "case {case}");
    }
}

#[test]
fn invert_against_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1471);
    for case in 0..1000 {
        let u = one_plus(&random_nilpotent(&mut rng, Field::Q, false));
        let inv = u.invert().unwrap();
        assert_eq!(
            u.mul(&inv).unwrap(),
            GradedSeries::one(Field::Q, ORDER),
            "case {case}"
        );
        // inverting twice is the identity
        assert_eq!(inv.invert().unwrap(), u, "case {case}");
    }
    for case in 0..200 {
        let u = one_plus(&random_nilpotent(&mut rng, Field::F2, true));
        let inv = u.invert().unwrap();
        assert_eq!(
            u.mul(&inv).unwrap(),
            GradedSeries::one(Field::F2, ORDER),
            "mod-2 case {case}"
        );
    }
}

#[test]
fn exp_log_inverse_pair() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xe109);
    for case in 0..1000 {
        let a = random_nilpotent(&mut rng, Field::Q, false);
        assert_eq!(a.exp().unwrap().log().unwrap(), a, "case {case}");
        let u = one_plus(&random_nilpotent(&mut rng, Field::Q, false));
        assert_eq!(u.log().unwrap().exp().unwrap(), u, "case {case}");
        // exp turns sums into products in a commutative ring
        let b = random_nilpotent(&mut rng, Field::Q, false);
        assert_eq!(
            a.add(&b).unwrap().exp().unwrap(),
            a.exp().unwrap().mul(&b.exp().unwrap()).unwrap(),
            "case {case}"
        );
    }
}

#[test]
fn rescale_is_a_ring_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1e);
    for case in 0..1000 {
        let a = one_plus(&random_nilpotent(&mut rng, Field::Q, false));
        let b = one_plus(&random_nilpotent(&mut rng, Field::Q, false));
        let d = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let e = rat(rng.gen_range(-4..=4), 1);
        assert_eq!(
            a.mul(&b).unwrap().rescale(&d).unwrap(),
            a.rescale(&d).unwrap().mul(&b.rescale(&d).unwrap()).unwrap(),
            "case {case}"
        );
        assert_eq!(
            a.add(&b).unwrap().rescale(&d).unwrap(),
            a.rescale(&d).unwrap().add(&b.rescale(&d).unwrap()).unwrap(),
            "case {case}"
        );
        // weight-graded scaling composes multiplicatively
        assert_eq!(
            a.rescale(&d).unwrap().rescale(&e).unwrap(),
            a.rescale(&(&d * &e)).unwrap(),
            "case {case}"
        );
    }
}
