//! Randomized algebraic properties, cross-checking modules against one
//! another:
//!
//! * ring / field axioms for the exact arithmetic layers,
//! * grammar round-trips (render then parse is the identity),
//! * Cartan products against the K-Laurent oracle,
//! * straightening against the Weyl-module action.

use proptest::prelude::*;

use qps_core::algebra::{straighten, verify_straighten, AlgebraElement, Generator, Word};
use qps_core::cartan::{normal_form, CartanElement, LusztigSymbol};
use qps_core::grammar::{parse_cartan, parse_word, render_cartan, render_word};
use qps_core::{LaurentPoly, RatFunc};

// ==================================================================
// Strategies
// ==================================================================

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 0..=3)
        .prop_map(|pairs| LaurentPoly::from_terms(&pairs))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), nonzero_laurent()).prop_map(|(num, den)| {
        &RatFunc::from_laurent(&num)
            * &RatFunc::from_laurent(&den)
                .recip()
                .expect("denominator is nonzero")
    })
}

fn symbol() -> impl Strategy<Value = LusztigSymbol> {
    (-4i64..=4, 0u32..=3).prop_map(|(c, t)| LusztigSymbol::new(c, t))
}

fn cartan() -> impl Strategy<Value = CartanElement> {
    prop::collection::vec((symbol(), laurent()), 0..=3).prop_map(|terms| {
        terms
            .iter()
            .fold(CartanElement::zero(), |acc, (sym, coeff)| {
                acc.add(&normal_form(*sym).scale(coeff))
            })
    })
}

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (1u32..=3).prop_map(Generator::DividedE),
        (1u32..=3).prop_map(Generator::DividedF),
        prop_oneof![Just(1i8), Just(-1i8)].prop_map(Generator::KPower),
        (-3i64..=3, 0u32..=2).prop_map(|(c, t)| Generator::Cartan(LusztigSymbol::new(c, t))),
    ]
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(generator(), 0..=max_len)
        .prop_map(|factors| Word::new(factors).expect("generated factors are valid"))
}

// ==================================================================
// Arithmetic layers
// ==================================================================

proptest! {
    /// `Z[q, q^-1]` is a commutative ring with exact cancellation.
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    /// Multiplication never loses exactness: (a*b)/b recovers a.
    #[test]
    fn laurent_exact_division_inverts_multiplication(
        a in laurent(),
        b in nonzero_laurent(),
    ) {
        let product = &a * &b;
        prop_assert_eq!(product.exact_div(&b).expect("constructed as a multiple"), a);
    }

    /// Rational functions form a field in canonical reduced form.
    #[test]
    fn ratfunc_field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        if !x.is_zero() {
            let inv = x.recip().expect("nonzero");
            prop_assert!((&x * &inv).is_one());
        }
        prop_assert!((&x - &x).is_zero());
    }
}

// ==================================================================
// Grammar round-trips
// ==================================================================

proptest! {
    /// Rendering then parsing is the identity on Cartan elements.
    #[test]
    fn cartan_render_parse_round_trip(x in cartan()) {
        let text = render_cartan(&x);
        let back = parse_cartan(&text).expect("rendered text parses");
        prop_assert_eq!(back, x, "text was {}", text);
    }

    /// Rendering then parsing is the identity on words.
    #[test]
    fn word_render_parse_round_trip(w in word(6)) {
        let text = render_word(&w);
        let back = parse_word(&text).expect("rendered text parses");
        prop_assert_eq!(back, w, "text was {}", text);
    }
}

// ==================================================================
// Cartan products against the oracle
// ==================================================================

proptest! {
    /// The basis-indexed product agrees with K-Laurent multiplication and
    /// is commutative and associative.
    #[test]
    fn cartan_product_matches_oracle(x in cartan(), y in cartan(), z in cartan()) {
        let xy = x.product(&y);
        prop_assert_eq!(xy.expand_oracle(), &x.expand_oracle() * &y.expand_oracle());
        prop_assert_eq!(&xy, &y.product(&x));
        prop_assert_eq!(xy.product(&z), x.product(&y.product(&z)));
    }
}

// ==================================================================
// Straightening against the Weyl modules
// ==================================================================

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The PBW expansion of a random word acts identically to the word on
    /// the first few Weyl modules.
    #[test]
    fn straighten_matches_weyl_action(w in word(4)) {
        let report = verify_straighten(&w, &[1, 2, 3]);
        prop_assert!(report.equal, "word {:?}: {} vs {}", w, report.lhs, report.rhs);
    }

    /// Straightening is a projection: re-straightening every PBW monomial
    /// of an expansion reproduces the expansion.
    #[test]
    fn straighten_is_a_projection(w in word(4)) {
        let expansion = straighten(&w);
        let rebuilt = expansion
            .to_words()
            .iter()
            .fold(AlgebraElement::zero(), |acc, (word, coeff)| {
                acc.add(&straighten(word).scale(coeff))
            });
        prop_assert_eq!(rebuilt, expansion);
    }
}
