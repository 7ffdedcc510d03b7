use blockgraph::arith::{divisors, gcd};
use blockgraph::cyclotomic::{cyclotomic_polynomial, Cyclotomic, IntPolynomial, ReductionContext};
use num_bigint::BigInt;
use proptest::prelude::*;

/// A random element of `Z[ζ_n]` for a conductor dividing 2²·3·5·7.
fn element() -> impl Strategy<Value = Cyclotomic> {
    (
        prop::sample::select(vec![1u64, 3, 4, 5, 7, 12, 15, 20, 21, 28, 60, 84]),
        prop::collection::vec((0i64..420, -5i64..=5), 0..6),
    )
        .prop_map(|(n, terms)| {
            let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
            Cyclotomic::make(n, &terms).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
    }

    #[test]
    fn stretching_the_conductor_is_invisible(
        n in 1u64..40,
        t in 1u64..6,
        terms in prop::collection::vec((0i64..40, -4i64..=4), 0..6),
    ) {
        let base: Vec<(i64, BigInt)> = terms.iter().map(|&(e, c)| (e, c.into())).collect();
        let stretched: Vec<(i64, BigInt)> =
            terms.iter().map(|&(e, c)| (e * t as i64, c.into())).collect();
        let a = Cyclotomic::make(n, &base).unwrap();
        let b = Cyclotomic::make(n * t, &stretched).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.to_string().parse::<Cyclotomic>().unwrap(), b);
    }

    #[test]
    fn galois_orbit_sums_are_rational(a in element()) {
        let n = a.conductor();
        let orbit: Cyclotomic =
            (1..=n).filter(|&k| gcd(k, n) == 1).map(|k| a.galois(k as i64).unwrap()).sum();
        prop_assert!(orbit.is_rational());
        prop_assert_eq!(orbit.to_integer().unwrap(), a.trace());
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(a in element(), b in element(), p in prop::sample::select(vec![2u64, 3, 11, 13])) {
        let ctx = ReductionContext::new(420, p).unwrap();
        let r = |x: &Cyclotomic| ctx.reduce(x).unwrap();
        prop_assert_eq!(r(&(&a * &b)), ctx.mul(&r(&a), &r(&b)));
        prop_assert_eq!(r(&(&a + &b)), ctx.add(&r(&a), &r(&b)));
    }
}

#[test]
fn cyclotomic_polynomials_multiply_to_x_n_minus_one() {
    for n in 1..=200u64 {
        let product = divisors(n)
            .into_iter()
            .fold(IntPolynomial::one(), |acc, d| {
                &acc * &cyclotomic_polynomial(d)
            });
        assert_eq!(product, IntPolynomial::binomial(n as usize, -1), "n = {n}");
    }
}
