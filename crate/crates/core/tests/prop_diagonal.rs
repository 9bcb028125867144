mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use rescope_core::diagonal::residue_series;
use rescope_core::*;

/// Random f regular at the origin: denominator `c + (terms of positive degree)`, total degree 2.
fn regular(seed: u64) -> RatFunc {
    let mut g = rng(seed);
    loop {
        let mut den = poly(&mut g, 2, 0.5);
        den = den.sub(&Poly::constant(den.coeff(&Monomial([0, 0, 0, 0]))));
        let c = g.gen_range(1i64..=3);
        den = den.add(&Poly::int(c));
        let num = poly(&mut g, 1, 0.6);
        if !num.is_zero() && den.total_degree() >= 1 {
            return RatFunc::frac(num, den);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn ode_annihilates_long_series(seed in any::<u64>()) {
        let f = regular(seed);
        let l = diagonal_ode(&f).unwrap();
        let s = diag_series(&f, l.order() + 20).unwrap();
        prop_assert!(check_annihilates_series(&l, &s).unwrap());
    }

    #[test]
    fn two_routes_to_the_diagonal(seed in any::<u64>(), n in 0usize..10) {
        let f = regular(seed);
        let direct = diag_series(&f, n).unwrap();
        let via_residue = residue_series(&diagonal_substitute(&f), n).unwrap();
        prop_assert_eq!(direct, via_residue);
    }

    #[test]
    fn ode_is_polynomial_and_nontrivial(seed in any::<u64>()) {
        let f = regular(seed);
        let l = diagonal_ode(&f).unwrap();
        prop_assert!(!l.is_zero());
        prop_assert!(l.coeffs().iter().all(|c| c.is_poly()));
        // a polynomial-coefficient operator of positive order has a nonzero formal solution
        prop_assert!(l.order() >= 1);
    }
}
