mod common;

use common::*;
use proptest::prelude::*;
use rescope_core::*;

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn associates(a: &Poly, b: &Poly) -> bool {
    a.normalize() == b.normalize()
}

proptest! {
    #![proptest_config(cfg(48))]

    #[test]
    fn gcd_of_common_multiples(seed in any::<u64>()) {
        let mut g = rng(seed);
        let (a, b, c) = (with_x(&mut g, 2), with_x(&mut g, 2), poly(&mut g, 2, 0.6));
        prop_assume!(!c.is_zero());
        let lhs = poly_gcd(&a.mul(&c), &b.mul(&c));
        prop_assert!(associates(&lhs, &c.mul(&poly_gcd(&a, &b))));
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(seed in any::<u64>()) {
        let mut g = rng(seed);
        let (a, b, c) = (with_x(&mut g, 2), with_x(&mut g, 2), with_x(&mut g, 1));
        let shared = resultant(&a.mul(&c), &b.mul(&c), Var::X).unwrap();
        prop_assert!(shared.is_zero());
        let r = resultant(&a, &b, Var::X).unwrap();
        prop_assert_eq!(r.is_zero(), poly_gcd(&a, &b).degree(Var::X) > 0);
    }

    #[test]
    fn factorization_reconstructs_with_irreducible_factors(seed in any::<u64>()) {
        let mut g = rng(seed);
        let p = with_x(&mut g, 2).mul(&poly(&mut g, 2, 0.6).add(&Poly::one()));
        prop_assume!(!p.is_zero());
        let fz = factor_bivariate(&p).unwrap();
        let mut back = Poly::constant(fz.content.clone());
        for (f, e) in &fz.factors {
            back = back.mul(&f.pow(*e));
            let again = factor_bivariate(f).unwrap();
            prop_assert_eq!(again.factors.len(), 1);
            prop_assert_eq!(again.factors[0].1, 1);
        }
        prop_assert_eq!(back, p);
    }

    #[test]
    fn series_times_denominator_is_numerator(seed in any::<u64>(), n in 0usize..8) {
        let mut g = rng(seed);
        let den = poly(&mut g, 2, 0.5).add(&Poly::int(1 + (seed % 3) as i64)).mul(&with_x(&mut g, 1));
        let num = poly(&mut g, 2, 0.5);
        let f = RatFunc::frac(num, den);
        prop_assume!(f.den().subs(Var::T, &Poly::zero()).is_zero() == false);
        let cs = series_expand(&f, n).unwrap();
        prop_assert_eq!(cs.len(), n + 1);
        let mut s = RatFunc::zero();
        for (k, c) in cs.iter().enumerate() {
            s = s.add(&c.mul(&RatFunc::from_poly(Poly::t().pow(k as u32))));
        }
        let diff = s.sub(&f).mul(&RatFunc::from_poly(f.den().clone()));
        prop_assert!(diff.is_zero() || diff.num().min_degree(Var::T) > n as i64);
    }

    #[test]
    fn inverse_cancels(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = ratfunc(&mut g);
        prop_assert!(f.mul(&f.inv().unwrap()).is_one());
    }

    #[test]
    fn ore_ring_laws(seed in any::<u64>(), k in 0usize..3) {
        let mut g = rng(seed);
        let kind = kinds()[k].clone();
        let a = operator_upto(&mut g, &kind, 2);
        let b = operator_upto(&mut g, &kind, 2);
        let c = operator_upto(&mut g, &kind, 2);
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        prop_assert_eq!(&ab_c, &a.mul(&b.mul(&c).unwrap()).unwrap());
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(left, a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        let right = a.add(&b).unwrap().mul(&c).unwrap();
        prop_assert_eq!(right, a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn product_acts_as_composition(seed in any::<u64>(), k in 0usize..3) {
        let mut g = rng(seed);
        let kind = kinds()[k].clone();
        let a = operator_upto(&mut g, &kind, 2);
        let b = operator_upto(&mut g, &kind, 2);
        let f = ratfunc(&mut g);
        prop_assert_eq!(a.mul(&b).unwrap().apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn lclm_and_gcrd_divide(seed in any::<u64>(), k in 0usize..3) {
        let mut g = rng(seed);
        let kind = kinds()[k].clone();
        let common = operator(&mut g, &kind, 1);
        let a = operator(&mut g, &kind, 1).mul(&common).unwrap();
        let b = operator_upto(&mut g, &kind, 1).mul(&common).unwrap();
        let l = lclm(&a, &b).unwrap();
        prop_assert!(l.rem(&a).unwrap().is_zero());
        prop_assert!(l.rem(&b).unwrap().is_zero());
        let d = gcrd(&a, &b).unwrap();
        prop_assert!(a.rem(&d).unwrap().is_zero());
        prop_assert!(b.rem(&d).unwrap().is_zero());
        prop_assert!(d.order() >= 1);
    }

    #[test]
    fn rational_solutions_solve(seed in any::<u64>(), k in 0usize..3) {
        let mut g = rng(seed);
        let kind = kinds()[k].clone();
        let y = urat(&mut g);
        let first = OrePoly::new(kind.clone(), vec![kind.act_urat(&y).div(&y).neg(), URatFunc::one()]);
        let l = operator_upto(&mut g, &kind, 1).mul(&first).unwrap();
        let sols = rational_solutions(&l);
        prop_assert!(!sols.is_empty());
        for s in &sols {
            prop_assert!(l.apply_urat(s).is_zero());
        }
    }
}
