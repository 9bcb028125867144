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

fn pick(dx: usize) -> XCase {
    x_cases()[dx].clone()
}

fn input(seed: u64, dx: &XCase) -> RatFunc {
    let mut g = rng(seed);
    if seed % 2 == 0 {
        ratfunc(&mut g)
    } else {
        ratfunc_structured(&mut g, dx)
    }
}

proptest! {
    #![proptest_config(cfg(40))]

    #[test]
    fn round_trip(seed in any::<u64>(), dx in 0usize..3) {
        let dx = pick(dx);
        let f = input(seed, &dx);
        let red = reduce(&f, &dx).unwrap();
        prop_assert_eq!(dx.apply(&red.certificate).add(&red.residual.to_ratfunc()), f);
    }

    #[test]
    fn residual_is_a_fixed_point(seed in any::<u64>(), dx in 0usize..3) {
        let dx = pick(dx);
        let f = input(seed, &dx);
        let r = reduce(&f, &dx).unwrap().residual.to_ratfunc();
        let again = reduce(&r, &dx).unwrap();
        prop_assert!(again.certificate.is_zero());
        prop_assert_eq!(again.residual.to_ratfunc(), r);
    }

    #[test]
    fn exact_inputs_are_recognized(seed in any::<u64>(), dx in 0usize..3) {
        let dx = pick(dx);
        let h = input(seed, &dx);
        let g = is_exact(&dx.apply(&h), &dx).unwrap();
        prop_assert!(g.is_some());
        let kappa = g.unwrap().sub(&h);
        prop_assert!(!kappa.has_var(Var::X));
    }

    #[test]
    fn residual_denominator_is_free(seed in any::<u64>(), dx in 0usize..3) {
        let dx = pick(dx);
        let f = input(seed, &dx);
        let r = reduce(&f, &dx).unwrap().residual;
        prop_assume!(!r.terms.is_empty());
        let d = r.denominator();
        match &dx {
            XCase::Dx => {
                prop_assert!(r.terms.iter().all(|t| t.j == 1));
                prop_assert_eq!(poly_gcd(&d, &d.deriv(Var::X)).degree(Var::X), 0);
            }
            XCase::Sx => prop_assert_eq!(dispersion(&d).unwrap(), 0),
            XCase::Qx(q) => prop_assert_eq!(q_dispersion(&d, q).unwrap(), Some(0)),
        }
    }

    #[test]
    fn residues_are_additive(s1 in any::<u64>(), s2 in any::<u64>(), dx in 0usize..3) {
        let dx = pick(dx);
        let (f1, f2) = (input(s1, &dx), input(s2, &dx));
        let r = |f: &RatFunc| reduce(f, &dx).unwrap().residual.to_ratfunc();
        let defect = r(&f1.add(&f2)).sub(&r(&f1)).sub(&r(&f2));
        prop_assert!(residues(&defect, &dx).unwrap().is_empty());
        prop_assert!(is_exact(&defect, &dx).unwrap().is_some());
    }

    #[test]
    fn no_residues_iff_exact(seed in any::<u64>(), dx in 0usize..3) {
        let dx = pick(dx);
        let f = input(seed, &dx);
        let none = residues(&f, &dx).unwrap().is_empty();
        prop_assert_eq!(none, is_exact(&f, &dx).unwrap().is_some());
    }
}
