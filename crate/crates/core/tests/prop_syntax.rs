mod common;

use common::*;
use proptest::prelude::*;
use rescope_core::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn ratfunc_print_parse(seed in any::<u64>()) {
        let f = ratfunc(&mut rng(seed));
        prop_assert_eq!(parse_ratfunc(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn poly_print_parse(seed in any::<u64>()) {
        let p = poly(&mut rng(seed), 4, 0.5);
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn operator_print_parse(seed in any::<u64>(), k in 0usize..3) {
        let kind = kinds()[k].clone();
        let l = operator_upto(&mut rng(seed), &kind, 3);
        prop_assert_eq!(parse_operator(&l.to_string(), &kind).unwrap(), l);
    }

    #[test]
    fn garbage_is_rejected_not_panicking(s in "[tx0-9+*/^() -]{0,12}") {
        let _ = parse_ratfunc(&s);
    }
}
