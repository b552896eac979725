mod common;

use bimcat_core::*;
use proptest::prelude::*;

const GENS: &[&str] = &["a", "b", "c", "d"];

fn dist(p: &Path) -> DistortionValue {
    distortion(p, DistortionMode::Symmetric).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn zero_reduction_is_strategy_independent(t in common::term(GENS, 12, true), s1: u64, s2: u64) {
        let (p, q) = (zero_reduce_with(&t, bimcat_core::Strategy::Random(s1)), zero_reduce_with(&t, bimcat_core::Strategy::Random(s2)));
        prop_assert_eq!(p.codomain(), q.codomain());
        prop_assert!(dist(&p).same_as(&dist(&q)));
        prop_assert!(!p.codomain().contains_zero() || p.codomain() == &Term::Zero);
    }

    #[test]
    fn delta_reduction_reaches_polynomials(t in common::term(GENS, 12, false), s: u64) {
        let p = delta_reduce_with(&t, bimcat_core::Strategy::Random(s)).unwrap();
        prop_assert!(classify(p.codomain()).is_polynomial);
        prop_assert_eq!(support(p.codomain(), SupportFlavor::Symmetric), support(&t, SupportFlavor::Symmetric));
    }

    #[test]
    fn one_reduction_is_strategy_independent(t in common::term(GENS, 12, true), s1: u64, s2: u64) {
        let z = zero_delta_reduce(&t);
        prop_assume!(!z.codomain().contains_zero());
        let u = z.codomain();
        let (p, q) = (one_reduce_with(u, bimcat_core::Strategy::Random(s1)).unwrap(), one_reduce_with(u, bimcat_core::Strategy::Random(s2)).unwrap());
        prop_assert_eq!(p.codomain(), q.codomain());
        prop_assert!(dist(&p).same_as(&dist(&q)));
    }
}

proptest! {
    #[test]
    fn reduce_path_preserves_value(t in common::term(GENS, 6, true), seed: u64, steps in 0usize..8) {
        prop_assume!(!support(&t, SupportFlavor::Symmetric).is_zero());
        let p = common::walk(&t, Flavor::Symmetric, steps, seed);
        let r = reduce_path(&p, Flavor::Symmetric).unwrap();
        let ru = zero_delta_reduce(p.domain());
        let rt = zero_delta_reduce(p.codomain());
        prop_assert_eq!(r.domain(), ru.codomain());
        prop_assert_eq!(r.codomain(), rt.codomain());
        let lhs = ru.compose(&r).unwrap();
        let rhs = p.compose(&rt).unwrap();
        prop_assert!(dist(&lhs).same_as(&dist(&rhs)), "{} vs {}", dist(&lhs), dist(&rhs));
    }

    #[test]
    fn normal_forms_depend_only_on_support(t in common::term(GENS, 8, true), seed: u64, steps in 0usize..10) {
        let p = common::walk(&t, Flavor::Symmetric, steps, seed);
        prop_assert_eq!(normal_form(&t).0, normal_form(p.codomain()).0);
        let q = common::walk(&t, Flavor::Nonsymmetric, steps, seed);
        prop_assert_eq!(
            normal_form_with(&t, Flavor::Nonsymmetric).0,
            normal_form_with(q.codomain(), Flavor::Nonsymmetric).0
        );
    }
}
