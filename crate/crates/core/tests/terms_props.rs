mod common;

use bimcat_core::*;
use proptest::prelude::*;

const GENS: &[&str] = &["x", "y", "z", "w"];

proptest! {
    #[test]
    fn prime_edges_preserve_support(t in common::term(GENS, 8, true)) {
        for (flavor, sflavor) in [
            (Flavor::Symmetric, SupportFlavor::Symmetric),
            (Flavor::Nonsymmetric, SupportFlavor::Nonsymmetric),
        ] {
            let q = EdgeQuery { unit_insertions: true, ..EdgeQuery::with_inverses(flavor) };
            let s = support(&t, sflavor);
            for e in applicable_edges(&t, &q) {
                prop_assert_eq!(&support(&e.codomain(), sflavor), &s, "{}", e.to_line());
            }
        }
    }

    #[test]
    fn regularity_depends_only_on_support(t in common::term(GENS, 8, true), seed: u64, steps in 0usize..12) {
        let p = common::walk(&t, Flavor::Symmetric, steps, seed);
        prop_assert_eq!(is_regular(&t), is_regular(p.codomain()));
        let q = common::walk(&t, Flavor::Nonsymmetric, steps, seed);
        prop_assert_eq!(is_ns_regular(&t), is_ns_regular(q.codomain()));
    }

    #[test]
    fn size_bounds_rank(t in common::term(GENS, 10, true)) {
        let m = measures(&t);
        prop_assert!(m.size >= m.rank);
        prop_assert_eq!(m.size == m.rank, is_sum_of_atoms_or_binary_products(&t));
        prop_assert_eq!(m.norm, t.leaves());
    }

    #[test]
    fn display_parses_back(t in common::term(GENS, 10, true)) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn classification_is_consistent(t in common::term(GENS, 10, true)) {
        let c = classify(&t);
        prop_assert_eq!(c.is_polynomial, is_polynomial(&t));
        if is_monomial(&t) {
            prop_assert!(is_polynomial(&t));
        }
        if !t.contains_zero() {
            prop_assert_eq!(support(&t, SupportFlavor::Symmetric).monomials().len(), expanded_monomials(&t).len());
        }
    }
}
