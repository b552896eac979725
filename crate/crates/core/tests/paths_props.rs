mod common;

use bimcat_core::*;
use proptest::prelude::*;

const GENS: &[&str] = &["a", "b", "c"];

proptest! {
    #[test]
    fn text_round_trip(t in common::term(GENS, 7, true), seed: u64, steps in 0usize..10) {
        for flavor in [Flavor::Symmetric, Flavor::Braided] {
            let p = common::walk(&t, flavor, steps, seed);
            let back: Path = p.to_text().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }

    #[test]
    fn no_distributivity_inverses(a in common::term(GENS, 4, true), b in common::term(GENS, 4, true), c in common::term(GENS, 4, true)) {
        for kind in [EdgeKind::DeltaL, EdgeKind::DeltaR] {
            let e = ElementaryEdge::new(kind, vec![a.clone(), b.clone(), c.clone()], Direction::Inverse);
            prop_assert!(e.is_err());
            let fwd = ElementaryEdge::forward(kind, vec![a.clone(), b.clone(), c.clone()]).unwrap();
            prop_assert!(fwd.inverse().is_err());
            let p = Path::single(PrimeEdge::bare(fwd));
            prop_assert!(p.inverse().is_err());
        }
    }

    #[test]
    fn inverse_walk_returns(t in common::term(GENS, 7, true), seed: u64, steps in 0usize..10) {
        let p = common::walk(&t, Flavor::Symmetric, steps, seed);
        let has_delta = p.uses_kind(EdgeKind::DeltaL) || p.uses_kind(EdgeKind::DeltaR);
        prop_assert_eq!(p.inverse().is_ok(), !has_delta);
        let back = p.compose(&p.inverse_tight()).unwrap();
        prop_assert_eq!(back.codomain(), &t);
        prop_assert!(back.cancel_inverse_pairs(Flavor::Symmetric).is_empty());
    }
}
