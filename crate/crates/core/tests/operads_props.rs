mod common;

use bimcat_core::*;
use proptest::prelude::*;
use proptest::strategy::Strategy as _;

fn br(source: &Permutation, b: &BraidWord) -> BrMorphism {
    BrMorphism::new(
        source.clone(),
        braid_underlying(b).compose(source),
        b.clone(),
    )
    .unwrap()
}

/// An arity-`n` Br morphism together with `n` parts of arity at most 2.
fn br_instance() -> impl proptest::strategy::Strategy<Value = (BrMorphism, Vec<BrMorphism>)> {
    (1usize..=3)
        .prop_flat_map(|n| {
            let parts = prop::collection::vec(
                (1usize..=2).prop_flat_map(|k| (common::permutation(k), common::braid(k, 3))),
                n,
            );
            (common::permutation(n), common::braid(n, 4), parts)
        })
        .prop_map(|(s, b, parts)| (br(&s, &b), parts.iter().map(|(s, b)| br(s, b)).collect()))
}

proptest! {
    #[test]
    fn br_homs_are_never_empty(
        (s, t) in (0usize..=5).prop_flat_map(|n| (common::permutation(n), common::permutation(n))),
    ) {
        let w = BraidWord::lift(&t.compose(&s.inverse()));
        let m = BrMorphism::new(s.clone(), t.clone(), w).unwrap();
        prop_assert_eq!(m.source(), &s);
        prop_assert_eq!(m.target(), &t);
    }

    #[test]
    fn br_composition_respects_braid_equality((b, cs) in br_instance(), moves in 1usize..6, seed: u64) {
        let b2 = BrMorphism::new(b.source().clone(), b.target().clone(), common::congruent(b.witness(), moves, seed)).unwrap();
        let cs2: Vec<BrMorphism> = cs
            .iter()
            .map(|c| BrMorphism::new(c.source().clone(), c.target().clone(), common::congruent(c.witness(), moves, seed ^ 1)).unwrap())
            .collect();
        prop_assert!(br_compose(&b, &cs).unwrap().equals(&br_compose(&b2, &cs2).unwrap()));
    }

    #[test]
    fn projection_to_eas_is_an_operad_map((b, cs) in br_instance()) {
        let whole = br_compose(&b, &cs).unwrap().underlying();
        let under: Vec<EAsMorphism> = cs.iter().map(BrMorphism::underlying).collect();
        prop_assert_eq!(whole, eas_compose_morphisms(&b.underlying(), &under).unwrap());
    }

    #[test]
    fn projection_to_eas_is_a_functor(
        (s, b1, b2) in (1usize..=4).prop_flat_map(|n| (common::permutation(n), common::braid(n, 5), common::braid(n, 5))),
    ) {
        let f = br(&s, &b1);
        let g = br(f.target(), &b2);
        let gf = g.compose(&f).unwrap();
        prop_assert_eq!(gf.underlying(), g.underlying().compose(&f.underlying()).unwrap());
        prop_assert!(f.inverse().compose(&f).unwrap().equals(&BrMorphism::identity(&s)));
    }

    #[test]
    fn mon_homs_form_a_preorder(a in 0usize..528, b in 0usize..528, c in 0usize..528) {
        let objs = free_nfold_enumerate(2, 4);
        let (x, y, z) = (&objs[a], &objs[b], &objs[c]);
        prop_assert!(mon_hom_exists(x, x).unwrap());
        if mon_hom_exists(x, y).unwrap() && mon_hom_exists(y, z).unwrap() {
            prop_assert!(mon_hom_exists(x, z).unwrap());
        }
        if mon_hom_exists(x, y).unwrap() && mon_hom_exists(y, x).unwrap() {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn mon_substitution_is_functorial(a: usize, b: usize, p in prop::collection::vec(any::<usize>(), 3)) {
        let objs = free_nfold_enumerate(2, 3);
        let mut small = free_nfold_enumerate(2, 1);
        small.extend(free_nfold_enumerate(2, 2));
        let (x, y) = (&objs[a % objs.len()], &objs[b % objs.len()]);
        let parts: Vec<MonObject> = p.iter().map(|&i| small[i % small.len()].clone()).collect();
        if mon_hom_exists(x, y).unwrap() {
            let (sx, sy) = (mon_subst(x, &parts).unwrap(), mon_subst(y, &parts).unwrap());
            prop_assert!(mon_hom_exists(&sx, &sy).unwrap(), "{} -> {} but {} -/-> {}", x, y, sx, sy);
        }
    }
}
