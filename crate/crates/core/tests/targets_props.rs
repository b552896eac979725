mod common;

use bimcat_core::targets::dbr_delta_r_violations;
use bimcat_core::*;
use proptest::prelude::*;
use proptest::strategy::Strategy as _;

const GENS: &[&str] = &["a", "b", "c"];

fn dobject(max_len: usize, max_entry: usize) -> impl proptest::strategy::Strategy<Value = DObject> {
    prop::collection::vec(0..=max_entry, 0..=max_len).prop_map(DObject)
}

fn sigma_two(_: &Generator) -> Option<usize> {
    Some(2)
}

fn check_functorial<T: Bimonoidal>(
    target: &T,
    p: &Path,
    q: &Path,
    assign: Assignment<'_, T::Obj>,
) -> Result<(), TestCaseError> {
    let whole = evaluate_path(target, &p.compose(q).unwrap(), assign).unwrap();
    let parts = target
        .compose(
            &evaluate_path(target, q, assign).unwrap(),
            &evaluate_path(target, p, assign).unwrap(),
        )
        .unwrap();
    prop_assert!(
        target.mor_eq(&whole, &parts),
        "{}: {} vs {}",
        target.name(),
        whole,
        parts
    );
    let inv = evaluate_path(target, &p.inverse_tight(), assign).unwrap();
    let there = evaluate_path(target, p, assign).unwrap();
    let back = target.compose(&inv, &there).unwrap();
    prop_assert!(target.mor_eq(&back, &target.identity(&target.domain(&there))));
    Ok(())
}

use bimcat_core::targets::Assignment;

proptest! {
    #[test]
    fn d_morphisms_have_inverses(a in dobject(3, 2)) {
        let d = d_target();
        for f in d.morphisms_from(&a) {
            let g = d.inverse(&f);
            prop_assert_eq!(d.domain(&g), d.codomain(&f));
            prop_assert!(d.mor_eq(&d.compose(&g, &f).unwrap(), &d.identity(&a)));
            prop_assert!(d.mor_eq(&d.compose(&f, &g).unwrap(), &d.identity(&d.codomain(&f))));
        }
    }

    #[test]
    fn evaluation_is_functorial(t in common::term(GENS, 6, true), s1: u64, s2: u64, n1 in 0usize..6, n2 in 0usize..6) {
        let p = common::walk(&t, Flavor::Symmetric, n1, s1);
        let q = common::walk(p.codomain(), Flavor::Symmetric, n2, s2);
        check_functorial(&sigma_target(), &p, &q, &sigma_two)?;
        check_functorial(&sigma_prime_target(), &p, &q, &sigma_two)?;
        check_functorial(&d_target(), &p, &q, &canonical_assignment)?;

        let p = common::walk(&t, Flavor::Nonsymmetric, n1, s1);
        let q = common::walk(p.codomain(), Flavor::Nonsymmetric, n2, s2);
        check_functorial(&dad_target(), &p, &q, &canonical_assignment)?;

        let p = common::walk(&t, Flavor::Braided, n1, s1);
        let q = common::walk(p.codomain(), Flavor::Braided, n2, s2);
        check_functorial(&dbr_target(), &p, &q, &canonical_assignment)?;
    }

    #[test]
    fn objects_track_monomials(t in common::term(GENS, 10, true)) {
        let mons = expanded_monomials(&t);
        let lens: Vec<usize> = mons.iter().map(Vec::len).collect();
        prop_assert_eq!(canonical_object(&t), DObject(lens));
        let one = |_: &Generator| Some(1usize);
        prop_assert_eq!(evaluate_term(&sigma_target(), &t, &one).unwrap(), mons.len());
        prop_assert_eq!(support(&t, SupportFlavor::Symmetric).monomials().len(), mons.len());
    }

    #[test]
    fn additive_embedding_is_faithful(a in dobject(3, 2)) {
        let (ad, d) = (dad_target(), d_target());
        let homs = ad.morphisms_from(&a);
        for (i, f) in homs.iter().enumerate() {
            for g in &homs[i + 1..] {
                prop_assert_ne!(f.embed(), g.embed());
            }
            for g in ad.morphisms_from(&f.codomain()) {
                let gf = ad.compose(&g, f).unwrap().embed();
                prop_assert_eq!(gf, d.compose(&g.embed(), &f.embed()).unwrap());
            }
        }
    }
}

#[test]
fn braided_distributivity_has_no_small_violations() {
    assert_eq!(dbr_delta_r_violations(2), Vec::<String>::new());
}
