use bimcat_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pair(flavor: Flavor, seed: u64) -> (Path, Path) {
    random_parallel_pair(&mut ChaCha8Rng::seed_from_u64(seed), &FuzzSpec::new(flavor))
}

fn dist(p: &Path, mode: DistortionMode) -> DistortionValue {
    distortion(p, mode).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn regular_domains_have_equal_distortions(seed: u64) {
        let (p, q) = pair(Flavor::Symmetric, seed);
        if is_regular(p.domain()) {
            prop_assert!(dist(&p, DistortionMode::Symmetric).same_as(&dist(&q, DistortionMode::Symmetric)));
        }
        let (p, q) = pair(Flavor::Nonsymmetric, seed);
        if is_ns_regular(p.domain()) {
            prop_assert!(dist(&p, DistortionMode::Additive).same_as(&dist(&q, DistortionMode::Additive)));
        }
    }

    #[test]
    fn braided_verdicts_refine_symmetric_ones(seed: u64) {
        let (p, q) = pair(Flavor::Braided, seed);
        let v = decide(&p, &q, Flavor::Braided).unwrap();
        if v.commutes() {
            prop_assert!(dist(&p, DistortionMode::Symmetric).same_as(&dist(&q, DistortionMode::Symmetric)));
            prop_assert!(decide(&p, &q, Flavor::Symmetric).unwrap().commutes());
        }
    }

    #[test]
    fn commuting_verdicts_hold_in_targets(seed: u64, which in 0usize..3) {
        let flavor = [Flavor::Symmetric, Flavor::Nonsymmetric, Flavor::Braided][which];
        let (p, q) = pair(flavor, seed);
        if decide(&p, &q, flavor).unwrap().commutes() {
            let n = confirm_in_targets(&p, &q, flavor);
            prop_assert!(n.is_ok(), "{}", n.unwrap_err());
        }
    }

    #[test]
    fn verdicts_are_symmetric(seed: u64) {
        let (p, q) = pair(Flavor::Symmetric, seed);
        prop_assert_eq!(decide(&p, &q, Flavor::Symmetric).unwrap().commutes(), decide(&q, &p, Flavor::Symmetric).unwrap().commutes());
        prop_assert!(decide(&p, &p, Flavor::Symmetric).unwrap().commutes());
    }
}
