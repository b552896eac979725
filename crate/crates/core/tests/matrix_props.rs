mod common;

use bimcat_core::matrix::cells_equal;
use bimcat_core::*;
use proptest::prelude::*;
use proptest::strategy::Strategy as _;

fn small(seed: u64) -> MatConfig {
    MatConfig {
        max_dim: 2,
        max_entry: 2,
        samples: 6,
        ..MatConfig::new(seed)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sigma_matrices_satisfy_the_axioms(seed: u64) {
        let r = verify_matrix_axioms(&sigma_target(), &small(seed)).unwrap();
        prop_assert!(r.passed(), "{:?}", r.failed_axioms());
        prop_assert_eq!(r.seed, seed);
    }

    #[test]
    fn distortion_matrices_satisfy_the_axioms(seed: u64) {
        let cfg = MatConfig { max_entry: 1, samples: 2, ..small(seed) };
        let r = verify_matrix_axioms(&d_target(), &cfg).unwrap();
        prop_assert!(r.passed(), "{:?}", r.failed_axioms());
    }
}

proptest! {
    #[test]
    fn permutation_matrices_multiply(
        (s, t) in (0usize..=4).prop_flat_map(|n| (common::permutation(n), common::permutation(n))),
    ) {
        let sg = sigma_target();
        let prod = mat_product(&sg, &perm_matrix(&sg, &s), &perm_matrix(&sg, &t)).unwrap();
        prop_assert_eq!(prod, perm_matrix(&sg, &s.compose(&t)));
        let id = mat_product(&sg, &perm_matrix(&sg, &s.inverse()), &perm_matrix(&sg, &s)).unwrap();
        prop_assert_eq!(id, mat_identity(&sg, s.len()));
    }

    #[test]
    fn cell_interchange(
        (rows, mid, cols) in (1usize..=2, 1usize..=2, 1usize..=2),
        seed: u64,
    ) {
        // Four composable permutation cells in Σ: (g ∘ f) ⋆ (g' ∘ f') = (g ⋆ g') ∘ (f ⋆ f').
        use rand::{Rng, SeedableRng};
        let sg = sigma_target();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let obj = |r: usize, c: usize, rng: &mut rand_chacha::ChaCha8Rng| Matrix::from_fn(r, c, |_, _| rng.gen_range(0..=2usize));
        let a = obj(mid, cols, &mut rng);
        let b = obj(rows, mid, &mut rng);
        let auto = |m: &Matrix<usize>, rng: &mut rand_chacha::ChaCha8Rng| {
            m.map(|&n| {
                let mut v: Vec<usize> = (0..n).collect();
                rand::seq::SliceRandom::shuffle(&mut v[..], rng);
                Permutation::from_zero_based(v).unwrap()
            })
        };
        let (f, g) = (auto(&b, &mut rng), auto(&b, &mut rng));
        let (f2, g2) = (auto(&a, &mut rng), auto(&a, &mut rng));
        let lhs = cell_product(&sg, &cell_compose(&sg, &g, &f).unwrap(), &cell_compose(&sg, &g2, &f2).unwrap()).unwrap();
        let rhs = cell_compose(&sg, &cell_product(&sg, &g, &g2).unwrap(), &cell_product(&sg, &f, &f2).unwrap()).unwrap();
        prop_assert!(cells_equal(&sg, &lhs, &rhs));
        let lt = cell_tensor(&sg, &cell_compose(&sg, &g, &f).unwrap(), &cell_compose(&sg, &g2, &f2).unwrap());
        let rt = cell_compose(&sg, &cell_tensor(&sg, &g, &g2), &cell_tensor(&sg, &f, &f2)).unwrap();
        prop_assert!(cells_equal(&sg, &lt, &rt));
    }
}
