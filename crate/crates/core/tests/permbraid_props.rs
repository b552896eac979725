mod common;

use bimcat_core::*;
use proptest::prelude::*;
use proptest::strategy::Strategy as _;

fn id(n: usize) -> BraidWord {
    BraidWord::identity(n)
}

fn sum(a: &BraidWord, b: &BraidWord) -> BraidWord {
    braid_block_sum(a, b)
}

proptest! {
    #[test]
    fn braid_equality_is_a_congruence(
        (w, c) in (2usize..=5).prop_flat_map(|n| (common::braid(n, 8), common::braid(n, 8))),
        moves in 1usize..8,
        seed: u64,
    ) {
        let v = common::congruent(&w, moves, seed);
        prop_assert!(braid_equal(&w, &w).unwrap());
        prop_assert!(braid_equal(&w, &v).unwrap());
        prop_assert!(braid_equal(&v, &w).unwrap());
        prop_assert!(braid_equal(&w.compose(&c), &v.compose(&c)).unwrap());
        prop_assert!(braid_equal(&c.compose(&w), &c.compose(&v)).unwrap());
        prop_assert!(braid_equal(&w.compose(&w.inverse()), &id(w.strands())).unwrap());
    }

    #[test]
    fn equal_braids_have_equal_permutations(
        (w, v) in (2usize..=5).prop_flat_map(|n| (common::braid(n, 6), common::braid(n, 6))),
    ) {
        if braid_equal(&w, &v).unwrap() {
            prop_assert_eq!(braid_underlying(&w), braid_underlying(&v));
        }
    }

    #[test]
    fn block_constructions_cover_permutations(
        (b, k) in (1usize..=4).prop_flat_map(|n| (common::braid(n, 6), prop::collection::vec(0usize..=3, n))),
        c in (1usize..=3).prop_flat_map(|n| common::braid(n, 4)),
    ) {
        let pb = braid_underlying(&b);
        prop_assert_eq!(braid_underlying(&braid_block(&b, &k).unwrap()), perm_block(&pb, &k).unwrap());
        prop_assert_eq!(braid_underlying(&sum(&b, &c)), perm_block_sum(&pb, &braid_underlying(&c)));
    }

    #[test]
    fn kron_and_transpose(
        (s, t) in (1usize..=4, 1usize..=4).prop_flat_map(|(m, n)| (common::permutation(m), common::permutation(n))),
    ) {
        let (m, n) = (s.len(), t.len());
        let tr = perm_transpose(m, n);
        prop_assert_eq!(tr.compose(&perm_kron(&s, &t)), perm_kron(&t, &s).compose(&tr));
        prop_assert!(perm_transpose(n, m).compose(&tr).is_identity());
    }
}

#[test]
fn elementary_block_braids_satisfy_hexagons() {
    for m in 0..=3 {
        for n in 0..=3 {
            for p in 0..=3 {
                // Moving m strands past n + p strands, one block at a time.
                let whole = elementary_block_braid(m, n + p);
                let steps = sum(&id(n), &elementary_block_braid(m, p))
                    .compose(&sum(&elementary_block_braid(m, n), &id(p)));
                assert!(braid_equal(&whole, &steps).unwrap(), "b({m},{n}+{p})");
                // Moving m + n strands past p strands.
                let whole = elementary_block_braid(m + n, p);
                let steps = sum(&elementary_block_braid(m, p), &id(n))
                    .compose(&sum(&id(m), &elementary_block_braid(n, p)));
                assert!(braid_equal(&whole, &steps).unwrap(), "b({m}+{n},{p})");
            }
        }
    }
}

#[test]
fn block_permutations_compose() {
    for n in 0..=3 {
        let sizes: Vec<Vec<usize>> = (0..3usize.pow(n as u32))
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let d = code % 3;
                        code /= 3;
                        d
                    })
                    .collect()
            })
            .collect();
        for k in &sizes {
            for s in Permutation::all(n) {
                for t in Permutation::all(n) {
                    // After t, block i sits at position t(i).
                    let mut arranged = vec![0; n];
                    for i in 0..n {
                        arranged[t.apply(i)] = k[i];
                    }
                    let lhs = perm_block(&s.compose(&t), k).unwrap();
                    let rhs = perm_block(&s, &arranged)
                        .unwrap()
                        .compose(&perm_block(&t, k).unwrap());
                    assert_eq!(lhs, rhs, "{s} {t} {k:?}");
                }
            }
        }
    }
}
