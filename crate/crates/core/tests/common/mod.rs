//! Strategies shared by the property tests.
#![allow(dead_code)]

use bimcat_core::*;
use proptest::prelude::*;
use proptest::strategy::Strategy as _;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Terms over the given generators, with `0` and `1` leaves when `constants` is set.
pub fn term(
    gens: &'static [&'static str],
    max_leaves: u32,
    constants: bool,
) -> BoxedStrategy<Term> {
    let leaf: BoxedStrategy<Term> = if constants {
        prop_oneof![
            4 => prop::sample::select(gens).prop_map(|g| Term::generator(g).unwrap()),
            1 => Just(Term::Zero),
            1 => Just(Term::One),
        ]
        .boxed()
    } else {
        prop::sample::select(gens)
            .prop_map(|g| Term::generator(g).unwrap())
            .boxed()
    };
    leaf.prop_recursive(6, max_leaves, 2, |inner| {
        (inner.clone(), inner, any::<bool>()).prop_map(|(a, b, sum)| {
            if sum {
                Term::sum(a, b)
            } else {
                Term::prod(a, b)
            }
        })
    })
    .boxed()
}

pub fn permutation(n: usize) -> impl proptest::strategy::Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_zero_based(v).unwrap())
}

pub fn braid(strands: usize, max_len: usize) -> BoxedStrategy<BraidWord> {
    if strands < 2 {
        return Just(BraidWord::identity(strands)).boxed();
    }
    prop::collection::vec((1..strands, any::<bool>()), 0..=max_len)
        .prop_map(move |ls| {
            let letters = ls
                .into_iter()
                .map(|(index, positive)| Letter { index, positive })
                .collect();
            BraidWord::new(strands, letters).unwrap()
        })
        .boxed()
}

/// A random walk of forward and inverse prime edges (no distributivity inverses).
pub fn walk(t: &Term, flavor: Flavor, steps: usize, seed: u64) -> Path {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = Path::identity(t.clone());
    for _ in 0..steps {
        let edges = applicable_edges(p.codomain(), &EdgeQuery::with_inverses(flavor));
        let Some(e) = edges.choose(&mut rng) else {
            break;
        };
        p.push(e.clone()).unwrap();
    }
    p
}

/// Rewrites a braid word by `moves` random applications of the braid relations.
pub fn congruent(w: &BraidWord, moves: usize, seed: u64) -> BraidWord {
    let n = w.strands();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ls = w.letters().to_vec();
    if n < 2 {
        return w.clone();
    }
    for _ in 0..moves {
        match rng.gen_range(0..4) {
            0 => {
                let at = rng.gen_range(0..=ls.len());
                let l = Letter {
                    index: rng.gen_range(1..n),
                    positive: rng.gen_bool(0.5),
                };
                ls.splice(at..at, [l, l.inverse()]);
            }
            1 => {
                if let Some(p) =
                    (0..ls.len().saturating_sub(1)).find(|&p| ls[p + 1] == ls[p].inverse())
                {
                    ls.drain(p..p + 2);
                }
            }
            2 => {
                if let Some(p) = (0..ls.len().saturating_sub(1))
                    .find(|&p| ls[p].index.abs_diff(ls[p + 1].index) >= 2)
                {
                    ls.swap(p, p + 1);
                }
            }
            _ => {
                let spot = (0..ls.len().saturating_sub(2)).find(|&p| {
                    let (a, b, c) = (ls[p], ls[p + 1], ls[p + 2]);
                    a == c && a.positive == b.positive && a.index.abs_diff(b.index) == 1
                });
                if let Some(p) = spot {
                    let (a, b) = (ls[p], ls[p + 1]);
                    ls[p] = b;
                    ls[p + 1] = a;
                    ls[p + 2] = b;
                }
            }
        }
    }
    BraidWord::new(n, ls).unwrap()
}
