//! Deciding whether two parallel formal composites agree in every flat
//! bimonoidal category of a given flavor.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::paths::{applicable_edges, Direction, EdgeKind, EdgeQuery, Flavor, Path, PathError};
use crate::reductions::normal_form_with;
use crate::targets::{
    dad_target, dbr_target, distortion, evaluate_path, sigma_prime_target, sigma_target,
    Bimonoidal, DObject, Distortion, DistortionMode, DistortionValue, TargetError,
};
use crate::terms::{
    is_ns_regular, is_regular, random_term_with_leaves, Generator, RandomTermSpec, Term,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoherenceError {
    #[error("paths are not parallel: {left_dom} -> {left_cod} vs {right_dom} -> {right_cod}")]
    NotParallel {
        left_dom: Term,
        left_cod: Term,
        right_dom: Term,
        right_cod: Term,
    },
    #[error(transparent)]
    Mode(#[from] PathError),
    #[error(transparent)]
    Target(#[from] TargetError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    RegularDomain,
    EqualDistortion,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::RegularDomain => "RegularDomain",
            Criterion::EqualDistortion => "EqualDistortion",
        })
    }
}

pub fn scope(flavor: Flavor) -> &'static str {
    match flavor {
        Flavor::Symmetric => "flat symmetric bimonoidal",
        Flavor::Nonsymmetric => "flat bimonoidal",
        Flavor::Braided => "flat braided bimonoidal",
    }
}

/// `Inconclusive` never claims that the paths differ.
#[derive(Clone, Debug)]
pub enum Verdict {
    Commutes {
        /// The criterion reported first: equal distortion when it holds.
        criterion: Criterion,
        /// Every criterion that holds.
        criteria: Vec<Criterion>,
        scope: &'static str,
    },
    Inconclusive {
        left: DistortionValue,
        right: DistortionValue,
    },
}

impl Verdict {
    pub fn commutes(&self) -> bool {
        matches!(self, Verdict::Commutes { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Commutes {
                criterion, scope, ..
            } => write!(f, "Commutes ({criterion}; scope: {scope})"),
            Verdict::Inconclusive { left, right } => {
                write!(f, "Inconclusive (distortions differ: {left} vs {right})")
            }
        }
    }
}

/// Regular-domain criterion (not in the braided flavor), then equality of the
/// symmetric, additive or braided distortion.
pub fn decide(p: &Path, q: &Path, flavor: Flavor) -> Result<Verdict, CoherenceError> {
    if p.boundaries() != q.boundaries() {
        return Err(CoherenceError::NotParallel {
            left_dom: p.domain().clone(),
            left_cod: p.codomain().clone(),
            right_dom: q.domain().clone(),
            right_cod: q.codomain().clone(),
        });
    }
    p.check_flavor(flavor)?;
    q.check_flavor(flavor)?;
    let mode = DistortionMode::for_flavor(flavor);
    let (dp, dq) = (distortion(p, mode)?, distortion(q, mode)?);
    let regular = match flavor {
        Flavor::Symmetric => is_regular(p.domain()),
        Flavor::Nonsymmetric => is_ns_regular(p.domain()),
        Flavor::Braided => false,
    };
    let mut criteria = Vec::new();
    if dp.same_as(&dq) {
        criteria.push(Criterion::EqualDistortion);
    }
    if regular {
        criteria.push(Criterion::RegularDomain);
    }
    Ok(match criteria.first() {
        Some(&criterion) => Verdict::Commutes {
            criterion,
            criteria,
            scope: scope(flavor),
        },
        None => Verdict::Inconclusive {
            left: dp,
            right: dq,
        },
    })
}

/// Settings for generating parallel path pairs.
#[derive(Clone, Copy, Debug)]
pub struct FuzzSpec {
    pub flavor: Flavor,
    pub max_leaves: usize,
    pub generators: usize,
    pub walk_length: usize,
    pub max_unit_insertions: usize,
}

impl FuzzSpec {
    pub fn new(flavor: Flavor) -> Self {
        FuzzSpec {
            flavor,
            max_leaves: 5,
            generators: 3,
            walk_length: 6,
            max_unit_insertions: 2,
        }
    }
}

fn random_walk<R: Rng + ?Sized>(rng: &mut R, t: &Term, spec: &FuzzSpec) -> Path {
    let mut p = Path::identity(t.clone());
    let mut insertions = 0;
    let len = rng.gen_range(0..=spec.walk_length);
    for _ in 0..len {
        let q = EdgeQuery {
            unit_insertions: insertions < spec.max_unit_insertions,
            ..EdgeQuery::with_inverses(spec.flavor)
        };
        let edges = applicable_edges(p.codomain(), &q);
        let Some(e) = edges.choose(rng) else { break };
        let inserts = e.edge.direction() == Direction::Inverse
            && matches!(
                e.edge.kind(),
                EdgeKind::LambdaSum | EdgeKind::RhoSum | EdgeKind::LambdaTens | EdgeKind::RhoTens
            );
        if inserts {
            insertions += 1;
        }
        p.push(e.clone()).expect("applicable edge composes");
    }
    p
}

/// Two random walks from a random term, each closed off by its normal-form path,
/// so both end at the same vertex.
pub fn random_parallel_pair<R: Rng + ?Sized>(rng: &mut R, spec: &FuzzSpec) -> (Path, Path) {
    let tspec = RandomTermSpec::new(spec.max_leaves, spec.generators, 0.15);
    let leaves = rng.gen_range(1..=spec.max_leaves);
    let t = random_term_with_leaves(rng, &tspec, leaves);
    let close = |w: Path| {
        let (_, nf) = normal_form_with(w.codomain(), spec.flavor);
        w.compose(&nf)
            .expect("normal form starts at the walk's end")
    };
    let p = close(random_walk(rng, &t, spec));
    let q = close(random_walk(rng, &t, spec));
    (p, q)
}

fn injective_assignments<O: Clone>(gens: &[Generator], pool: &[O]) -> Vec<HashMap<Generator, O>> {
    fn go<O: Clone>(
        gens: &[Generator],
        pool: &[O],
        used: &mut Vec<bool>,
        cur: &mut HashMap<Generator, O>,
        out: &mut Vec<HashMap<Generator, O>>,
    ) {
        let Some((g, rest)) = gens.split_first() else {
            out.push(cur.clone());
            return;
        };
        for i in 0..pool.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            cur.insert(g.clone(), pool[i].clone());
            go(rest, pool, used, cur, out);
            cur.remove(g);
            used[i] = false;
        }
    }
    let mut out = Vec::new();
    go(
        gens,
        pool,
        &mut vec![false; pool.len()],
        &mut HashMap::new(),
        &mut out,
    );
    out
}

/// Evaluates both paths under every injective assignment from `pool`; returns the first disagreement.
pub fn compare_in<T: Bimonoidal + ?Sized>(
    target: &T,
    p: &Path,
    q: &Path,
    pool: &[T::Obj],
) -> Result<usize, String> {
    let gens: Vec<Generator> = p.domain().generators().into_iter().collect();
    let mut count = 0;
    for a in injective_assignments(&gens, pool) {
        let assign = |g: &Generator| a.get(g).cloned();
        let l = evaluate_path(target, p, &assign).map_err(|e| format!("{}: {e}", target.name()))?;
        let r = evaluate_path(target, q, &assign).map_err(|e| format!("{}: {e}", target.name()))?;
        if !target.mor_eq(&l, &r) {
            let shown: Vec<String> = gens.iter().map(|g| format!("{g}={}", a[g])).collect();
            return Err(format!(
                "{} disagrees at {}: {l} vs {r}",
                target.name(),
                shown.join(",")
            ));
        }
        count += 1;
    }
    Ok(count)
}

/// Object pools for the built-in targets.
pub fn sigma_pool() -> Vec<usize> {
    vec![0, 1, 2, 3]
}

pub fn d_pool() -> Vec<DObject> {
    [vec![1], vec![2], vec![1, 1], vec![0], vec![], vec![2, 1]]
        .into_iter()
        .map(DObject)
        .collect()
}

/// Checks a pair in every built-in flat target that can interpret paths of `flavor`;
/// returns the number of evaluations performed.
pub fn confirm_in_targets(p: &Path, q: &Path, flavor: Flavor) -> Result<usize, String> {
    let mut n = compare_in(&sigma_target(), p, q, &sigma_pool())?;
    n += compare_in(&sigma_prime_target(), p, q, &sigma_pool())?;
    n += compare_in(&Distortion, p, q, &d_pool())?;
    match flavor {
        Flavor::Nonsymmetric => n += compare_in(&dad_target(), p, q, &d_pool())?,
        Flavor::Braided => n += compare_in(&dbr_target(), p, q, &d_pool())?,
        Flavor::Symmetric => {}
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{route, ElementaryEdge, PathBuilder, PrimeEdge};
    use crate::terms::parse_term;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn diamond() -> (Path, Path) {
        use EdgeKind::*;
        let dom = t("((a+b)*(c+d))");
        let mut p = PathBuilder::new(dom.clone());
        p.fwd(&[], DeltaL)
            .unwrap()
            .fwd(&route("L"), DeltaR)
            .unwrap()
            .fwd(&route("R"), DeltaR)
            .unwrap();
        let mut q = PathBuilder::new(dom);
        q.fwd(&[], DeltaR)
            .unwrap()
            .fwd(&route("L"), DeltaL)
            .unwrap()
            .fwd(&route("R"), DeltaL)
            .unwrap();
        q.fwd(&[], AlphaSum)
            .unwrap()
            .inv(&route("R"), AlphaSum)
            .unwrap();
        q.fwd(&route("RL"), ZetaSum)
            .unwrap()
            .fwd(&route("R"), AlphaSum)
            .unwrap()
            .inv(&[], AlphaSum)
            .unwrap();
        (p.into_path(), q.into_path())
    }

    #[test]
    fn diamond_commutes_both_ways() {
        let (p, q) = diamond();
        assert_eq!(p.codomain(), q.codomain());
        match decide(&p, &q, Flavor::Symmetric).unwrap() {
            Verdict::Commutes {
                criterion,
                criteria,
                scope,
            } => {
                assert_eq!(criterion, Criterion::EqualDistortion);
                assert!(criteria.contains(&Criterion::RegularDomain));
                assert_eq!(scope, "flat symmetric bimonoidal");
            }
            v => panic!("{v}"),
        }
    }

    #[test]
    fn braiding_separates() {
        let p = Path::single(PrimeEdge::bare(
            ElementaryEdge::forward(EdgeKind::ZetaTens, vec![t("x"), t("y")]).unwrap(),
        ));
        let inv = ElementaryEdge::new(EdgeKind::ZetaTens, vec![t("y"), t("x")], Direction::Inverse)
            .unwrap();
        let q = Path::single(PrimeEdge::bare(inv));
        assert!(!decide(&p, &q, Flavor::Braided).unwrap().commutes());
        assert!(decide(&p, &q, Flavor::Symmetric).unwrap().commutes());
        assert!(decide(&p, &p, Flavor::Braided).unwrap().commutes());
    }

    #[test]
    fn rejects_non_parallel_and_wrong_mode() {
        let p = Path::single(PrimeEdge::bare(
            ElementaryEdge::forward(EdgeKind::ZetaTens, vec![t("x"), t("y")]).unwrap(),
        ));
        let id = Path::identity(t("(x*y)"));
        assert!(matches!(
            decide(&p, &id, Flavor::Symmetric),
            Err(CoherenceError::NotParallel { .. })
        ));
        assert!(matches!(
            decide(&p, &p, Flavor::Nonsymmetric),
            Err(CoherenceError::Mode(_))
        ));
    }

    #[test]
    fn fuzz_pairs_are_parallel() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for flavor in [Flavor::Symmetric, Flavor::Nonsymmetric, Flavor::Braided] {
            for _ in 0..20 {
                let (p, q) = random_parallel_pair(&mut rng, &FuzzSpec::new(flavor));
                assert_eq!(p.boundaries(), q.boundaries());
                p.check_flavor(flavor).unwrap();
                let v = decide(&p, &q, flavor).unwrap();
                if v.commutes() {
                    confirm_in_targets(&p, &q, flavor).unwrap();
                }
            }
        }
    }
}
