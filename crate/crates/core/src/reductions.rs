//! Zero, distributivity and unit reductions, normal forms, and synthesis of
//! canonical paths.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::paths::{Direction, EdgeKind, Flavor, Path, PathBuilder, PathError, Side};
use crate::permbraid::{BraidWord, Permutation};
use crate::targets::{distortion, DistortionMode, DistortionValue, TargetError};
use crate::terms::{is_delta_reduced, support, Generator, Op, SupportFlavor, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("{0} contains a zero leaf; reduce zeros first")]
    ZeroPresent(Term),
    #[error("{0} is not δ-reduced")]
    NotDeltaReduced(Term),
    #[error("{0} has the support of 0, so the path has no (0, δ)-reduction")]
    ZeroSupport(Term),
    #[error("cannot synthesize a path from {from} to {to}: {reason}")]
    Synthesis {
        from: Term,
        to: Term,
        reason: String,
    },
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Target(#[from] TargetError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Zero,
    Delta,
    One,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::Zero => "zero",
            ReductionKind::Delta => "delta",
            ReductionKind::One => "one",
        })
    }
}

impl FromStr for ReductionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zero" => Ok(ReductionKind::Zero),
            "delta" => Ok(ReductionKind::Delta),
            "one" => Ok(ReductionKind::One),
            other => Err(format!("unknown reduction kind {other:?}")),
        }
    }
}

/// Which redex to rewrite next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// The first redex in post-order.
    InnermostLeftmost,
    /// A uniformly random redex, from a seeded generator.
    Random(u64),
}

fn local_redexes(t: &Term, kind: ReductionKind) -> Vec<EdgeKind> {
    let mut out = Vec::new();
    match (kind, t) {
        (ReductionKind::Zero, Term::Sum(a, b)) => {
            if **a == Term::Zero {
                out.push(EdgeKind::LambdaSum);
            }
            if **b == Term::Zero {
                out.push(EdgeKind::RhoSum);
            }
        }
        (ReductionKind::Zero, Term::Prod(a, b)) => {
            if **a == Term::Zero {
                out.push(EdgeKind::LambdaDot);
            }
            if **b == Term::Zero {
                out.push(EdgeKind::RhoDot);
            }
        }
        (ReductionKind::Delta, Term::Prod(a, b)) => {
            if matches!(**b, Term::Sum(..)) {
                out.push(EdgeKind::DeltaL);
            }
            if matches!(**a, Term::Sum(..)) {
                out.push(EdgeKind::DeltaR);
            }
        }
        (ReductionKind::One, Term::Prod(a, b)) => {
            if **a == Term::One {
                out.push(EdgeKind::LambdaTens);
            }
            if **b == Term::One {
                out.push(EdgeKind::RhoTens);
            }
        }
        _ => {}
    }
    out
}

/// Redexes in post-order, each with the route to its subterm.
fn redexes(t: &Term, kind: ReductionKind) -> Vec<(Vec<Side>, EdgeKind)> {
    fn go(
        t: &Term,
        kind: ReductionKind,
        route: &mut Vec<Side>,
        out: &mut Vec<(Vec<Side>, EdgeKind)>,
    ) {
        if let Some((_, a, b)) = t.split() {
            route.push(Side::Left);
            go(a, kind, route, out);
            route.pop();
            route.push(Side::Right);
            go(b, kind, route, out);
            route.pop();
        }
        for k in local_redexes(t, kind) {
            out.push((route.clone(), k));
        }
    }
    let mut out = Vec::new();
    go(t, kind, &mut Vec::new(), &mut out);
    out
}

fn rewrite(t: &Term, kind: ReductionKind, strategy: Strategy) -> Path {
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::InnermostLeftmost => None,
    };
    let mut b = PathBuilder::new(t.clone());
    loop {
        let rs = redexes(b.current(), kind);
        if rs.is_empty() {
            break;
        }
        let pick = match rng.as_mut() {
            Some(r) => r.gen_range(0..rs.len()),
            None => 0,
        };
        let (route, edge) = &rs[pick];
        b.fwd(route, *edge).expect("redex shape was just matched");
    }
    b.into_path()
}

pub fn zero_reduce(t: &Term) -> Path {
    zero_reduce_with(t, Strategy::InnermostLeftmost)
}

/// Removes zero leaves with unit and multiplicative-zero edges; the codomain is
/// zero-free, or is `0` itself when the support is that of `0`.
pub fn zero_reduce_with(t: &Term, strategy: Strategy) -> Path {
    rewrite(t, ReductionKind::Zero, strategy)
}

pub fn delta_reduce(t: &Term) -> Result<Path, ReductionError> {
    delta_reduce_with(t, Strategy::InnermostLeftmost)
}

/// Expands products over sums with forward distributivity edges until the term is a polynomial.
pub fn delta_reduce_with(t: &Term, strategy: Strategy) -> Result<Path, ReductionError> {
    if t.contains_zero() {
        return Err(ReductionError::ZeroPresent(t.clone()));
    }
    Ok(rewrite(t, ReductionKind::Delta, strategy))
}

pub fn one_reduce(t: &Term) -> Result<Path, ReductionError> {
    one_reduce_with(t, Strategy::InnermostLeftmost)
}

/// Removes multiplicative units; a monomial that is just `1` stays.
pub fn one_reduce_with(t: &Term, strategy: Strategy) -> Result<Path, ReductionError> {
    if !is_delta_reduced(t) {
        return Err(ReductionError::NotDeltaReduced(t.clone()));
    }
    Ok(rewrite(t, ReductionKind::One, strategy))
}

/// Runs one reduction kind, checking its precondition.
pub fn reduce(t: &Term, kind: ReductionKind, strategy: Strategy) -> Result<Path, ReductionError> {
    match kind {
        ReductionKind::Zero => Ok(zero_reduce_with(t, strategy)),
        ReductionKind::Delta => delta_reduce_with(t, strategy),
        ReductionKind::One => one_reduce_with(t, strategy),
    }
}

/// Zero reduction followed by distributivity reduction.
pub fn zero_delta_reduce(t: &Term) -> Path {
    let z = zero_reduce(t);
    if z.codomain().contains_zero() {
        return z;
    }
    let d = delta_reduce(z.codomain()).expect("zero-free after zero reduction");
    z.compose(&d).expect("composable by construction")
}

fn left_normalize(b: &mut PathBuilder) {
    for kind in [EdgeKind::AlphaSum, EdgeKind::AlphaTens] {
        loop {
            let found = first_right_nested(b.current(), kind);
            match found {
                Some(route) => {
                    b.inv(&route, kind)
                        .expect("right-nested shape was just matched");
                }
                None => break,
            }
        }
    }
}

fn first_right_nested(t: &Term, kind: EdgeKind) -> Option<Vec<Side>> {
    fn go(t: &Term, kind: EdgeKind, route: &mut Vec<Side>) -> Option<Vec<Side>> {
        if let Some((_, a, b)) = t.split() {
            route.push(Side::Left);
            if let Some(r) = go(a, kind, route) {
                return Some(r);
            }
            route.pop();
            route.push(Side::Right);
            if let Some(r) = go(b, kind, route) {
                return Some(r);
            }
            route.pop();
        }
        let hit = match (kind, t) {
            (EdgeKind::AlphaSum, Term::Sum(_, b)) => matches!(**b, Term::Sum(..)),
            (EdgeKind::AlphaTens, Term::Prod(_, b)) => matches!(**b, Term::Prod(..)),
            _ => false,
        };
        hit.then(|| route.clone())
    }
    go(t, kind, &mut Vec::new())
}

/// Summands of a left-nested sum.
pub fn summands(t: &Term) -> Vec<Term> {
    match t {
        Term::Sum(a, b) => {
            let mut v = summands(a);
            v.push((**b).clone());
            v
        }
        _ => vec![t.clone()],
    }
}

/// Generator factors of a unit-free monomial; `1` has none.
pub fn factors(t: &Term) -> Vec<Generator> {
    match t {
        Term::Prod(a, b) => {
            let mut v = factors(a);
            v.extend(factors(b));
            v
        }
        Term::Gen(g) => vec![g.clone()],
        _ => Vec::new(),
    }
}

fn left_spine(depth: usize) -> Vec<Side> {
    vec![Side::Left; depth]
}

/// Route to summand `i` of a left-nested sum of `k` summands.
fn summand_route(k: usize, i: usize) -> Vec<Side> {
    if k <= 1 {
        Vec::new()
    } else if i == 0 {
        left_spine(k - 1)
    } else {
        let mut r = left_spine(k - 1 - i);
        r.push(Side::Right);
        r
    }
}

/// Swaps items `j` and `j+1` of a left-nested `op`-chain of `k` items rooted at `base`.
fn swap_adjacent(
    b: &mut PathBuilder,
    base: &[Side],
    op: Op,
    k: usize,
    j: usize,
    zeta_dir: Direction,
) -> Result<(), PathError> {
    let (alpha, zeta) = match op {
        Op::Sum => (EdgeKind::AlphaSum, EdgeKind::ZetaSum),
        Op::Prod => (EdgeKind::AlphaTens, EdgeKind::ZetaTens),
    };
    let mut node = base.to_vec();
    node.extend(left_spine(k - 2 - j));
    if j == 0 {
        b.apply(&node, zeta, zeta_dir)?;
    } else {
        b.fwd(&node, alpha)?;
        node.push(Side::Right);
        b.apply(&node, zeta, zeta_dir)?;
        node.pop();
        b.inv(&node, alpha)?;
    }
    Ok(())
}

/// Adjacent swaps to perform, in order, on the factors of one monomial.
type SwapPlan = Vec<(usize, Direction)>;

fn perm_plan(p: &Permutation) -> SwapPlan {
    p.adjacent_swaps()
        .into_iter()
        .map(|j| (j, Direction::Forward))
        .collect()
}

fn braid_plan(w: &BraidWord) -> SwapPlan {
    w.letters()
        .iter()
        .rev()
        .map(|l| {
            (
                l.index - 1,
                if l.positive {
                    Direction::Forward
                } else {
                    Direction::Inverse
                },
            )
        })
        .collect()
}

/// Permutes factors inside monomials, then whole monomials, of a left-normalized polynomial.
fn apply_plans(
    b: &mut PathBuilder,
    parts: &[SwapPlan],
    top: &Permutation,
) -> Result<(), PathError> {
    let k = summands(b.current()).len();
    for (i, plan) in parts.iter().enumerate() {
        if plan.is_empty() {
            continue;
        }
        let base = summand_route(k, i);
        let len = factors(&summands(b.current())[i]).len();
        for &(j, dir) in plan {
            swap_adjacent(b, &base, Op::Prod, len, j, dir)?;
        }
    }
    for j in top.adjacent_swaps() {
        swap_adjacent(b, &[], Op::Sum, k, j, Direction::Forward)?;
    }
    Ok(())
}

fn monomial_key(m: &Term) -> (usize, Vec<String>) {
    let f = factors(m);
    (f.len(), f.iter().map(|g| g.name().to_string()).collect())
}

/// Permutation sending position `i` to the rank of `keys[i]` (stable).
fn sorting_permutation<K: Ord>(keys: &[K]) -> Permutation {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut image = vec![0; keys.len()];
    for (rank, &i) in idx.iter().enumerate() {
        image[i] = rank;
    }
    Permutation::from_zero_based(image).expect("ranks form a bijection")
}

/// Path from `t` to its canonical polynomial: zero, distributivity and unit
/// reductions, left normalization, then sorting of factors (not in the
/// nonsymmetric flavor) and of monomials by (length, factor names).
pub fn normal_form_with(t: &Term, flavor: Flavor) -> (Term, Path) {
    let mut b = PathBuilder::from_path(zero_delta_reduce(t));
    if *b.current() != Term::Zero {
        let ones = one_reduce(b.current()).expect("δ-reduced after distributivity reduction");
        b.append(&ones).expect("composable by construction");
        left_normalize(&mut b);
        let monos = summands(b.current());
        let parts: Vec<SwapPlan> = if flavor == Flavor::Nonsymmetric {
            vec![Vec::new(); monos.len()]
        } else {
            monos
                .iter()
                .map(|m| {
                    let names: Vec<String> =
                        factors(m).iter().map(|g| g.name().to_string()).collect();
                    perm_plan(&sorting_permutation(&names))
                })
                .collect()
        };
        let mut after_parts = PathBuilder::from_path(b.build());
        apply_plans(
            &mut after_parts,
            &parts,
            &Permutation::identity(monos.len()),
        )
        .expect("swaps fit the shape");
        let keys: Vec<(usize, Vec<String>)> = summands(after_parts.current())
            .iter()
            .map(monomial_key)
            .collect();
        apply_plans(
            &mut after_parts,
            &vec![Vec::new(); keys.len()],
            &sorting_permutation(&keys),
        )
        .expect("swaps fit the shape");
        b = after_parts;
    }
    let p = b.into_path();
    (p.codomain().clone(), p)
}

pub fn normal_form(t: &Term) -> (Term, Path) {
    normal_form_with(t, Flavor::Symmetric)
}

/// Whether distributivity edges may be formally inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMode {
    /// The result must be an isomorphism built from invertible edges only.
    Iso,
    /// Formal inverses of distributivity are allowed, as in tight targets.
    Tight,
}

/// The normal-form path of `u` followed by the inverse of that of `v`, when the normal forms agree.
pub fn canonical_iso(u: &Term, v: &Term, mode: IsoMode, flavor: Flavor) -> Option<Path> {
    if u == v {
        return Some(Path::identity(u.clone()));
    }
    let (nu, pu) = normal_form_with(u, flavor);
    let (nv, pv) = normal_form_with(v, flavor);
    if nu != nv {
        return None;
    }
    if mode == IsoMode::Iso && (pu.uses_kind(EdgeKind::DeltaL) || pu.uses_kind(EdgeKind::DeltaR)) {
        return None;
    }
    let back = match mode {
        IsoMode::Iso => pv.inverse().ok()?,
        IsoMode::Tight => pv.inverse_tight(),
    };
    Some(
        pu.compose(&back)
            .expect("normal forms agree")
            .cancel_inverse_pairs(flavor),
    )
}

fn synthesis_error(from: &Term, to: &Term, reason: impl Into<String>) -> ReductionError {
    ReductionError::Synthesis {
        from: from.clone(),
        to: to.clone(),
        reason: reason.into(),
    }
}

/// A path between two polynomials whose distortion is `d`.
///
/// Both ends are unit-reduced and left-normalized; in between, factors are
/// permuted inside each monomial and then monomials are permuted, as `d` dictates.
pub fn synthesize(
    from: &Term,
    to: &Term,
    d: &DistortionValue,
    flavor: Flavor,
) -> Result<Path, ReductionError> {
    let prepare = |t: &Term| -> Result<Path, ReductionError> {
        let mut b = PathBuilder::from_path(one_reduce(t)?);
        left_normalize(&mut b);
        Ok(b.into_path())
    };
    let pf = prepare(from)?;
    let pt = prepare(to)?;
    let (parts, top): (Vec<SwapPlan>, Permutation) = match d {
        DistortionValue::Symmetric(m) => (m.parts.iter().map(perm_plan).collect(), m.top.clone()),
        DistortionValue::Additive(m) => (vec![Vec::new(); m.top.len()], m.top.clone()),
        DistortionValue::Braided(m) => (m.parts.iter().map(braid_plan).collect(), m.top.clone()),
    };
    let k = summands(pf.codomain()).len();
    if top.len() != k || parts.len() != k {
        return Err(synthesis_error(
            from,
            to,
            format!(
                "distortion has {} entries, term has {k} monomials",
                top.len()
            ),
        ));
    }
    if flavor == Flavor::Nonsymmetric && parts.iter().any(|p| !p.is_empty()) {
        return Err(synthesis_error(
            from,
            to,
            "nonsymmetric paths cannot permute factors",
        ));
    }
    let mut b = PathBuilder::from_path(pf);
    apply_plans(&mut b, &parts, &top).map_err(|e| synthesis_error(from, to, e.to_string()))?;
    if b.current() != pt.codomain() {
        return Err(synthesis_error(
            from,
            to,
            format!("reached {} instead of {}", b.current(), pt.codomain()),
        ));
    }
    let back = pt
        .inverse()
        .map_err(|e| synthesis_error(from, to, e.to_string()))?;
    b.append(&back)?;
    Ok(b.into_path().cancel_inverse_pairs(flavor))
}

/// Transports `p` to a path between the (0, δ)-reduced endpoints with the
/// same value, computed from its distortion.
pub fn reduce_path(p: &Path, flavor: Flavor) -> Result<Path, ReductionError> {
    p.check_flavor(flavor)?;
    let sflavor = if flavor == Flavor::Nonsymmetric {
        SupportFlavor::Nonsymmetric
    } else {
        SupportFlavor::Symmetric
    };
    if support(p.domain(), sflavor).is_zero() {
        return Err(ReductionError::ZeroSupport(p.domain().clone()));
    }
    let ru = zero_delta_reduce(p.domain());
    let rt = zero_delta_reduce(p.codomain());
    let conj = ru.inverse_tight().compose(p)?.compose(&rt)?;
    let d = distortion(&conj, DistortionMode::for_flavor(flavor))?;
    synthesize(ru.codomain(), rt.codomain(), &d, flavor)
}
