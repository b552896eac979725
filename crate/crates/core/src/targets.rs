//! Concrete bimonoidal categories used as evaluation targets, path evaluation,
//! distortions, and the axiom checker.
//!
//! Σ and 𝔇 order the entries of a product `r ⊗ s` with the right factor
//! outermost: the pair `(i, j)` sits at index `j·|r| + i`. With that ordering
//! left distributivity is an identity. Σ′ uses the lexicographic ordering
//! instead, which makes right distributivity the identity.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::paths::{
    route, Direction, EdgeKind, ElementaryEdge, Flavor, Path, PathBuilder, PathError, PrimeEdge,
    Side,
};
use crate::permbraid::{
    braid_block_sum, braid_equal, elementary_block_braid, perm_block_sum, perm_kron, perm_tau,
    perm_transpose, BraidWord, Letter, PermError, Permutation,
};
use crate::terms::{Generator, Op, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TargetError {
    #[error("cannot compose {left} after {right}")]
    Compose { left: String, right: String },
    #[error("{kind} is not available in {target}")]
    Unsupported { kind: EdgeKind, target: String },
    #[error("formal inverse of {kind} needs a tight target, {target} is not")]
    NotTight { kind: EdgeKind, target: String },
    #[error("no object assigned to generator {0}")]
    Unassigned(Generator),
    #[error("{kind} takes {expected} objects, got {got}")]
    Arity {
        kind: EdgeKind,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Path(#[from] PathError),
}

/// A bimonoidal category whose objects and morphisms can be computed with.
pub trait Bimonoidal {
    type Obj: Clone + PartialEq + fmt::Debug + fmt::Display;
    type Mor: Clone + fmt::Debug + fmt::Display;

    fn name(&self) -> String;
    fn flavor(&self) -> Flavor;
    fn is_tight(&self) -> bool {
        true
    }

    fn zero(&self) -> Self::Obj;
    fn one(&self) -> Self::Obj;
    fn obj_sum(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn obj_prod(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;

    fn domain(&self, f: &Self::Mor) -> Self::Obj;
    fn codomain(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, TargetError>;
    fn inverse(&self, f: &Self::Mor) -> Self::Mor;
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool;
    fn mor_sum(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn mor_prod(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;

    /// The forward structure morphism of `kind` at the given components.
    fn structure(&self, kind: EdgeKind, objs: &[Self::Obj]) -> Result<Self::Mor, TargetError>;

    /// Objects used for exhaustive checks at size `bound`.
    fn small_objects(&self, bound: usize) -> Vec<Self::Obj>;
    /// A finite supply of morphisms out of `a` (all of them when the hom sets are finite).
    fn morphisms_from(&self, a: &Self::Obj) -> Vec<Self::Mor>;
}

fn check_arity(kind: EdgeKind, n: usize) -> Result<(), TargetError> {
    if n != kind.arity() {
        return Err(TargetError::Arity {
            kind,
            expected: kind.arity(),
            got: n,
        });
    }
    Ok(())
}

/// Source object of a structure morphism, computed from the edge shape.
pub fn structure_source<T: Bimonoidal + ?Sized>(t: &T, kind: EdgeKind, o: &[T::Obj]) -> T::Obj {
    use EdgeKind::*;
    match kind {
        AlphaSum => t.obj_sum(&t.obj_sum(&o[0], &o[1]), &o[2]),
        LambdaSum => t.obj_sum(&t.zero(), &o[0]),
        RhoSum => t.obj_sum(&o[0], &t.zero()),
        ZetaSum => t.obj_sum(&o[0], &o[1]),
        AlphaTens => t.obj_prod(&t.obj_prod(&o[0], &o[1]), &o[2]),
        LambdaTens => t.obj_prod(&t.one(), &o[0]),
        RhoTens => t.obj_prod(&o[0], &t.one()),
        ZetaTens => t.obj_prod(&o[0], &o[1]),
        LambdaDot => t.obj_prod(&t.zero(), &o[0]),
        RhoDot => t.obj_prod(&o[0], &t.zero()),
        DeltaL => t.obj_prod(&o[0], &t.obj_sum(&o[1], &o[2])),
        DeltaR => t.obj_prod(&t.obj_sum(&o[0], &o[1]), &o[2]),
    }
}

// ---------------------------------------------------------------------------
// Σ and Σ′

/// Finite ordinals and permutations. `prime` selects the lexicographic product ordering.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Sigma {
    prime: bool,
}

pub fn sigma_target() -> Sigma {
    Sigma { prime: false }
}

pub fn sigma_prime_target() -> Sigma {
    Sigma { prime: true }
}

/// δ^r of Σ: `(m+n)·p → m·p + n·p` with the right factor outermost.
pub fn sigma_delta_r(m: usize, n: usize, p: usize) -> Permutation {
    let mut image = Vec::with_capacity((m + n) * p);
    for k in 0..p {
        for i in 0..m + n {
            image.push(if i < m {
                k * m + i
            } else {
                m * p + k * n + (i - m)
            });
        }
    }
    Permutation::from_zero_based(image).expect("bijection by construction")
}

/// δ^l of Σ′: `m·(n+p) → m·n + m·p` with the left factor outermost.
pub fn sigma_prime_delta_l(m: usize, n: usize, p: usize) -> Permutation {
    let mut image = Vec::with_capacity(m * (n + p));
    for i in 0..m {
        for j in 0..n + p {
            image.push(if j < n {
                i * n + j
            } else {
                m * n + i * p + (j - n)
            });
        }
    }
    Permutation::from_zero_based(image).expect("bijection by construction")
}

impl Sigma {
    pub fn is_prime(&self) -> bool {
        self.prime
    }
}

impl Bimonoidal for Sigma {
    type Obj = usize;
    type Mor = Permutation;

    fn name(&self) -> String {
        if self.prime { "Sigma'" } else { "Sigma" }.to_string()
    }

    fn flavor(&self) -> Flavor {
        Flavor::Symmetric
    }

    fn zero(&self) -> usize {
        0
    }

    fn one(&self) -> usize {
        1
    }

    fn obj_sum(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn obj_prod(&self, a: &usize, b: &usize) -> usize {
        a * b
    }

    fn domain(&self, f: &Permutation) -> usize {
        f.len()
    }

    fn codomain(&self, f: &Permutation) -> usize {
        f.len()
    }

    fn identity(&self, a: &usize) -> Permutation {
        Permutation::identity(*a)
    }

    fn compose(&self, g: &Permutation, f: &Permutation) -> Result<Permutation, TargetError> {
        g.try_compose(f).map_err(|_| TargetError::Compose {
            left: g.to_string(),
            right: f.to_string(),
        })
    }

    fn inverse(&self, f: &Permutation) -> Permutation {
        f.inverse()
    }

    fn mor_eq(&self, f: &Permutation, g: &Permutation) -> bool {
        f == g
    }

    fn mor_sum(&self, f: &Permutation, g: &Permutation) -> Permutation {
        perm_block_sum(f, g)
    }

    fn mor_prod(&self, f: &Permutation, g: &Permutation) -> Permutation {
        if self.prime {
            perm_kron(f, g)
        } else {
            perm_kron(g, f)
        }
    }

    fn structure(&self, kind: EdgeKind, o: &[usize]) -> Result<Permutation, TargetError> {
        check_arity(kind, o.len())?;
        Ok(match kind {
            EdgeKind::ZetaSum => perm_tau(o[0], o[1]),
            EdgeKind::ZetaTens if self.prime => perm_transpose(o[0], o[1]),
            EdgeKind::ZetaTens => perm_transpose(o[1], o[0]),
            EdgeKind::DeltaL if self.prime => sigma_prime_delta_l(o[0], o[1], o[2]),
            EdgeKind::DeltaR if !self.prime => sigma_delta_r(o[0], o[1], o[2]),
            _ => Permutation::identity(structure_source(self, kind, o)),
        })
    }

    fn small_objects(&self, bound: usize) -> Vec<usize> {
        (0..=bound).collect()
    }

    fn morphisms_from(&self, a: &usize) -> Vec<Permutation> {
        Permutation::all(*a)
    }
}

// ---------------------------------------------------------------------------
// Distortion categories

/// A finite sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct DObject(pub Vec<usize>);

impl DObject {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self, other: &DObject) -> DObject {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        DObject(v)
    }

    /// Entry `(i, j)` sits at index `j·|self| + i` and equals `self_i + other_j`.
    pub fn prod(&self, other: &DObject) -> DObject {
        let mut v = Vec::with_capacity(self.len() * other.len());
        for s in &other.0 {
            for r in &self.0 {
                v.push(r + s);
            }
        }
        DObject(v)
    }

    /// The object reached by moving entry `i` to position `top(i)`.
    pub fn permuted(&self, top: &Permutation) -> DObject {
        let mut v = vec![0; self.len()];
        for (i, &r) in self.0.iter().enumerate() {
            v[top.apply(i)] = r;
        }
        DObject(v)
    }

    /// All sequences of length ≤ `max_len` with entries ≤ `max_entry`.
    pub fn all_up_to(max_len: usize, max_entry: usize) -> Vec<DObject> {
        let mut out = vec![DObject(Vec::new())];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for v in &layer {
                for e in 0..=max_entry {
                    let mut w: Vec<usize> = v.clone();
                    w.push(e);
                    next.push(w);
                }
            }
            out.extend(next.iter().cloned().map(DObject));
            layer = next;
        }
        out
    }
}

impl fmt::Display for DObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

fn kron_rows_outer(top_left: &Permutation, top_right: &Permutation) -> Permutation {
    perm_kron(top_right, top_left)
}

/// ζ^⊗ top for sequences of lengths `m` and `n`.
fn zeta_tens_top(m: usize, n: usize) -> Permutation {
    perm_transpose(n, m)
}

/// A morphism `(σ; σ_1, …, σ_m)` of 𝔇: `parts[i]` acts on entry `i` of the domain.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DistortionMorphism {
    pub dom: DObject,
    pub top: Permutation,
    pub parts: Vec<Permutation>,
}

impl DistortionMorphism {
    pub fn new(
        dom: DObject,
        top: Permutation,
        parts: Vec<Permutation>,
    ) -> Result<Self, TargetError> {
        if top.len() != dom.len() || parts.len() != dom.len() {
            return Err(PermError::LengthMismatch {
                expected: dom.len(),
                got: top.len().max(parts.len()),
            }
            .into());
        }
        for (p, &r) in parts.iter().zip(&dom.0) {
            if p.len() != r {
                return Err(PermError::LengthMismatch {
                    expected: r,
                    got: p.len(),
                }
                .into());
            }
        }
        Ok(DistortionMorphism { dom, top, parts })
    }

    pub fn codomain(&self) -> DObject {
        self.dom.permuted(&self.top)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "[")?;
    for (i, p) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "]")
}

impl fmt::Display for DistortionMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "top={} parts=", self.top)?;
        write_list(f, &self.parts)
    }
}

/// The distortion category 𝔇.
#[derive(Clone, Copy, Debug, Default)]
pub struct Distortion;

pub fn d_target() -> Distortion {
    Distortion
}

impl Bimonoidal for Distortion {
    type Obj = DObject;
    type Mor = DistortionMorphism;

    fn name(&self) -> String {
        "D".into()
    }

    fn flavor(&self) -> Flavor {
        Flavor::Symmetric
    }

    fn zero(&self) -> DObject {
        DObject(vec![])
    }

    fn one(&self) -> DObject {
        DObject(vec![0])
    }

    fn obj_sum(&self, a: &DObject, b: &DObject) -> DObject {
        a.sum(b)
    }

    fn obj_prod(&self, a: &DObject, b: &DObject) -> DObject {
        a.prod(b)
    }

    fn domain(&self, f: &DistortionMorphism) -> DObject {
        f.dom.clone()
    }

    fn codomain(&self, f: &DistortionMorphism) -> DObject {
        f.codomain()
    }

    fn identity(&self, a: &DObject) -> DistortionMorphism {
        DistortionMorphism {
            dom: a.clone(),
            top: Permutation::identity(a.len()),
            parts: a.0.iter().map(|&r| Permutation::identity(r)).collect(),
        }
    }

    fn compose(
        &self,
        g: &DistortionMorphism,
        f: &DistortionMorphism,
    ) -> Result<DistortionMorphism, TargetError> {
        if g.dom != f.codomain() {
            return Err(TargetError::Compose {
                left: g.to_string(),
                right: f.to_string(),
            });
        }
        let parts = (0..f.dom.len())
            .map(|i| g.parts[f.top.apply(i)].compose(&f.parts[i]))
            .collect();
        Ok(DistortionMorphism {
            dom: f.dom.clone(),
            top: g.top.compose(&f.top),
            parts,
        })
    }

    fn inverse(&self, f: &DistortionMorphism) -> DistortionMorphism {
        let inv = f.top.inverse();
        let parts = (0..f.dom.len())
            .map(|j| f.parts[inv.apply(j)].inverse())
            .collect();
        DistortionMorphism {
            dom: f.codomain(),
            top: inv,
            parts,
        }
    }

    fn mor_eq(&self, f: &DistortionMorphism, g: &DistortionMorphism) -> bool {
        f == g
    }

    fn mor_sum(&self, f: &DistortionMorphism, g: &DistortionMorphism) -> DistortionMorphism {
        let mut parts = f.parts.clone();
        parts.extend(g.parts.iter().cloned());
        DistortionMorphism {
            dom: f.dom.sum(&g.dom),
            top: perm_block_sum(&f.top, &g.top),
            parts,
        }
    }

    fn mor_prod(&self, f: &DistortionMorphism, g: &DistortionMorphism) -> DistortionMorphism {
        let mut parts = Vec::with_capacity(f.parts.len() * g.parts.len());
        for q in &g.parts {
            for p in &f.parts {
                parts.push(perm_block_sum(p, q));
            }
        }
        DistortionMorphism {
            dom: f.dom.prod(&g.dom),
            top: kron_rows_outer(&f.top, &g.top),
            parts,
        }
    }

    fn structure(&self, kind: EdgeKind, o: &[DObject]) -> Result<DistortionMorphism, TargetError> {
        check_arity(kind, o.len())?;
        let dom = structure_source(self, kind, o);
        let ids = |d: &DObject| {
            d.0.iter()
                .map(|&r| Permutation::identity(r))
                .collect::<Vec<_>>()
        };
        Ok(match kind {
            EdgeKind::ZetaSum => DistortionMorphism {
                top: perm_tau(o[0].len(), o[1].len()),
                parts: ids(&dom),
                dom,
            },
            EdgeKind::ZetaTens => {
                let (r, s) = (&o[0], &o[1]);
                let mut parts = Vec::with_capacity(dom.len());
                for &sj in &s.0 {
                    for &ri in &r.0 {
                        parts.push(perm_tau(ri, sj));
                    }
                }
                DistortionMorphism {
                    dom,
                    top: zeta_tens_top(r.len(), s.len()),
                    parts,
                }
            }
            EdgeKind::DeltaR => DistortionMorphism {
                top: sigma_delta_r(o[0].len(), o[1].len(), o[2].len()),
                parts: ids(&dom),
                dom,
            },
            _ => self.identity(&dom),
        })
    }

    fn small_objects(&self, bound: usize) -> Vec<DObject> {
        DObject::all_up_to(bound, bound)
    }

    fn morphisms_from(&self, a: &DObject) -> Vec<DistortionMorphism> {
        let mut out = Vec::new();
        let part_choices: Vec<Vec<Permutation>> =
            a.0.iter().map(|&r| Permutation::all(r)).collect();
        for top in Permutation::all(a.len()) {
            for parts in cartesian(&part_choices) {
                out.push(DistortionMorphism {
                    dom: a.clone(),
                    top: top.clone(),
                    parts,
                });
            }
        }
        out
    }
}

fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for x in c {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// A morphism of the additive distortion category: a single permutation of entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AdditiveMorphism {
    pub dom: DObject,
    pub top: Permutation,
}

impl AdditiveMorphism {
    pub fn codomain(&self) -> DObject {
        self.dom.permuted(&self.top)
    }

    /// The faithful embedding into 𝔇.
    pub fn embed(&self) -> DistortionMorphism {
        DistortionMorphism {
            dom: self.dom.clone(),
            top: self.top.clone(),
            parts: self
                .dom
                .0
                .iter()
                .map(|&r| Permutation::identity(r))
                .collect(),
        }
    }
}

impl fmt::Display for AdditiveMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "top={}", self.top)
    }
}

/// The additive distortion category 𝔇^ad, a target for nonsymmetric paths.
#[derive(Clone, Copy, Debug, Default)]
pub struct AdditiveDistortion;

pub fn dad_target() -> AdditiveDistortion {
    AdditiveDistortion
}

impl Bimonoidal for AdditiveDistortion {
    type Obj = DObject;
    type Mor = AdditiveMorphism;

    fn name(&self) -> String {
        "D^ad".into()
    }

    fn flavor(&self) -> Flavor {
        Flavor::Nonsymmetric
    }

    fn zero(&self) -> DObject {
        DObject(vec![])
    }

    fn one(&self) -> DObject {
        DObject(vec![0])
    }

    fn obj_sum(&self, a: &DObject, b: &DObject) -> DObject {
        a.sum(b)
    }

    fn obj_prod(&self, a: &DObject, b: &DObject) -> DObject {
        a.prod(b)
    }

    fn domain(&self, f: &AdditiveMorphism) -> DObject {
        f.dom.clone()
    }

    fn codomain(&self, f: &AdditiveMorphism) -> DObject {
        f.codomain()
    }

    fn identity(&self, a: &DObject) -> AdditiveMorphism {
        AdditiveMorphism {
            dom: a.clone(),
            top: Permutation::identity(a.len()),
        }
    }

    fn compose(
        &self,
        g: &AdditiveMorphism,
        f: &AdditiveMorphism,
    ) -> Result<AdditiveMorphism, TargetError> {
        if g.dom != f.codomain() {
            return Err(TargetError::Compose {
                left: g.to_string(),
                right: f.to_string(),
            });
        }
        Ok(AdditiveMorphism {
            dom: f.dom.clone(),
            top: g.top.compose(&f.top),
        })
    }

    fn inverse(&self, f: &AdditiveMorphism) -> AdditiveMorphism {
        AdditiveMorphism {
            dom: f.codomain(),
            top: f.top.inverse(),
        }
    }

    fn mor_eq(&self, f: &AdditiveMorphism, g: &AdditiveMorphism) -> bool {
        f == g
    }

    fn mor_sum(&self, f: &AdditiveMorphism, g: &AdditiveMorphism) -> AdditiveMorphism {
        AdditiveMorphism {
            dom: f.dom.sum(&g.dom),
            top: perm_block_sum(&f.top, &g.top),
        }
    }

    fn mor_prod(&self, f: &AdditiveMorphism, g: &AdditiveMorphism) -> AdditiveMorphism {
        AdditiveMorphism {
            dom: f.dom.prod(&g.dom),
            top: kron_rows_outer(&f.top, &g.top),
        }
    }

    fn structure(&self, kind: EdgeKind, o: &[DObject]) -> Result<AdditiveMorphism, TargetError> {
        check_arity(kind, o.len())?;
        if kind == EdgeKind::ZetaTens {
            return Err(TargetError::Unsupported {
                kind,
                target: self.name(),
            });
        }
        let full = Distortion.structure(kind, o)?;
        Ok(AdditiveMorphism {
            dom: full.dom,
            top: full.top,
        })
    }

    fn small_objects(&self, bound: usize) -> Vec<DObject> {
        DObject::all_up_to(bound, bound)
    }

    fn morphisms_from(&self, a: &DObject) -> Vec<AdditiveMorphism> {
        Permutation::all(a.len())
            .into_iter()
            .map(|top| AdditiveMorphism {
                dom: a.clone(),
                top,
            })
            .collect()
    }
}

/// A morphism of the braided distortion category: braid words in place of entry permutations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidedMorphism {
    pub dom: DObject,
    pub top: Permutation,
    pub parts: Vec<BraidWord>,
}

impl BraidedMorphism {
    pub fn codomain(&self) -> DObject {
        self.dom.permuted(&self.top)
    }

    pub fn underlying(&self) -> DistortionMorphism {
        DistortionMorphism {
            dom: self.dom.clone(),
            top: self.top.clone(),
            parts: self
                .parts
                .iter()
                .map(crate::permbraid::braid_underlying)
                .collect(),
        }
    }
}

impl fmt::Display for BraidedMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "top={} parts=[", self.top)?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{}]", p.letters_text())?;
        }
        write!(f, "]")
    }
}

/// The braided distortion category 𝔇^br.
#[derive(Clone, Copy, Debug, Default)]
pub struct BraidedDistortion;

pub fn dbr_target() -> BraidedDistortion {
    BraidedDistortion
}

impl Bimonoidal for BraidedDistortion {
    type Obj = DObject;
    type Mor = BraidedMorphism;

    fn name(&self) -> String {
        "D^br".into()
    }

    fn flavor(&self) -> Flavor {
        Flavor::Braided
    }

    fn zero(&self) -> DObject {
        DObject(vec![])
    }

    fn one(&self) -> DObject {
        DObject(vec![0])
    }

    fn obj_sum(&self, a: &DObject, b: &DObject) -> DObject {
        a.sum(b)
    }

    fn obj_prod(&self, a: &DObject, b: &DObject) -> DObject {
        a.prod(b)
    }

    fn domain(&self, f: &BraidedMorphism) -> DObject {
        f.dom.clone()
    }

    fn codomain(&self, f: &BraidedMorphism) -> DObject {
        f.codomain()
    }

    fn identity(&self, a: &DObject) -> BraidedMorphism {
        BraidedMorphism {
            dom: a.clone(),
            top: Permutation::identity(a.len()),
            parts: a.0.iter().map(|&r| BraidWord::identity(r)).collect(),
        }
    }

    fn compose(
        &self,
        g: &BraidedMorphism,
        f: &BraidedMorphism,
    ) -> Result<BraidedMorphism, TargetError> {
        if g.dom != f.codomain() {
            return Err(TargetError::Compose {
                left: g.to_string(),
                right: f.to_string(),
            });
        }
        let parts = (0..f.dom.len())
            .map(|i| g.parts[f.top.apply(i)].compose(&f.parts[i]))
            .collect();
        Ok(BraidedMorphism {
            dom: f.dom.clone(),
            top: g.top.compose(&f.top),
            parts,
        })
    }

    fn inverse(&self, f: &BraidedMorphism) -> BraidedMorphism {
        let inv = f.top.inverse();
        let parts = (0..f.dom.len())
            .map(|j| f.parts[inv.apply(j)].inverse())
            .collect();
        BraidedMorphism {
            dom: f.codomain(),
            top: inv,
            parts,
        }
    }

    fn mor_eq(&self, f: &BraidedMorphism, g: &BraidedMorphism) -> bool {
        f.dom == g.dom
            && f.top == g.top
            && f.parts
                .iter()
                .zip(&g.parts)
                .all(|(a, b)| braid_equal(a, b).unwrap_or(false))
    }

    fn mor_sum(&self, f: &BraidedMorphism, g: &BraidedMorphism) -> BraidedMorphism {
        let mut parts = f.parts.clone();
        parts.extend(g.parts.iter().cloned());
        BraidedMorphism {
            dom: f.dom.sum(&g.dom),
            top: perm_block_sum(&f.top, &g.top),
            parts,
        }
    }

    fn mor_prod(&self, f: &BraidedMorphism, g: &BraidedMorphism) -> BraidedMorphism {
        let mut parts = Vec::with_capacity(f.parts.len() * g.parts.len());
        for q in &g.parts {
            for p in &f.parts {
                parts.push(braid_block_sum(p, q));
            }
        }
        BraidedMorphism {
            dom: f.dom.prod(&g.dom),
            top: kron_rows_outer(&f.top, &g.top),
            parts,
        }
    }

    fn structure(&self, kind: EdgeKind, o: &[DObject]) -> Result<BraidedMorphism, TargetError> {
        check_arity(kind, o.len())?;
        if kind == EdgeKind::ZetaTens {
            let dom = structure_source(self, kind, o);
            let (r, s) = (&o[0], &o[1]);
            let mut parts = Vec::with_capacity(dom.len());
            for &sj in &s.0 {
                for &ri in &r.0 {
                    parts.push(elementary_block_braid(ri, sj));
                }
            }
            return Ok(BraidedMorphism {
                dom,
                top: zeta_tens_top(r.len(), s.len()),
                parts,
            });
        }
        // Every other structure morphism has identity components.
        let full = Distortion.structure(kind, o)?;
        let parts = full.dom.0.iter().map(|&r| BraidWord::identity(r)).collect();
        Ok(BraidedMorphism {
            dom: full.dom,
            top: full.top,
            parts,
        })
    }

    fn small_objects(&self, bound: usize) -> Vec<DObject> {
        DObject::all_up_to(bound, bound)
    }

    /// Tops are exhaustive; each entry carries the identity or a single generator.
    fn morphisms_from(&self, a: &DObject) -> Vec<BraidedMorphism> {
        let choices: Vec<Vec<BraidWord>> =
            a.0.iter()
                .map(|&r| {
                    let mut c = vec![BraidWord::identity(r)];
                    for i in 1..r {
                        c.push(BraidWord::new(r, vec![Letter::pos(i)]).expect("index in range"));
                        c.push(BraidWord::new(r, vec![Letter::neg(i)]).expect("index in range"));
                    }
                    c
                })
                .collect();
        let mut out = Vec::new();
        for top in Permutation::all(a.len()) {
            for parts in cartesian(&choices) {
                out.push(BraidedMorphism {
                    dom: a.clone(),
                    top: top.clone(),
                    parts,
                });
            }
        }
        out
    }
}

/// A target with one family of structure morphisms replaced by identities.
#[derive(Clone, Debug)]
pub struct Corrupted<T> {
    pub inner: T,
    pub kind: EdgeKind,
}

impl<T: Bimonoidal> Bimonoidal for Corrupted<T> {
    type Obj = T::Obj;
    type Mor = T::Mor;

    fn name(&self) -> String {
        format!(
            "{} with {} replaced by identities",
            self.inner.name(),
            self.kind
        )
    }

    fn flavor(&self) -> Flavor {
        self.inner.flavor()
    }

    fn is_tight(&self) -> bool {
        self.inner.is_tight()
    }

    fn zero(&self) -> T::Obj {
        self.inner.zero()
    }

    fn one(&self) -> T::Obj {
        self.inner.one()
    }

    fn obj_sum(&self, a: &T::Obj, b: &T::Obj) -> T::Obj {
        self.inner.obj_sum(a, b)
    }

    fn obj_prod(&self, a: &T::Obj, b: &T::Obj) -> T::Obj {
        self.inner.obj_prod(a, b)
    }

    fn domain(&self, f: &T::Mor) -> T::Obj {
        self.inner.domain(f)
    }

    fn codomain(&self, f: &T::Mor) -> T::Obj {
        self.inner.codomain(f)
    }

    fn identity(&self, a: &T::Obj) -> T::Mor {
        self.inner.identity(a)
    }

    fn compose(&self, g: &T::Mor, f: &T::Mor) -> Result<T::Mor, TargetError> {
        self.inner.compose(g, f)
    }

    fn inverse(&self, f: &T::Mor) -> T::Mor {
        self.inner.inverse(f)
    }

    fn mor_eq(&self, f: &T::Mor, g: &T::Mor) -> bool {
        self.inner.mor_eq(f, g)
    }

    fn mor_sum(&self, f: &T::Mor, g: &T::Mor) -> T::Mor {
        self.inner.mor_sum(f, g)
    }

    fn mor_prod(&self, f: &T::Mor, g: &T::Mor) -> T::Mor {
        self.inner.mor_prod(f, g)
    }

    fn structure(&self, kind: EdgeKind, objs: &[T::Obj]) -> Result<T::Mor, TargetError> {
        let f = self.inner.structure(kind, objs)?;
        if kind == self.kind {
            Ok(self.inner.identity(&self.inner.domain(&f)))
        } else {
            Ok(f)
        }
    }

    fn small_objects(&self, bound: usize) -> Vec<T::Obj> {
        self.inner.small_objects(bound)
    }

    fn morphisms_from(&self, a: &T::Obj) -> Vec<T::Mor> {
        self.inner.morphisms_from(a)
    }
}

// ---------------------------------------------------------------------------
// Evaluation

/// Sends generators to objects; `None` means unassigned.
pub type Assignment<'a, O> = &'a dyn Fn(&Generator) -> Option<O>;

pub fn evaluate_term<T: Bimonoidal + ?Sized>(
    target: &T,
    t: &Term,
    assign: Assignment<'_, T::Obj>,
) -> Result<T::Obj, TargetError> {
    Ok(match t {
        Term::Gen(g) => assign(g).ok_or_else(|| TargetError::Unassigned(g.clone()))?,
        Term::Zero => target.zero(),
        Term::One => target.one(),
        Term::Sum(a, b) => target.obj_sum(
            &evaluate_term(target, a, assign)?,
            &evaluate_term(target, b, assign)?,
        ),
        Term::Prod(a, b) => target.obj_prod(
            &evaluate_term(target, a, assign)?,
            &evaluate_term(target, b, assign)?,
        ),
    })
}

/// Extends an assignment of morphisms to generators along ⊕ and ⊗.
pub fn evaluate_functor<T: Bimonoidal + ?Sized>(
    target: &T,
    t: &Term,
    assign: Assignment<'_, T::Mor>,
) -> Result<T::Mor, TargetError> {
    Ok(match t {
        Term::Gen(g) => assign(g).ok_or_else(|| TargetError::Unassigned(g.clone()))?,
        Term::Zero => target.identity(&target.zero()),
        Term::One => target.identity(&target.one()),
        Term::Sum(a, b) => target.mor_sum(
            &evaluate_functor(target, a, assign)?,
            &evaluate_functor(target, b, assign)?,
        ),
        Term::Prod(a, b) => target.mor_prod(
            &evaluate_functor(target, a, assign)?,
            &evaluate_functor(target, b, assign)?,
        ),
    })
}

pub fn evaluate_elementary<T: Bimonoidal + ?Sized>(
    target: &T,
    e: &ElementaryEdge,
    assign: Assignment<'_, T::Obj>,
) -> Result<T::Mor, TargetError> {
    let kind = e.kind();
    if kind == EdgeKind::ZetaTens && target.flavor() == Flavor::Nonsymmetric {
        return Err(TargetError::Unsupported {
            kind,
            target: target.name(),
        });
    }
    if e.is_formal_delta_inverse() && !target.is_tight() {
        return Err(TargetError::NotTight {
            kind,
            target: target.name(),
        });
    }
    let objs = e
        .params()
        .iter()
        .map(|p| evaluate_term(target, p, assign))
        .collect::<Result<Vec<_>, _>>()?;
    let f = target.structure(kind, &objs)?;
    Ok(match e.direction() {
        Direction::Forward => f,
        Direction::Inverse => target.inverse(&f),
    })
}

pub fn evaluate_prime<T: Bimonoidal + ?Sized>(
    target: &T,
    e: &PrimeEdge,
    assign: Assignment<'_, T::Obj>,
) -> Result<T::Mor, TargetError> {
    let mut f = evaluate_elementary(target, &e.edge, assign)?;
    for frame in e.context.frames.iter().rev() {
        let id = target.identity(&evaluate_term(target, &frame.sibling, assign)?);
        f = match (frame.op, frame.side) {
            (Op::Sum, Side::Left) => target.mor_sum(&id, &f),
            (Op::Sum, Side::Right) => target.mor_sum(&f, &id),
            (Op::Prod, Side::Left) => target.mor_prod(&id, &f),
            (Op::Prod, Side::Right) => target.mor_prod(&f, &id),
        };
    }
    Ok(f)
}

/// The value of a path: the composite of the values of its prime edges.
pub fn evaluate_path<T: Bimonoidal + ?Sized>(
    target: &T,
    p: &Path,
    assign: Assignment<'_, T::Obj>,
) -> Result<T::Mor, TargetError> {
    let mut acc = target.identity(&evaluate_term(target, p.domain(), assign)?);
    for e in p.edges() {
        let f = evaluate_prime(target, e, assign)?;
        acc = target.compose(&f, &acc)?;
    }
    Ok(acc)
}

/// Generator ↦ (1), so entries record monomial lengths.
pub fn canonical_assignment(_: &Generator) -> Option<DObject> {
    Some(DObject(vec![1]))
}

pub fn canonical_object(t: &Term) -> DObject {
    evaluate_term(&Distortion, t, &canonical_assignment).expect("canonical assignment is total")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum DistortionMode {
    Symmetric,
    Additive,
    Braided,
}

impl DistortionMode {
    pub fn for_flavor(f: Flavor) -> Self {
        match f {
            Flavor::Symmetric => DistortionMode::Symmetric,
            Flavor::Nonsymmetric => DistortionMode::Additive,
            Flavor::Braided => DistortionMode::Braided,
        }
    }
}

/// The value of a path in 𝔇, 𝔇^ad or 𝔇^br under the canonical assignment.
#[derive(Clone, Debug)]
pub enum DistortionValue {
    Symmetric(DistortionMorphism),
    Additive(AdditiveMorphism),
    Braided(BraidedMorphism),
}

impl DistortionValue {
    /// Equality in the relevant category (braid parts compared as group elements).
    pub fn same_as(&self, other: &DistortionValue) -> bool {
        match (self, other) {
            (DistortionValue::Symmetric(a), DistortionValue::Symmetric(b)) => a == b,
            (DistortionValue::Additive(a), DistortionValue::Additive(b)) => a == b,
            (DistortionValue::Braided(a), DistortionValue::Braided(b)) => {
                BraidedDistortion.mor_eq(a, b)
            }
            _ => false,
        }
    }
}

impl fmt::Display for DistortionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistortionValue::Symmetric(m) => m.fmt(f),
            DistortionValue::Additive(m) => m.fmt(f),
            DistortionValue::Braided(m) => m.fmt(f),
        }
    }
}

pub fn distortion(p: &Path, mode: DistortionMode) -> Result<DistortionValue, TargetError> {
    let obj = &canonical_assignment;
    Ok(match mode {
        DistortionMode::Symmetric => {
            DistortionValue::Symmetric(evaluate_path(&Distortion, p, obj)?)
        }
        DistortionMode::Additive => {
            DistortionValue::Additive(evaluate_path(&AdditiveDistortion, p, obj)?)
        }
        DistortionMode::Braided => {
            DistortionValue::Braided(evaluate_path(&BraidedDistortion, p, obj)?)
        }
    })
}

// ---------------------------------------------------------------------------
// Axioms

/// Two formal composites that every bimonoidal category of the right flavor identifies.
#[derive(Clone, Debug)]
pub struct Axiom {
    pub name: String,
    pub lhs: Path,
    pub rhs: Path,
}

type Step = (&'static str, EdgeKind, Direction);

fn build(dom: &Term, steps: &[Step]) -> Path {
    let mut b = PathBuilder::new(dom.clone());
    for (r, kind, dir) in steps {
        b.apply(&route(r), *kind, *dir)
            .unwrap_or_else(|e| panic!("axiom step {kind} at {r:?}: {e}"));
    }
    b.into_path()
}

fn axiom(name: &str, dom: &str, lhs: &[Step], rhs: &[Step]) -> Axiom {
    let dom: Term = dom.parse().expect("axiom domain parses");
    let (lhs, rhs) = (build(&dom, lhs), build(&dom, rhs));
    assert_eq!(
        lhs.codomain(),
        rhs.codomain(),
        "axiom {name} is not parallel"
    );
    Axiom {
        name: name.to_string(),
        lhs,
        rhs,
    }
}

/// Laplaza's distributivity axioms. Symmetric: 24; nonsymmetric: the 22 without ζ^⊗;
/// braided: the 24 together with the two variants using the inverse braiding.
pub fn laplaza_axioms(flavor: Flavor) -> Vec<Axiom> {
    use Direction::{Forward as F, Inverse as I};
    use EdgeKind::*;
    let mut v = vec![
        axiom(
            "laplaza-I",
            "((A+B)*C)",
            &[("", ZetaTens, F), ("", DeltaL, F)],
            &[("", DeltaR, F), ("L", ZetaTens, F), ("R", ZetaTens, F)],
        ),
        axiom(
            "laplaza-II",
            "((A+B)*C)",
            &[("", DeltaR, F), ("", ZetaSum, F)],
            &[("L", ZetaSum, F), ("", DeltaR, F)],
        ),
        axiom(
            "laplaza-III",
            "(A*(B+C))",
            &[("", DeltaL, F), ("", ZetaSum, F)],
            &[("R", ZetaSum, F), ("", DeltaL, F)],
        ),
        axiom(
            "laplaza-IV",
            "(((A+B)+C)*D)",
            &[("", DeltaR, F), ("L", DeltaR, F), ("", AlphaSum, F)],
            &[("L", AlphaSum, F), ("", DeltaR, F), ("R", DeltaR, F)],
        ),
        axiom(
            "laplaza-V",
            "(A*((B+C)+D))",
            &[("", DeltaL, F), ("L", DeltaL, F), ("", AlphaSum, F)],
            &[("R", AlphaSum, F), ("", DeltaL, F), ("R", DeltaL, F)],
        ),
        axiom(
            "laplaza-VI",
            "((A*B)*(C+D))",
            &[("", DeltaL, F), ("L", AlphaTens, F), ("R", AlphaTens, F)],
            &[("", AlphaTens, F), ("R", DeltaL, F), ("", DeltaL, F)],
        ),
        axiom(
            "laplaza-VII",
            "((A*(B+C))*D)",
            &[
                ("L", DeltaL, F),
                ("", DeltaR, F),
                ("L", AlphaTens, F),
                ("R", AlphaTens, F),
            ],
            &[("", AlphaTens, F), ("R", DeltaR, F), ("", DeltaL, F)],
        ),
        axiom(
            "laplaza-VIII",
            "(((A+B)*C)*D)",
            &[
                ("L", DeltaR, F),
                ("", DeltaR, F),
                ("L", AlphaTens, F),
                ("R", AlphaTens, F),
            ],
            &[("", AlphaTens, F), ("", DeltaR, F)],
        ),
        axiom(
            "laplaza-IX",
            "((A+B)*(C+D))",
            &[
                ("", DeltaL, F),
                ("L", DeltaR, F),
                ("R", DeltaR, F),
                ("", AlphaSum, F),
                ("R", AlphaSum, I),
                ("RL", ZetaSum, F),
                ("R", AlphaSum, F),
                ("", AlphaSum, I),
            ],
            &[("", DeltaR, F), ("L", DeltaL, F), ("R", DeltaL, F)],
        ),
        axiom(
            "laplaza-X",
            "(0*0)",
            &[("", LambdaDot, F)],
            &[("", RhoDot, F)],
        ),
        axiom(
            "laplaza-XI",
            "(0*(A+B))",
            &[
                ("", DeltaL, F),
                ("L", LambdaDot, F),
                ("R", LambdaDot, F),
                ("", LambdaSum, F),
            ],
            &[("", LambdaDot, F)],
        ),
        axiom(
            "laplaza-XII",
            "((A+B)*0)",
            &[
                ("", DeltaR, F),
                ("L", RhoDot, F),
                ("R", RhoDot, F),
                ("", RhoSum, F),
            ],
            &[("", RhoDot, F)],
        ),
        axiom(
            "laplaza-XIII",
            "(0*1)",
            &[("", LambdaDot, F)],
            &[("", RhoTens, F)],
        ),
        axiom(
            "laplaza-XIV",
            "(1*0)",
            &[("", LambdaTens, F)],
            &[("", RhoDot, F)],
        ),
        axiom(
            "laplaza-XV",
            "(0*A)",
            &[("", LambdaDot, F)],
            &[("", ZetaTens, F), ("", RhoDot, F)],
        ),
        axiom(
            "laplaza-XVI",
            "((0*A)*B)",
            &[("", AlphaTens, F), ("", LambdaDot, F)],
            &[("L", LambdaDot, F), ("", LambdaDot, F)],
        ),
        axiom(
            "laplaza-XVII",
            "((A*0)*B)",
            &[("", AlphaTens, F), ("R", LambdaDot, F), ("", RhoDot, F)],
            &[("L", RhoDot, F), ("", LambdaDot, F)],
        ),
        axiom(
            "laplaza-XVIII",
            "((A*B)*0)",
            &[("", AlphaTens, F), ("R", RhoDot, F), ("", RhoDot, F)],
            &[("", RhoDot, F)],
        ),
        axiom(
            "laplaza-XIX",
            "(A*(0+B))",
            &[("", DeltaL, F), ("L", RhoDot, F), ("", LambdaSum, F)],
            &[("R", LambdaSum, F)],
        ),
        axiom(
            "laplaza-XX",
            "((0+A)*B)",
            &[("", DeltaR, F), ("L", LambdaDot, F), ("", LambdaSum, F)],
            &[("L", LambdaSum, F)],
        ),
        axiom(
            "laplaza-XXI",
            "(A*(B+0))",
            &[("", DeltaL, F), ("R", RhoDot, F), ("", RhoSum, F)],
            &[("R", RhoSum, F)],
        ),
        axiom(
            "laplaza-XXII",
            "((A+0)*B)",
            &[("", DeltaR, F), ("R", LambdaDot, F), ("", RhoSum, F)],
            &[("L", RhoSum, F)],
        ),
        axiom(
            "laplaza-XXIII",
            "(1*(A+B))",
            &[("", DeltaL, F), ("L", LambdaTens, F), ("R", LambdaTens, F)],
            &[("", LambdaTens, F)],
        ),
        axiom(
            "laplaza-XXIV",
            "((A+B)*1)",
            &[("", DeltaR, F), ("L", RhoTens, F), ("R", RhoTens, F)],
            &[("", RhoTens, F)],
        ),
    ];
    match flavor {
        Flavor::Symmetric => {}
        Flavor::Nonsymmetric => {
            v.retain(|a| !a.lhs.uses_kind(ZetaTens) && !a.rhs.uses_kind(ZetaTens))
        }
        Flavor::Braided => {
            v.push(axiom(
                "laplaza-I'",
                "((A+B)*C)",
                &[("", ZetaTens, I), ("", DeltaL, F)],
                &[("", DeltaR, F), ("L", ZetaTens, I), ("R", ZetaTens, I)],
            ));
            v.push(axiom(
                "laplaza-XV'",
                "(0*A)",
                &[("", LambdaDot, F)],
                &[("", ZetaTens, I), ("", RhoDot, F)],
            ));
        }
    }
    v
}

/// Pentagon, triangle, hexagons, symmetry and unit axioms of both monoidal structures.
pub fn monoidal_axioms(flavor: Flavor) -> Vec<Axiom> {
    use Direction::{Forward as F, Inverse as I};
    use EdgeKind::*;
    let mut v = Vec::new();
    let families = [
        ("sum", '+', '0', AlphaSum, LambdaSum, RhoSum, ZetaSum),
        ("tens", '*', '1', AlphaTens, LambdaTens, RhoTens, ZetaTens),
    ];
    for (label, op, unit, alpha, lambda, rho, zeta) in families {
        let t = |s: &str| {
            s.replace('+', &op.to_string())
                .replace('0', &unit.to_string())
        };
        v.push(axiom(
            &format!("{label}-pentagon"),
            &t("(((A+B)+C)+D)"),
            &[("", alpha, F), ("", alpha, F)],
            &[("L", alpha, F), ("", alpha, F), ("R", alpha, F)],
        ));
        v.push(axiom(
            &format!("{label}-triangle"),
            &t("((A+0)+B)"),
            &[("", alpha, F), ("R", lambda, F)],
            &[("L", rho, F)],
        ));
        v.push(axiom(
            &format!("{label}-unit"),
            &t("(0+0)"),
            &[("", lambda, F)],
            &[("", rho, F)],
        ));
        let has_zeta = zeta == ZetaSum || flavor != Flavor::Nonsymmetric;
        if !has_zeta {
            continue;
        }
        v.push(axiom(
            &format!("{label}-hexagon-1"),
            &t("((A+B)+C)"),
            &[("", alpha, F), ("", zeta, F), ("", alpha, F)],
            &[("L", zeta, F), ("", alpha, F), ("R", zeta, F)],
        ));
        v.push(axiom(
            &format!("{label}-hexagon-2"),
            &t("(A+(B+C))"),
            &[("", alpha, I), ("", zeta, F), ("", alpha, I)],
            &[("R", zeta, F), ("", alpha, I), ("L", zeta, F)],
        ));
        if zeta == ZetaSum || flavor == Flavor::Symmetric {
            v.push(axiom(
                &format!("{label}-symmetry"),
                &t("(A+B)"),
                &[("", zeta, F), ("", zeta, F)],
                &[],
            ));
            v.push(axiom(
                &format!("{label}-unit-symmetry"),
                &t("(A+0)"),
                &[("", zeta, F), ("", lambda, F)],
                &[("", rho, F)],
            ));
        }
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: String,
    pub instance: String,
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub target: String,
    /// Instances checked per axiom name.
    pub instances: BTreeMap<String, usize>,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_instances(&self) -> usize {
        self.instances.values().sum()
    }

    pub fn failed_axioms(&self) -> std::collections::BTreeSet<String> {
        self.failures.iter().map(|f| f.axiom.clone()).collect()
    }

    fn record(&mut self, axiom: &str, ok: bool, instance: impl FnOnce() -> String) {
        *self.instances.entry(axiom.to_string()).or_insert(0) += 1;
        if !ok {
            self.failures.push(AxiomFailure {
                axiom: axiom.to_string(),
                instance: instance(),
            });
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for (k, n) in other.instances {
            *self.instances.entry(k).or_insert(0) += n;
        }
        self.failures.extend(other.failures);
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AxiomConfig {
    /// Size bound handed to [`Bimonoidal::small_objects`].
    pub bound: usize,
    /// Random naturality squares per structure family.
    pub naturality_samples: usize,
    pub seed: u64,
}

impl AxiomConfig {
    pub fn new(bound: usize) -> Self {
        AxiomConfig {
            bound,
            naturality_samples: 200,
            seed: 0,
        }
    }
}

fn tuples<O: Clone>(pool: &[O], k: usize) -> Vec<Vec<O>> {
    cartesian(&vec![pool.to_vec(); k])
}

/// Checks one pair of parallel formal composites under every assignment from `pool`.
pub fn check_parallel<T: Bimonoidal + ?Sized>(
    target: &T,
    name: &str,
    lhs: &Path,
    rhs: &Path,
    pool: &[T::Obj],
    report: &mut AxiomReport,
) {
    let gens: Vec<Generator> = lhs.domain().generators().into_iter().collect();
    for objs in tuples(pool, gens.len()) {
        let map: HashMap<&Generator, &T::Obj> = gens.iter().zip(&objs).collect();
        let assign = |g: &Generator| map.get(g).map(|o| (*o).clone());
        let l = evaluate_path(target, lhs, &assign);
        let r = evaluate_path(target, rhs, &assign);
        let ok = matches!((&l, &r), (Ok(a), Ok(b)) if target.mor_eq(a, b));
        report.record(name, ok, || {
            let parts: Vec<String> = gens
                .iter()
                .zip(&objs)
                .map(|(g, o)| format!("{g}={o}"))
                .collect();
            match (&l, &r) {
                (Ok(a), Ok(b)) => format!("{} lhs={a} rhs={b}", parts.join(",")),
                (Err(e), _) | (_, Err(e)) => format!("{} error: {e}", parts.join(",")),
            }
        });
    }
}

/// Instantiates every axiom of the target's flavor at all object tuples within the bound,
/// and checks naturality of each structure family on random morphism samples.
pub fn check_axioms<T: Bimonoidal + ?Sized>(target: &T, bound: usize) -> AxiomReport {
    check_axioms_with(target, &AxiomConfig::new(bound))
}

pub fn check_axioms_with<T: Bimonoidal + ?Sized>(target: &T, cfg: &AxiomConfig) -> AxiomReport {
    let mut report = AxiomReport {
        target: target.name(),
        ..Default::default()
    };
    let pool = target.small_objects(cfg.bound);
    let flavor = target.flavor();
    for ax in laplaza_axioms(flavor)
        .iter()
        .chain(monoidal_axioms(flavor).iter())
    {
        check_parallel(target, &ax.name, &ax.lhs, &ax.rhs, &pool, &mut report);
    }
    check_naturality(target, &pool, cfg, &mut report);
    report
}

fn check_naturality<T: Bimonoidal + ?Sized>(
    target: &T,
    pool: &[T::Obj],
    cfg: &AxiomConfig,
    report: &mut AxiomReport,
) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let names = ["A", "B", "C"];
    let gens: Vec<Generator> = names
        .iter()
        .map(|n| Generator::new(n).expect("valid name"))
        .collect();
    for kind in EdgeKind::ALL {
        if kind == EdgeKind::ZetaTens && target.flavor() == Flavor::Nonsymmetric {
            continue;
        }
        let params: Vec<Term> = gens[..kind.arity()]
            .iter()
            .map(|g| Term::Gen(g.clone()))
            .collect();
        let edge = ElementaryEdge::forward(kind, params).expect("arity matches");
        let (src, dst) = edge.boundaries();
        let name = format!("naturality-{kind}");
        for _ in 0..cfg.naturality_samples {
            let mut mors = Vec::with_capacity(kind.arity());
            for _ in 0..kind.arity() {
                let a = pool.choose(&mut rng).expect("nonempty pool");
                let ms = target.morphisms_from(a);
                mors.push(ms.choose(&mut rng).expect("identity at least").clone());
            }
            let dom_objs: Vec<T::Obj> = mors.iter().map(|f| target.domain(f)).collect();
            let cod_objs: Vec<T::Obj> = mors.iter().map(|f| target.codomain(f)).collect();
            let by_gen = |g: &Generator| {
                gens.iter()
                    .position(|h| h == g)
                    .and_then(|i| mors.get(i).cloned())
            };
            let result = (|| -> Result<bool, TargetError> {
                let f_src = evaluate_functor(target, &src, &by_gen)?;
                let f_dst = evaluate_functor(target, &dst, &by_gen)?;
                let s_dom = target.structure(kind, &dom_objs)?;
                let s_cod = target.structure(kind, &cod_objs)?;
                let l = target.compose(&s_cod, &f_src)?;
                let r = target.compose(&f_dst, &s_dom)?;
                Ok(target.mor_eq(&l, &r))
            })();
            report.record(&name, result == Ok(true), || {
                let ms: Vec<String> = mors.iter().map(|m| m.to_string()).collect();
                format!("morphisms {} ({result:?})", ms.join(" | "))
            });
        }
    }
}

/// Checks that the identity-on-morphisms functor Σ → Σ′, with comparison maps
/// taking the right-major product ordering to the lexicographic one, is a
/// symmetric bimonoidal isomorphism at all objects ≤ `bound`.
pub fn sigma_iso_check(bound: usize) -> AxiomReport {
    let (s, sp) = (sigma_target(), sigma_prime_target());
    let mut report = AxiomReport {
        target: "Sigma -> Sigma'".into(),
        ..Default::default()
    };
    // F2: m ⊗′ n → m ⊗ n, the lexicographic pairing read right-major.
    let f2 = |m: usize, n: usize| perm_transpose(m, n);
    let perms: Vec<Vec<Permutation>> = (0..=bound).map(Permutation::all).collect();
    for m in 0..=bound {
        for n in 0..=bound {
            for a in &perms[m] {
                for b in &perms[n] {
                    let l = f2(m, n).compose(&sp.mor_prod(a, b));
                    let r = s.mor_prod(a, b).compose(&f2(m, n));
                    report.record("comparison-naturality", l == r, || format!("{a} {b}"));
                }
            }
            let l = f2(n, m).compose(&sp.structure(EdgeKind::ZetaTens, &[m, n]).expect("arity"));
            let r = s
                .structure(EdgeKind::ZetaTens, &[m, n])
                .expect("arity")
                .compose(&f2(m, n));
            report.record("comparison-symmetry", l == r, || format!("m={m} n={n}"));
            for p in 0..=bound {
                let l = f2(m * n, p).compose(&sp.mor_prod(&f2(m, n), &Permutation::identity(p)));
                let r = f2(m, n * p).compose(&sp.mor_prod(&Permutation::identity(m), &f2(n, p)));
                report.record("comparison-associativity", l == r, || {
                    format!("m={m} n={n} p={p}")
                });
                let l = perm_block_sum(&f2(m, n), &f2(m, p))
                    .compose(&sp.structure(EdgeKind::DeltaL, &[m, n, p]).expect("arity"));
                let r = s
                    .structure(EdgeKind::DeltaL, &[m, n, p])
                    .expect("arity")
                    .compose(&f2(m, n + p));
                report.record("comparison-left-distributivity", l == r, || {
                    format!("m={m} n={n} p={p}")
                });
                let l = perm_block_sum(&f2(m, p), &f2(n, p))
                    .compose(&sp.structure(EdgeKind::DeltaR, &[m, n, p]).expect("arity"));
                let r = s
                    .structure(EdgeKind::DeltaR, &[m, n, p])
                    .expect("arity")
                    .compose(&f2(m + n, p));
                report.record("comparison-right-distributivity", l == r, || {
                    format!("m={m} n={n} p={p}")
                });
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Groupoid laws and the Grothendieck model

/// Identity, inverse and associativity laws of 𝔇 over all morphisms between objects within the bound.
pub fn d_groupoid_check(max_len: usize, max_entry: usize) -> AxiomReport {
    let d = Distortion;
    let mut report = AxiomReport {
        target: d.name(),
        ..Default::default()
    };
    let objects = DObject::all_up_to(max_len, max_entry);
    let mut from: HashMap<DObject, Vec<DistortionMorphism>> = HashMap::new();
    for o in &objects {
        from.insert(o.clone(), d.morphisms_from(o));
    }
    for o in &objects {
        for f in &from[o] {
            let cod = f.codomain();
            let inv = d.inverse(f);
            let ok = d.compose(&inv, f).ok() == Some(d.identity(o))
                && d.compose(f, &inv).ok() == Some(d.identity(&cod));
            report.record("groupoid-inverse", ok, || f.to_string());
            let ok = d.compose(f, &d.identity(o)).ok().as_ref() == Some(f)
                && d.compose(&d.identity(&cod), f).ok().as_ref() == Some(f);
            report.record("groupoid-identity", ok, || f.to_string());
            for g in &from[&cod] {
                for h in &from[&g.codomain()] {
                    let l = d.compose(h, g).and_then(|hg| d.compose(&hg, f));
                    let r = d.compose(g, f).and_then(|gf| d.compose(h, &gf));
                    report.record("groupoid-associativity", l.is_ok() && l == r, || {
                        format!("{f} ; {g} ; {h}")
                    });
                }
            }
        }
    }
    report
}

/// A morphism of the Grothendieck construction over Σ: a permutation of
/// positions and, at each codomain position, a permutation of that entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GrothendieckMorphism {
    pub dom: DObject,
    pub sigma: Permutation,
    pub fibre: Vec<Permutation>,
}

impl GrothendieckMorphism {
    pub fn from_d(f: &DistortionMorphism) -> Self {
        let mut fibre = vec![Permutation::identity(0); f.dom.len()];
        for (i, p) in f.parts.iter().enumerate() {
            fibre[f.top.apply(i)] = p.clone();
        }
        GrothendieckMorphism {
            dom: f.dom.clone(),
            sigma: f.top.clone(),
            fibre,
        }
    }

    /// `(τ, g) ∘ (σ, f) = (τσ, g ∘ τ_*(f))`.
    pub fn compose(g: &Self, f: &Self) -> Self {
        let moved: Vec<Permutation> = {
            let mut v = vec![Permutation::identity(0); f.fibre.len()];
            for (k, p) in f.fibre.iter().enumerate() {
                v[g.sigma.apply(k)] = p.clone();
            }
            v
        };
        let fibre = g
            .fibre
            .iter()
            .zip(&moved)
            .map(|(a, b)| a.compose(b))
            .collect();
        GrothendieckMorphism {
            dom: f.dom.clone(),
            sigma: g.sigma.compose(&f.sigma),
            fibre,
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[derive(Clone, Debug, Default)]
pub struct GrothendieckReport {
    /// (domain, codomain, count generated in 𝔇, count in the Grothendieck model).
    pub hom_counts: Vec<(DObject, DObject, usize, usize)>,
    /// (domain, morphisms out of it in 𝔇, m!·∏ r_i!).
    pub totals: Vec<(DObject, usize, usize)>,
    /// (domain, morphisms out of it in 𝔇^ad, m!).
    pub additive_totals: Vec<(DObject, usize, usize)>,
    pub composition_checks: usize,
    pub mismatches: Vec<String>,
}

impl GrothendieckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Generates every morphism out of `r` by closing the elementary swaps under composition.
pub fn d_hom_closure(r: &DObject, with_parts: bool) -> Vec<DistortionMorphism> {
    let d = Distortion;
    let gens_at = |s: &DObject| -> Vec<DistortionMorphism> {
        let mut out = Vec::new();
        let one = |x: usize| DObject(vec![x]);
        for p in 0..s.len().saturating_sub(1) {
            let left = DObject(s.0[..p].to_vec());
            let right = DObject(s.0[p + 2..].to_vec());
            let z = d
                .structure(EdgeKind::ZetaSum, &[one(s.0[p]), one(s.0[p + 1])])
                .expect("arity");
            out.push(d.mor_sum(&d.mor_sum(&d.identity(&left), &z), &d.identity(&right)));
        }
        if with_parts {
            for (p, &e) in s.0.iter().enumerate() {
                for q in 0..e.saturating_sub(1) {
                    let swap = d
                        .structure(EdgeKind::ZetaTens, &[one(1), one(1)])
                        .expect("arity");
                    let inner = d.mor_prod(
                        &d.mor_prod(&d.identity(&one(q)), &swap),
                        &d.identity(&one(e - q - 2)),
                    );
                    let left = DObject(s.0[..p].to_vec());
                    let right = DObject(s.0[p + 1..].to_vec());
                    out.push(
                        d.mor_sum(&d.mor_sum(&d.identity(&left), &inner), &d.identity(&right)),
                    );
                }
            }
        }
        out
    };
    let mut seen: HashSet<DistortionMorphism> = HashSet::new();
    let start = d.identity(r);
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for g in gens_at(&f.codomain()) {
            let h = d.compose(&g, &f).expect("generator composes");
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.into_iter().collect()
}

/// Compares hom-set sizes of 𝔇 and 𝔇^ad with the Grothendieck model over Σ,
/// and checks that composition agrees with the Grothendieck composition.
pub fn grothendieck_compare(max_len: usize, max_entry: usize) -> GrothendieckReport {
    let mut rep = GrothendieckReport::default();
    for r in DObject::all_up_to(max_len, max_entry) {
        let homs = d_hom_closure(&r, true);
        let expected_total =
            factorial(r.len()) * r.0.iter().map(|&x| factorial(x)).product::<usize>();
        rep.totals.push((r.clone(), homs.len(), expected_total));
        if homs.len() != expected_total {
            rep.mismatches.push(format!(
                "|hom({r}, -)| = {} but m!·∏r_i! = {expected_total}",
                homs.len()
            ));
        }
        let mut per_cod: BTreeMap<DObject, usize> = BTreeMap::new();
        for f in &homs {
            *per_cod.entry(f.codomain()).or_insert(0) += 1;
        }
        for (s, count) in per_cod {
            let tops = Permutation::all(r.len())
                .into_iter()
                .filter(|t| r.permuted(t) == s)
                .count();
            let model = tops * s.0.iter().map(|&x| factorial(x)).product::<usize>();
            if count != model {
                rep.mismatches.push(format!(
                    "|hom({r}, {s})| = {count} but the model has {model}"
                ));
            }
            rep.hom_counts.push((r.clone(), s, count, model));
        }
        let additive = d_hom_closure(&r, false);
        rep.additive_totals
            .push((r.clone(), additive.len(), factorial(r.len())));
        if additive.len() != factorial(r.len())
            || additive
                .iter()
                .any(|f| f.parts.iter().any(|p| !p.is_identity()))
        {
            rep.mismatches
                .push(format!("additive homs out of {r}: {}", additive.len()));
        }
        let d = Distortion;
        for f in homs.iter().take(12) {
            for g in d_hom_closure(&f.codomain(), true).iter().take(12) {
                let gf = d.compose(g, f).expect("composable");
                let lhs = GrothendieckMorphism::from_d(&gf);
                let rhs = GrothendieckMorphism::compose(
                    &GrothendieckMorphism::from_d(g),
                    &GrothendieckMorphism::from_d(f),
                );
                rep.composition_checks += 1;
                if lhs != rhs {
                    rep.mismatches
                        .push(format!("composition disagrees for {f} then {g}"));
                }
            }
        }
    }
    rep
}

/// Right distributivity components of 𝔇^br for all object triples within the bound;
/// returns the instances whose parts are not all identity braids.
pub fn dbr_delta_r_violations(bound: usize) -> Vec<String> {
    let br = BraidedDistortion;
    let pool = br.small_objects(bound);
    let mut bad = Vec::new();
    for t in tuples(&pool, 3) {
        let f = br.structure(EdgeKind::DeltaR, &t).expect("arity");
        if f.parts.iter().any(|p| !p.is_empty_word()) {
            bad.push(format!("{} {} {}", t[0], t[1], t[2]));
        }
    }
    bad
}
