//! Matrices over a tight bimonoidal target.
//!
//! A 1-cell `m → n` is an `n × m` matrix of objects; 2-cells are entrywise
//! morphisms. Structural 2-cells are synthesized per entry by
//! [`canonical_iso`] between placeholder terms and then evaluated.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::paths::{EdgeKind, Flavor, Path};
use crate::permbraid::{perm_transpose, Permutation};
use crate::reductions::{canonical_iso, IsoMode};
use crate::targets::{evaluate_path, evaluate_prime, Bimonoidal, TargetError};
use crate::terms::{Generator, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("no canonical isomorphism for {kind} at entry ({row},{col}): {from} to {to}")]
    Synthesis {
        kind: StructuralKind,
        row: usize,
        col: usize,
        from: Term,
        to: Term,
    },
    #[error("target {0} is not tight")]
    NotTight(String),
    #[error(transparent)]
    Target(#[from] TargetError),
}

/// A row-major `rows × cols` array.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<O> {
    rows: usize,
    cols: usize,
    entries: Vec<O>,
}

/// Entrywise morphisms between two matrices of the same shape.
pub type Matrix2Cell<M> = Matrix<M>;

impl<O> Matrix<O> {
    pub fn new(rows: usize, cols: usize, entries: Vec<O>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::Dimension(format!(
                "{rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> O) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for j in 0..rows {
            for i in 0..cols {
                entries.push(f(j, i));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, j: usize, i: usize) -> &O {
        &self.entries[j * self.cols + i]
    }

    pub fn entries(&self) -> &[O] {
        &self.entries
    }

    pub fn map<P>(&self, f: impl FnMut(&O) -> P) -> Matrix<P> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<P, E>(&self, f: impl FnMut(&O) -> Result<P, E>) -> Result<Matrix<P>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    fn zip<P, Q>(
        &self,
        other: &Matrix<P>,
        mut f: impl FnMut(&O, &P) -> Q,
    ) -> Result<Matrix<Q>, MatrixError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}

impl<O: fmt::Display> fmt::Display for Matrix<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for j in 0..self.rows {
            if j > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for i in 0..self.cols {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(j, i))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Entry `(j,i)` is `B_{j0} ⊗ A_{0i} ⊕ B_{j1} ⊗ A_{1i} ⊕ …`, left-normalized; empty sums are `zero()`.
fn product_by<O: Clone>(
    b: &Matrix<O>,
    a: &Matrix<O>,
    zero: impl Fn() -> O,
    sum: impl Fn(&O, &O) -> O,
    prod: impl Fn(&O, &O) -> O,
) -> Result<Matrix<O>, MatrixError> {
    if b.cols != a.rows {
        return Err(MatrixError::Dimension(format!(
            "cannot multiply {}x{} by {}x{}",
            b.rows, b.cols, a.rows, a.cols
        )));
    }
    Ok(Matrix::from_fn(b.rows, a.cols, |j, i| {
        (0..b.cols)
            .map(|k| prod(b.get(j, k), a.get(k, i)))
            .reduce(|acc, x| sum(&acc, &x))
            .unwrap_or_else(&zero)
    }))
}

/// Kronecker product with lexicographic index pairing.
fn tensor_by<O>(a: &Matrix<O>, b: &Matrix<O>, prod: impl Fn(&O, &O) -> O) -> Matrix<O> {
    Matrix::from_fn(a.rows * b.rows, a.cols * b.cols, |r, c| {
        prod(a.get(r / b.rows, c / b.cols), b.get(r % b.rows, c % b.cols))
    })
}

pub fn mat_product<T: Bimonoidal + ?Sized>(
    target: &T,
    b: &Matrix<T::Obj>,
    a: &Matrix<T::Obj>,
) -> Result<Matrix<T::Obj>, MatrixError> {
    product_by(
        b,
        a,
        || target.zero(),
        |x, y| target.obj_sum(x, y),
        |x, y| target.obj_prod(x, y),
    )
}

pub fn mat_tensor<T: Bimonoidal + ?Sized>(
    target: &T,
    a: &Matrix<T::Obj>,
    b: &Matrix<T::Obj>,
) -> Matrix<T::Obj> {
    tensor_by(a, b, |x, y| target.obj_prod(x, y))
}

pub fn mat_identity<T: Bimonoidal + ?Sized>(target: &T, n: usize) -> Matrix<T::Obj> {
    Matrix::from_fn(
        n,
        n,
        |j, i| if i == j { target.one() } else { target.zero() },
    )
}

/// Column `i` has its `1` in row `σ(i)`.
pub fn perm_matrix<T: Bimonoidal + ?Sized>(target: &T, sigma: &Permutation) -> Matrix<T::Obj> {
    let n = sigma.len();
    Matrix::from_fn(n, n, |j, i| {
        if sigma.apply(i) == j {
            target.one()
        } else {
            target.zero()
        }
    })
}

/// The zero 1-cell `m → n`.
pub fn zero_matrix<T: Bimonoidal + ?Sized>(target: &T, m: usize, n: usize) -> Matrix<T::Obj> {
    Matrix::from_fn(n, m, |_, _| target.zero())
}

pub fn cell_identity<T: Bimonoidal + ?Sized>(
    target: &T,
    a: &Matrix<T::Obj>,
) -> Matrix2Cell<T::Mor> {
    a.map(|o| target.identity(o))
}

pub fn cell_domain<T: Bimonoidal + ?Sized>(target: &T, f: &Matrix2Cell<T::Mor>) -> Matrix<T::Obj> {
    f.map(|m| target.domain(m))
}

pub fn cell_codomain<T: Bimonoidal + ?Sized>(
    target: &T,
    f: &Matrix2Cell<T::Mor>,
) -> Matrix<T::Obj> {
    f.map(|m| target.codomain(m))
}

/// Vertical composite `g ∘ f`.
pub fn cell_compose<T: Bimonoidal + ?Sized>(
    target: &T,
    g: &Matrix2Cell<T::Mor>,
    f: &Matrix2Cell<T::Mor>,
) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
    let m = g.zip(f, |x, y| target.compose(x, y))?;
    Ok(m.try_map(|r| r.clone())?)
}

pub fn cell_inverse<T: Bimonoidal + ?Sized>(
    target: &T,
    f: &Matrix2Cell<T::Mor>,
) -> Matrix2Cell<T::Mor> {
    f.map(|m| target.inverse(m))
}

/// Horizontal composite `g ⋆ f`.
pub fn cell_product<T: Bimonoidal + ?Sized>(
    target: &T,
    g: &Matrix2Cell<T::Mor>,
    f: &Matrix2Cell<T::Mor>,
) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
    product_by(
        g,
        f,
        || target.identity(&target.zero()),
        |x, y| target.mor_sum(x, y),
        |x, y| target.mor_prod(x, y),
    )
}

pub fn cell_tensor<T: Bimonoidal + ?Sized>(
    target: &T,
    f: &Matrix2Cell<T::Mor>,
    g: &Matrix2Cell<T::Mor>,
) -> Matrix2Cell<T::Mor> {
    tensor_by(f, g, |x, y| target.mor_prod(x, y))
}

pub fn cells_equal<T: Bimonoidal + ?Sized>(
    target: &T,
    f: &Matrix2Cell<T::Mor>,
    g: &Matrix2Cell<T::Mor>,
) -> bool {
    (f.rows, f.cols) == (g.rows, g.cols)
        && f.entries
            .iter()
            .zip(&g.entries)
            .all(|(x, y)| target.mor_eq(x, y))
}

// ---------------------------------------------------------------------------
// Formal matrices

fn placeholder(arg: usize, j: usize, i: usize) -> Term {
    let letter = ['a', 'b', 'c', 'd', 'e'][arg];
    Term::Gen(Generator::new(&format!("{letter}{j}_{i}")).expect("valid placeholder"))
}

fn formal_arg(arg: usize, rows: usize, cols: usize) -> Matrix<Term> {
    Matrix::from_fn(rows, cols, |j, i| placeholder(arg, j, i))
}

fn formal_product(b: &Matrix<Term>, a: &Matrix<Term>) -> Result<Matrix<Term>, MatrixError> {
    product_by(
        b,
        a,
        || Term::Zero,
        |x, y| Term::sum(x.clone(), y.clone()),
        |x, y| Term::prod(x.clone(), y.clone()),
    )
}

fn formal_identity(n: usize) -> Matrix<Term> {
    Matrix::from_fn(n, n, |j, i| if i == j { Term::One } else { Term::Zero })
}

fn formal_perm(sigma: &Permutation) -> Matrix<Term> {
    let n = sigma.len();
    Matrix::from_fn(n, n, |j, i| {
        if sigma.apply(i) == j {
            Term::One
        } else {
            Term::Zero
        }
    })
}

fn formal_zero(rows: usize, cols: usize) -> Matrix<Term> {
    Matrix::from_fn(rows, cols, |_, _| Term::Zero)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructuralKind {
    ZetaL,
    ZetaR,
    BaseL,
    BaseR,
    BaseA,
    RSigma,
    LTheta,
}

impl StructuralKind {
    pub const ALL: [StructuralKind; 7] = [
        StructuralKind::ZetaL,
        StructuralKind::ZetaR,
        StructuralKind::BaseL,
        StructuralKind::BaseR,
        StructuralKind::BaseA,
        StructuralKind::RSigma,
        StructuralKind::LTheta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructuralKind::ZetaL => "zeta_l",
            StructuralKind::ZetaR => "zeta_r",
            StructuralKind::BaseL => "base_l",
            StructuralKind::BaseR => "base_r",
            StructuralKind::BaseA => "base_a",
            StructuralKind::RSigma => "r_sigma",
            StructuralKind::LTheta => "l_theta",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            StructuralKind::ZetaL => "0_{n,p} A => 0_{m,p}",
            StructuralKind::ZetaR => "A 0_{q,m} => 0_{q,n}",
            StructuralKind::BaseL => "1^n A => A",
            StructuralKind::BaseR => "A 1^m => A",
            StructuralKind::BaseA => "(C B) A => C (B A)",
            StructuralKind::RSigma => "A 1^s => A^s (column i of A^s is column s(i) of A)",
            StructuralKind::LTheta => "1^t A => A with row j replaced by row t^-1(j)",
        }
    }
}

impl fmt::Display for StructuralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructuralKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StructuralKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown structural iso {s:?}"))
    }
}

/// Shape data of a structural 2-cell. Matrix arguments are given by their
/// dimensions `(rows, cols)`; `A` is the last matrix in composition order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StructuralShape {
    /// `A : rows × cols`, zero matrix with `p` rows.
    ZetaL {
        a: (usize, usize),
        p: usize,
    },
    /// Zero matrix with `q` columns.
    ZetaR {
        a: (usize, usize),
        q: usize,
    },
    BaseL {
        a: (usize, usize),
    },
    BaseR {
        a: (usize, usize),
    },
    /// Dimensions of `C`, `B`, `A`.
    BaseA {
        c: (usize, usize),
        b: (usize, usize),
        a: (usize, usize),
    },
    RSigma {
        a: (usize, usize),
        sigma: Permutation,
    },
    LTheta {
        a: (usize, usize),
        theta: Permutation,
    },
}

impl StructuralShape {
    pub fn kind(&self) -> StructuralKind {
        match self {
            StructuralShape::ZetaL { .. } => StructuralKind::ZetaL,
            StructuralShape::ZetaR { .. } => StructuralKind::ZetaR,
            StructuralShape::BaseL { .. } => StructuralKind::BaseL,
            StructuralShape::BaseR { .. } => StructuralKind::BaseR,
            StructuralShape::BaseA { .. } => StructuralKind::BaseA,
            StructuralShape::RSigma { .. } => StructuralKind::RSigma,
            StructuralShape::LTheta { .. } => StructuralKind::LTheta,
        }
    }

    /// Formal source and target with placeholders `a…` for `A`, `b…` for `B`, `c…` for `C`.
    pub fn formal(&self) -> Result<(Matrix<Term>, Matrix<Term>), MatrixError> {
        use StructuralShape::*;
        let fa = |d: (usize, usize)| formal_arg(0, d.0, d.1);
        match self {
            ZetaL { a, p } => {
                let src = formal_product(&formal_zero(*p, a.0), &fa(*a))?;
                Ok((src, formal_zero(*p, a.1)))
            }
            ZetaR { a, q } => {
                let src = formal_product(&fa(*a), &formal_zero(a.1, *q))?;
                Ok((src, formal_zero(a.0, *q)))
            }
            BaseL { a } => Ok((formal_product(&formal_identity(a.0), &fa(*a))?, fa(*a))),
            BaseR { a } => Ok((formal_product(&fa(*a), &formal_identity(a.1))?, fa(*a))),
            BaseA { c, b, a } => {
                let (mc, mb, ma) = (formal_arg(2, c.0, c.1), formal_arg(1, b.0, b.1), fa(*a));
                let src = formal_product(&formal_product(&mc, &mb)?, &ma)?;
                let tgt = formal_product(&mc, &formal_product(&mb, &ma)?)?;
                Ok((src, tgt))
            }
            RSigma { a, sigma } => {
                if sigma.len() != a.1 {
                    return Err(MatrixError::Dimension(format!(
                        "{sigma} does not act on {} columns",
                        a.1
                    )));
                }
                let src = formal_product(&fa(*a), &formal_perm(sigma))?;
                Ok((
                    src,
                    Matrix::from_fn(a.0, a.1, |j, i| placeholder(0, j, sigma.apply(i))),
                ))
            }
            LTheta { a, theta } => {
                if theta.len() != a.0 {
                    return Err(MatrixError::Dimension(format!(
                        "{theta} does not act on {} rows",
                        a.0
                    )));
                }
                let src = formal_product(&formal_perm(theta), &fa(*a))?;
                let inv = theta.inverse();
                Ok((
                    src,
                    Matrix::from_fn(a.0, a.1, |j, i| placeholder(0, inv.apply(j), i)),
                ))
            }
        }
    }

    /// One canonical path per entry.
    pub fn paths(&self) -> Result<Matrix<Path>, MatrixError> {
        let (src, tgt) = self.formal()?;
        let kind = self.kind();
        let mut entries = Vec::with_capacity(src.entries.len());
        for j in 0..src.rows {
            for i in 0..src.cols {
                let (u, v) = (src.get(j, i), tgt.get(j, i));
                let p =
                    canonical_iso(u, v, IsoMode::Tight, Flavor::Symmetric).ok_or_else(|| {
                        MatrixError::Synthesis {
                            kind,
                            row: j,
                            col: i,
                            from: u.clone(),
                            to: v.clone(),
                        }
                    })?;
                entries.push(p);
            }
        }
        Matrix::new(src.rows, src.cols, entries)
    }
}

/// Binds placeholders of argument `arg` to the entries of `m`.
fn bind<O: Clone>(map: &mut HashMap<Generator, O>, arg: usize, m: &Matrix<O>) {
    for j in 0..m.rows {
        for i in 0..m.cols {
            if let Term::Gen(g) = placeholder(arg, j, i) {
                map.insert(g, m.get(j, i).clone());
            }
        }
    }
}

/// Evaluates `p`, optionally replacing its first `ζ^⊕` step by an identity.
fn evaluate_entry<T: Bimonoidal + ?Sized>(
    target: &T,
    p: &Path,
    map: &HashMap<Generator, T::Obj>,
    skip_zeta_sum: bool,
) -> Result<T::Mor, TargetError> {
    let assign = |g: &Generator| map.get(g).cloned();
    if !skip_zeta_sum {
        return evaluate_path(target, p, &assign);
    }
    let mut acc = target.identity(&crate::targets::evaluate_term(target, p.domain(), &assign)?);
    let mut skipped = false;
    for e in p.edges() {
        if !skipped && e.edge.kind() == EdgeKind::ZetaSum {
            skipped = true;
            continue;
        }
        acc = target.compose(&evaluate_prime(target, e, &assign)?, &acc)?;
    }
    Ok(acc)
}

/// Memoizes canonical entry paths by shape and evaluates them in a target.
pub struct StructuralSynth<'t, T: Bimonoidal + ?Sized> {
    target: &'t T,
    cache: RefCell<HashMap<StructuralShape, Rc<Matrix<Path>>>>,
    corrupt_associator: bool,
}

impl<'t, T: Bimonoidal + ?Sized> StructuralSynth<'t, T> {
    pub fn new(target: &'t T) -> Result<Self, MatrixError> {
        if !target.is_tight() {
            return Err(MatrixError::NotTight(target.name()));
        }
        Ok(StructuralSynth {
            target,
            cache: RefCell::new(HashMap::new()),
            corrupt_associator: false,
        })
    }

    /// Negative control: associator entries skip their first `ζ^⊕` step.
    pub fn corrupted(target: &'t T) -> Result<Self, MatrixError> {
        let mut s = Self::new(target)?;
        s.corrupt_associator = true;
        Ok(s)
    }

    pub fn paths(&self, shape: &StructuralShape) -> Result<Rc<Matrix<Path>>, MatrixError> {
        if let Some(p) = self.cache.borrow().get(shape) {
            return Ok(p.clone());
        }
        let p = Rc::new(shape.paths()?);
        self.cache.borrow_mut().insert(shape.clone(), p.clone());
        Ok(p)
    }

    fn eval(
        &self,
        shape: StructuralShape,
        args: &[&Matrix<T::Obj>],
    ) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
        let skip = self.corrupt_associator && shape.kind() == StructuralKind::BaseA;
        let paths = self.paths(&shape)?;
        let mut map = HashMap::new();
        for (q, m) in args.iter().enumerate() {
            bind(&mut map, q, m);
        }
        Ok(paths.try_map(|p| evaluate_entry(self.target, p, &map, skip))?)
    }

    pub fn zeta_l(&self, a: &Matrix<T::Obj>, p: usize) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
        self.eval(StructuralShape::ZetaL { a: dims(a), p }, &[a])
    }

    pub fn zeta_r(&self, a: &Matrix<T::Obj>, q: usize) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
        self.eval(StructuralShape::ZetaR { a: dims(a), q }, &[a])
    }

    pub fn base_l(&self, a: &Matrix<T::Obj>) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
        self.eval(StructuralShape::BaseL { a: dims(a) }, &[a])
    }

    pub fn base_r(&self, a: &Matrix<T::Obj>) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
        self.eval(StructuralShape::BaseR { a: dims(a) }, &[a])
    }

    /// `a : (C B) A ⇒ C (B A)`.
    pub fn base_a(
        &self,
        c: &Matrix<T::Obj>,
        b: &Matrix<T::Obj>,
        a: &Matrix<T::Obj>,
    ) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
        if c.cols != b.rows || b.cols != a.rows {
            return Err(MatrixError::Dimension(
                "associator arguments are not composable".into(),
            ));
        }
        self.eval(
            StructuralShape::BaseA {
                c: dims(c),
                b: dims(b),
                a: dims(a),
            },
            &[a, b, c],
        )
    }

    pub fn r_sigma(
        &self,
        a: &Matrix<T::Obj>,
        sigma: &Permutation,
    ) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
        self.eval(
            StructuralShape::RSigma {
                a: dims(a),
                sigma: sigma.clone(),
            },
            &[a],
        )
    }

    pub fn l_theta(
        &self,
        a: &Matrix<T::Obj>,
        theta: &Permutation,
    ) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
        self.eval(
            StructuralShape::LTheta {
                a: dims(a),
                theta: theta.clone(),
            },
            &[a],
        )
    }
}

fn dims<O>(m: &Matrix<O>) -> (usize, usize) {
    (m.rows, m.cols)
}

/// One-shot synthesis of a structural 2-cell. Matrix arguments are `[A]`, or `[C, B, A]` for `base_a`.
pub fn structural_iso<T: Bimonoidal + ?Sized>(
    kind: StructuralKind,
    mats: &[&Matrix<T::Obj>],
    size: usize,
    perm: Option<&Permutation>,
    target: &T,
) -> Result<Matrix2Cell<T::Mor>, MatrixError> {
    let s = StructuralSynth::new(target)?;
    let need = if kind == StructuralKind::BaseA { 3 } else { 1 };
    if mats.len() != need {
        return Err(MatrixError::Dimension(format!(
            "{kind} takes {need} matrices, got {}",
            mats.len()
        )));
    }
    let perm = || {
        perm.cloned()
            .ok_or_else(|| MatrixError::Dimension(format!("{kind} needs a permutation")))
    };
    match kind {
        StructuralKind::ZetaL => s.zeta_l(mats[0], size),
        StructuralKind::ZetaR => s.zeta_r(mats[0], size),
        StructuralKind::BaseL => s.base_l(mats[0]),
        StructuralKind::BaseR => s.base_r(mats[0]),
        StructuralKind::BaseA => s.base_a(mats[0], mats[1], mats[2]),
        StructuralKind::RSigma => s.r_sigma(mats[0], &perm()?),
        StructuralKind::LTheta => s.l_theta(mats[0], &perm()?),
    }
}

// ---------------------------------------------------------------------------
// Verifier

#[derive(Clone, Debug)]
pub struct MatConfig {
    pub max_dim: usize,
    pub max_entry: usize,
    pub samples: usize,
    pub seed: u64,
    pub corrupt_associator: bool,
}

impl MatConfig {
    pub fn new(seed: u64) -> Self {
        MatConfig {
            max_dim: 3,
            max_entry: 2,
            samples: 200,
            seed,
            corrupt_associator: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatCheck {
    pub axiom: &'static str,
    pub instance: String,
    pub pass: bool,
}

impl fmt::Display for MatCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} axiom={} instance={}", self.axiom, self.instance)
    }
}

#[derive(Clone, Debug)]
pub struct MatReport {
    pub target: String,
    pub seed: u64,
    pub checks: Vec<MatCheck>,
}

impl MatReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// `axiom ↦ (passes, failures)`.
    pub fn counts(&self) -> BTreeMap<&'static str, (usize, usize)> {
        let mut out: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = out.entry(c.axiom).or_default();
            if c.pass {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
        out
    }

    pub fn failed_axioms(&self) -> Vec<&'static str> {
        self.counts()
            .into_iter()
            .filter(|(_, (_, f))| *f > 0)
            .map(|(a, _)| a)
            .collect()
    }
}

pub const MATRIX_AXIOMS: [&str; 10] = [
    "naturality_a",
    "naturality_l",
    "naturality_r",
    "pentagon",
    "unity",
    "tensor_symmetry",
    "interchange",
    "tensor_functoriality",
    "perm_homomorphism",
    "zero_cells",
];

struct Sampler<'t, T: Bimonoidal + ?Sized> {
    target: &'t T,
    rng: ChaCha8Rng,
    objects: Vec<T::Obj>,
    max_dim: usize,
}

impl<T: Bimonoidal + ?Sized> Sampler<'_, T> {
    fn dim(&mut self) -> usize {
        self.rng.gen_range(1..=self.max_dim)
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Matrix<T::Obj> {
        let objs = &self.objects;
        let rng = &mut self.rng;
        Matrix::from_fn(rows, cols, |_, _| {
            objs.choose(rng).expect("objects").clone()
        })
    }

    fn cell(&mut self, a: &Matrix<T::Obj>) -> Matrix2Cell<T::Mor> {
        let target = self.target;
        let rng = &mut self.rng;
        a.map(|o| {
            target
                .morphisms_from(o)
                .choose(rng)
                .cloned()
                .unwrap_or_else(|| target.identity(o))
        })
    }

    fn perm(&mut self, n: usize) -> Permutation {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(&mut self.rng);
        Permutation::from_zero_based(v).expect("shuffle is a permutation")
    }
}

fn check<F>(
    out: &mut Vec<MatCheck>,
    axiom: &'static str,
    instance: &str,
    f: F,
) -> Result<(), MatrixError>
where
    F: FnOnce() -> Result<bool, MatrixError>,
{
    let pass = match f() {
        Ok(b) => b,
        Err(MatrixError::Target(TargetError::Compose { .. })) => false,
        Err(e) => return Err(e),
    };
    out.push(MatCheck {
        axiom,
        instance: instance.to_string(),
        pass,
    });
    Ok(())
}

/// Checks the bicategory axioms and related identities on seeded random matrices.
pub fn verify_matrix_axioms<T: Bimonoidal + ?Sized>(
    target: &T,
    cfg: &MatConfig,
) -> Result<MatReport, MatrixError> {
    let synth = if cfg.corrupt_associator {
        StructuralSynth::corrupted(target)?
    } else {
        StructuralSynth::new(target)?
    };
    let mut s = Sampler {
        target,
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        objects: target.small_objects(cfg.max_entry),
        max_dim: cfg.max_dim.max(1),
    };
    let t = target;
    let mut out = Vec::new();
    for sample in 0..cfg.samples {
        let d: Vec<usize> = (0..5).map(|_| s.dim()).collect();
        let inst = format!(
            "sample={sample} dims={}",
            d.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let a = s.matrix(d[1], d[0]);
        let b = s.matrix(d[2], d[1]);
        let c = s.matrix(d[3], d[2]);
        let dd = s.matrix(d[4], d[3]);
        let (f, g, h) = (s.cell(&a), s.cell(&b), s.cell(&c));
        let (a2, b2, c2) = (
            cell_codomain(t, &f),
            cell_codomain(t, &g),
            cell_codomain(t, &h),
        );

        check(&mut out, "naturality_a", &inst, || {
            let lhs = cell_compose(
                t,
                &synth.base_a(&c2, &b2, &a2)?,
                &cell_product(t, &cell_product(t, &h, &g)?, &f)?,
            )?;
            let rhs = cell_compose(
                t,
                &cell_product(t, &h, &cell_product(t, &g, &f)?)?,
                &synth.base_a(&c, &b, &a)?,
            )?;
            Ok(cells_equal(t, &lhs, &rhs))
        })?;
        check(&mut out, "naturality_l", &inst, || {
            let one = cell_identity(t, &mat_identity(t, a.rows));
            let lhs = cell_compose(t, &synth.base_l(&a2)?, &cell_product(t, &one, &f)?)?;
            let rhs = cell_compose(t, &f, &synth.base_l(&a)?)?;
            Ok(cells_equal(t, &lhs, &rhs))
        })?;
        check(&mut out, "naturality_r", &inst, || {
            let one = cell_identity(t, &mat_identity(t, a.cols));
            let lhs = cell_compose(t, &synth.base_r(&a2)?, &cell_product(t, &f, &one)?)?;
            let rhs = cell_compose(t, &f, &synth.base_r(&a)?)?;
            Ok(cells_equal(t, &lhs, &rhs))
        })?;
        check(&mut out, "pentagon", &inst, || {
            // ((DC)B)A ⇒ (D(CB))A ⇒ D((CB)A) ⇒ D(C(BA))  vs  ((DC)B)A ⇒ (DC)(BA) ⇒ D(C(BA))
            let dc = mat_product(t, &dd, &c)?;
            let cb = mat_product(t, &c, &b)?;
            let ba = mat_product(t, &b, &a)?;
            let id = |m: &Matrix<T::Obj>| cell_identity(t, m);
            let p1 = cell_product(t, &synth.base_a(&dd, &c, &b)?, &id(&a))?;
            let p2 = synth.base_a(&dd, &cb, &a)?;
            let p3 = cell_product(t, &id(&dd), &synth.base_a(&c, &b, &a)?)?;
            let lhs = cell_compose(t, &p3, &cell_compose(t, &p2, &p1)?)?;
            let q1 = synth.base_a(&dc, &b, &a)?;
            let q2 = synth.base_a(&dd, &c, &ba)?;
            let rhs = cell_compose(t, &q2, &q1)?;
            Ok(cells_equal(t, &lhs, &rhs))
        })?;
        check(&mut out, "unity", &inst, || {
            // (B 1) A ⇒ B (1 A) ⇒ B A  vs  r_B ⋆ 1_A
            let one = mat_identity(t, b.cols);
            let lhs = cell_compose(
                t,
                &cell_product(t, &cell_identity(t, &b), &synth.base_l(&a)?)?,
                &synth.base_a(&b, &one, &a)?,
            )?;
            let rhs = cell_product(t, &synth.base_r(&b)?, &cell_identity(t, &a))?;
            Ok(cells_equal(t, &lhs, &rhs))
        })?;
        check(&mut out, "tensor_symmetry", &inst, || {
            tensor_symmetry(&synth, &a, &b)
        })?;
        check(&mut out, "interchange", &inst, || {
            // A --f--> A2 --f2--> ., B --g--> B2 --g2--> .
            let (f2, g2) = (s.cell(&a2), s.cell(&b2));
            let lhs = cell_compose(t, &cell_product(t, &g2, &f2)?, &cell_product(t, &g, &f)?)?;
            let rhs = cell_product(t, &cell_compose(t, &g2, &g)?, &cell_compose(t, &f2, &f)?)?;
            Ok(cells_equal(t, &lhs, &rhs))
        })?;
        check(&mut out, "tensor_functoriality", &inst, || {
            let (f2, h2) = (s.cell(&a2), s.cell(&c2));
            let lhs = cell_compose(t, &cell_tensor(t, &f2, &h2), &cell_tensor(t, &f, &h))?;
            let rhs = cell_tensor(t, &cell_compose(t, &f2, &f)?, &cell_compose(t, &h2, &h)?);
            Ok(cells_equal(t, &lhs, &rhs))
        })?;
        check(&mut out, "perm_homomorphism", &inst, || {
            let n = d[0];
            let (sg, tu) = (s.perm(n), s.perm(n));
            let prod = mat_product(t, &perm_matrix(t, &sg), &perm_matrix(t, &tu))?;
            let direct = perm_matrix(t, &sg.compose(&tu));
            // 1^s 1^t ⇒ 1^t (l_theta at A = 1^t), compared with the direct entry isos.
            let via = synth.l_theta(&perm_matrix(t, &tu), &sg)?;
            let inv = sg.inverse();
            let moved = Matrix::from_fn(n, n, |j, i| {
                perm_matrix(t, &tu).get(inv.apply(j), i).clone()
            });
            Ok(cell_domain(t, &via) == prod && cell_codomain(t, &via) == moved && moved == direct)
        })?;
        check(&mut out, "zero_cells", &inst, || {
            let zl = synth.zeta_l(&a, d[4])?;
            let zr = synth.zeta_r(&a, d[4])?;
            Ok(
                cell_domain(t, &zl) == mat_product(t, &zero_matrix(t, a.rows, d[4]), &a)?
                    && cell_codomain(t, &zl) == zero_matrix(t, a.cols, d[4])
                    && cell_domain(t, &zr) == mat_product(t, &a, &zero_matrix(t, d[4], a.cols))?
                    && cell_codomain(t, &zr) == zero_matrix(t, d[4], a.rows),
            )
        })?;
    }
    Ok(MatReport {
        target: target.name(),
        seed: cfg.seed,
        checks: out,
    })
}

/// `1^T (A ⊠ B) ⇒ (B ⊠ A) 1^{T′}` two ways: through row and column moves with
/// an entrywise symmetry, and by direct synthesis.
fn tensor_symmetry<T: Bimonoidal + ?Sized>(
    synth: &StructuralSynth<'_, T>,
    a: &Matrix<T::Obj>,
    b: &Matrix<T::Obj>,
) -> Result<bool, MatrixError> {
    let t = synth.target;
    let (n, m, q, p) = (a.rows, a.cols, b.rows, b.cols);
    let rows = perm_transpose(n, q);
    let cols = perm_transpose(m, p);
    let ab = mat_tensor(t, a, b);
    let ba = mat_tensor(t, b, a);
    let step1 = synth.l_theta(&ab, &rows)?;
    let moved = cell_codomain(t, &step1);
    let zeta = Matrix::from_fn(n * q, m * p, |j, i| {
        let r = rows.inverse().apply(j);
        let (ai, bi) = (r / q, r % q);
        let (ac, bc) = (i / p, i % p);
        t.structure(
            EdgeKind::ZetaTens,
            &[a.get(ai, ac).clone(), b.get(bi, bc).clone()],
        )
    })
    .try_map(|r| r.clone())?;
    let step3 = cell_inverse(t, &synth.r_sigma(&ba, &cols)?);
    let composite = cell_compose(t, &step3, &cell_compose(t, &zeta, &step1)?)?;
    if cell_domain(t, &zeta) != moved {
        return Ok(false);
    }
    // Direct: placeholders a for A and b for B.
    let fa = formal_arg(0, n, m);
    let fb = formal_arg(1, q, p);
    let prod = |x: &Term, y: &Term| Term::prod(x.clone(), y.clone());
    let src = formal_product(&formal_perm(&rows), &tensor_by(&fa, &fb, prod))?;
    let tgt = formal_product(&tensor_by(&fb, &fa, prod), &formal_perm(&cols))?;
    let mut map = HashMap::new();
    bind(&mut map, 0, a);
    bind(&mut map, 1, b);
    let mut direct = Vec::new();
    for j in 0..src.rows {
        for i in 0..src.cols {
            let (u, v) = (src.get(j, i), tgt.get(j, i));
            let path = canonical_iso(u, v, IsoMode::Tight, Flavor::Symmetric).ok_or_else(|| {
                MatrixError::Synthesis {
                    kind: StructuralKind::LTheta,
                    row: j,
                    col: i,
                    from: u.clone(),
                    to: v.clone(),
                }
            })?;
            direct.push(evaluate_entry(t, &path, &map, false)?);
        }
    }
    let direct = Matrix::new(src.rows, src.cols, direct)?;
    Ok(cells_equal(t, &composite, &direct))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::targets::{d_target, sigma_target};

    fn sm(rows: usize, cols: usize, v: &[usize]) -> Matrix<usize> {
        Matrix::new(rows, cols, v.to_vec()).unwrap()
    }

    #[test]
    fn product_examples() {
        let t = sigma_target();
        assert_eq!(
            mat_product(&t, &sm(1, 1, &[2]), &sm(1, 1, &[3])).unwrap(),
            sm(1, 1, &[6])
        );
        let a = sm(2, 3, &[1, 2, 0, 3, 1, 2]);
        assert_eq!(mat_product(&t, &mat_identity(&t, 2), &a).unwrap(), a);
        let z = mat_product(&t, &zero_matrix(&t, 2, 2), &a).unwrap();
        assert!(z.entries().iter().all(|&e| e == 0));
        assert!(mat_product(&t, &a, &a).is_err());
    }

    #[test]
    fn identity_and_perm_matrices() {
        let t = sigma_target();
        assert_eq!(mat_identity(&t, 2).to_string(), "[[1,0],[0,1]]");
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(perm_matrix(&t, &swap).to_string(), "[[0,1],[1,0]]");
        assert_eq!(
            perm_matrix(&t, &Permutation::identity(3)),
            mat_identity(&t, 3)
        );
    }

    #[test]
    fn tensor_shapes() {
        let t = sigma_target();
        assert_eq!(
            mat_tensor(&t, &sm(1, 1, &[2]), &sm(1, 1, &[3])),
            sm(1, 1, &[6])
        );
        let x = mat_tensor(&t, &sm(2, 3, &[1; 6]), &sm(1, 2, &[2, 3]));
        assert_eq!((x.rows(), x.cols()), (2, 6));
        assert_eq!(x.get(1, 5), &3);
    }

    #[test]
    fn empty_matrices() {
        let t = sigma_target();
        let a = sm(0, 2, &[]);
        let b = sm(3, 0, &[]);
        let ba = mat_product(&t, &b, &a).unwrap();
        assert_eq!((ba.rows(), ba.cols()), (3, 2));
        assert!(ba.entries().iter().all(|&e| e == 0));
        assert_eq!(mat_product(&t, &a, &sm(2, 1, &[1, 1])).unwrap().rows(), 0);
    }

    #[test]
    fn structural_examples() {
        let t = sigma_target();
        let s = StructuralSynth::new(&t).unwrap();
        let one = sm(1, 1, &[2]);
        let l = StructuralShape::BaseL { a: (1, 1) }.paths().unwrap();
        assert!(l.get(0, 0).edges().iter().all(|e| matches!(
            e.edge.kind(),
            EdgeKind::LambdaTens | EdgeKind::RhoTens | EdgeKind::LambdaSum | EdgeKind::RhoSum
        )));
        assert_eq!(cell_codomain(&t, &s.base_l(&one).unwrap()), one);
        let a = StructuralShape::BaseA {
            c: (1, 1),
            b: (1, 1),
            a: (1, 1),
        }
        .paths()
        .unwrap();
        assert!(a
            .get(0, 0)
            .edges()
            .iter()
            .all(|e| e.edge.kind() == EdgeKind::AlphaTens));
        let z = StructuralShape::ZetaL { a: (2, 2), p: 1 }.paths().unwrap();
        assert!(z.entries().iter().all(|p| p.codomain() == &Term::Zero));
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        let r = s.r_sigma(&sm(1, 2, &[1, 2]), &swap).unwrap();
        assert_eq!(cell_codomain(&t, &r), sm(1, 2, &[2, 1]));
        assert!(structural_iso(StructuralKind::RSigma, &[&one], 0, None, &t).is_err());
    }

    #[test]
    fn verifier_passes_small() {
        let report = verify_matrix_axioms(
            &sigma_target(),
            &MatConfig {
                samples: 20,
                ..MatConfig::new(3)
            },
        )
        .unwrap();
        assert!(report.passed(), "{:?}", report.failed_axioms());
        let cfg = MatConfig {
            max_dim: 2,
            max_entry: 1,
            samples: 10,
            ..MatConfig::new(5)
        };
        let report = verify_matrix_axioms(&d_target(), &cfg).unwrap();
        assert!(report.passed(), "{:?}", report.failed_axioms());
    }

    #[test]
    fn corrupted_associator_breaks_pentagon() {
        let cfg = MatConfig {
            samples: 40,
            corrupt_associator: true,
            ..MatConfig::new(11)
        };
        let report = verify_matrix_axioms(&sigma_target(), &cfg).unwrap();
        assert!(report.failed_axioms().contains(&"pentagon"));
    }
}
