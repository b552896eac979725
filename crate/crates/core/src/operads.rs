//! The operads As, EAs, Br and Mon^n.
//!
//! Objects of As, EAs and Br in arity `n` are permutations of `n`. Operad
//! composition `γ(σ; τ_1, …, τ_n)` is `σ⟨k⟩ ∘ (τ_1 ⊕ … ⊕ τ_n)`, and the inputs of
//! `τ_i` are the domain positions of its block.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::permbraid::{
    braid_block, braid_block_sum_all, braid_equal, braid_underlying, perm_block,
    perm_block_sum_all, BraidWord, PermError, Permutation,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperadError {
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("connective {i} out of range 1..={n}")]
    Connective { i: usize, n: usize },
    #[error("bad labels: {0}")]
    Labels(String),
    #[error("label {0} not present")]
    LabelAbsent(usize),
    #[error("expected {expected} parts, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("objects differ in n or labels")]
    Mismatch,
    #[error("{0}")]
    Endpoints(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

// ---------------------------------------------------------------------------
// Mon^n

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum MonTree {
    Leaf(usize),
    /// Connective index and at least two children, none a node with the same index.
    Node(usize, Vec<MonTree>),
}

impl MonTree {
    fn leaves_into(&self, out: &mut Vec<usize>) {
        match self {
            MonTree::Leaf(l) => out.push(*l),
            MonTree::Node(_, ch) => ch.iter().for_each(|c| c.leaves_into(out)),
        }
    }

    fn map_leaves(&self, f: &mut impl FnMut(usize) -> Option<MonTree>) -> Option<MonTree> {
        match self {
            MonTree::Leaf(l) => f(*l),
            MonTree::Node(i, ch) => node(*i, ch.iter().filter_map(|c| c.map_leaves(f)).collect()),
        }
    }

    fn max_connective(&self) -> usize {
        match self {
            MonTree::Leaf(_) => 0,
            MonTree::Node(i, ch) => ch
                .iter()
                .map(MonTree::max_connective)
                .max()
                .unwrap_or(0)
                .max(*i),
        }
    }
}

/// Builds a normalized node: same-index children are spliced in, singletons collapse.
fn node(i: usize, children: Vec<MonTree>) -> Option<MonTree> {
    let mut flat = Vec::with_capacity(children.len());
    for c in children {
        match c {
            MonTree::Node(j, inner) if j == i => flat.extend(inner),
            c => flat.push(c),
        }
    }
    match flat.len() {
        0 => None,
        1 => flat.pop(),
        _ => Some(MonTree::Node(i, flat)),
    }
}

impl fmt::Display for MonTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonTree::Leaf(l) => write!(f, "{l}"),
            MonTree::Node(i, ch) => {
                f.write_str("(")?;
                for (k, c) in ch.iter().enumerate() {
                    if k > 0 {
                        write!(f, " *{i} ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// An object of the free strict n-fold monoidal category on distinct labels.
/// `tree == None` is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonObject {
    n: usize,
    tree: Option<MonTree>,
}

impl MonObject {
    pub fn unit(n: usize) -> Self {
        MonObject { n, tree: None }
    }

    pub fn leaf(n: usize, label: usize) -> Self {
        MonObject {
            n,
            tree: Some(MonTree::Leaf(label)),
        }
    }

    /// Normalizes `tree` and checks connectives and label distinctness.
    pub fn new(n: usize, tree: Option<MonTree>) -> Result<Self, OperadError> {
        let tree = tree.and_then(|t| t.map_leaves(&mut |l| Some(MonTree::Leaf(l))));
        if let Some(t) = &tree {
            let m = t.max_connective();
            if m > n {
                return Err(OperadError::Connective { i: m, n });
            }
            if has_zero_connective(t) {
                return Err(OperadError::Connective { i: 0, n });
            }
        }
        let obj = MonObject { n, tree };
        let labels = obj.label_list();
        if labels.iter().collect::<BTreeSet<_>>().len() != labels.len() {
            return Err(OperadError::Labels(format!("repeated label in {obj}")));
        }
        Ok(obj)
    }

    /// Like [`MonObject::new`], and additionally requires the labels to be exactly `1..=k`.
    pub fn standard(n: usize, tree: Option<MonTree>) -> Result<Self, OperadError> {
        let obj = Self::new(n, tree)?;
        let labels = obj.labels();
        if labels.iter().copied().ne(1..=labels.len()) {
            return Err(OperadError::Labels(format!(
                "labels of {obj} are not 1..{}",
                labels.len()
            )));
        }
        Ok(obj)
    }

    pub fn parse(n: usize, text: &str) -> Result<Self, OperadError> {
        let tree = MonParser {
            s: text.as_bytes(),
            pos: 0,
        }
        .top()?;
        Self::standard(n, tree)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tree(&self) -> Option<&MonTree> {
        self.tree.as_ref()
    }

    pub fn k(&self) -> usize {
        self.label_list().len()
    }

    /// Labels in left-to-right order.
    pub fn label_list(&self) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(t) = &self.tree {
            t.leaves_into(&mut out);
        }
        out
    }

    pub fn labels(&self) -> BTreeSet<usize> {
        self.label_list().into_iter().collect()
    }

    /// For each ordered pair `(x, y)` with `x` left of `y`: the connective joining them.
    pub fn pair_table(&self) -> BTreeMap<(usize, usize), usize> {
        fn walk(t: &MonTree, out: &mut BTreeMap<(usize, usize), usize>) -> Vec<usize> {
            match t {
                MonTree::Leaf(l) => vec![*l],
                MonTree::Node(i, ch) => {
                    let groups: Vec<Vec<usize>> = ch.iter().map(|c| walk(c, out)).collect();
                    for p in 0..groups.len() {
                        for q in p + 1..groups.len() {
                            for &x in &groups[p] {
                                for &y in &groups[q] {
                                    out.insert((x, y), *i);
                                }
                            }
                        }
                    }
                    groups.concat()
                }
            }
        }
        let mut out = BTreeMap::new();
        if let Some(t) = &self.tree {
            walk(t, &mut out);
        }
        out
    }

    /// Applies `f` to every label.
    pub fn relabeled(&self, f: impl Fn(usize) -> usize) -> MonObject {
        let tree = self
            .tree
            .as_ref()
            .and_then(|t| t.map_leaves(&mut |l| Some(MonTree::Leaf(f(l)))));
        MonObject { n: self.n, tree }
    }

    /// The Σ_k action: label `l` becomes `σ(l)`.
    pub fn permuted(&self, sigma: &Permutation) -> MonObject {
        self.relabeled(|l| sigma.apply(l - 1) + 1)
    }
}

fn has_zero_connective(t: &MonTree) -> bool {
    match t {
        MonTree::Leaf(_) => false,
        MonTree::Node(i, ch) => *i == 0 || ch.iter().any(has_zero_connective),
    }
}

impl fmt::Display for MonObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tree {
            None => f.write_str("I"),
            Some(t) => write!(f, "{t}"),
        }
    }
}

struct MonParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl MonParser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, OperadError> {
        Err(OperadError::Syntax {
            col: self.pos + 1,
            msg: msg.into(),
        })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn int(&mut self) -> Result<usize, OperadError> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        text.parse().or_else(|_| self.err("number too large"))
    }

    fn top(&mut self) -> Result<Option<MonTree>, OperadError> {
        self.ws();
        let rest = &self.s[self.pos..];
        if rest.trim_ascii() == b"I" || rest.trim_ascii() == b"()" {
            return Ok(None);
        }
        let t = self.expr()?;
        self.ws();
        if self.pos < self.s.len() {
            return self.err("trailing input");
        }
        Ok(Some(t))
    }

    fn expr(&mut self) -> Result<MonTree, OperadError> {
        self.ws();
        match self.s.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let mut children = vec![self.expr()?];
                let mut conn = None;
                loop {
                    self.ws();
                    match self.s.get(self.pos) {
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(b'*') => {
                            self.pos += 1;
                            let i = self.int()?;
                            if conn.is_some_and(|c| c != i) {
                                return self.err("mixed connectives need parentheses");
                            }
                            conn = Some(i);
                            children.push(self.expr()?);
                        }
                        Some(_) => return self.err("expected '*i' or ')'"),
                        None => return self.err("unclosed '('"),
                    }
                }
                match conn {
                    Some(i) => Ok(MonTree::Node(i, children)),
                    None => Ok(children.pop().expect("one child")),
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(MonTree::Leaf(self.int()?)),
            Some(_) => self.err("expected a label or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// `(a ⊗_i b)` or `(b ⊗_i a)` as seen by a two-label restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairRelation {
    pub first: usize,
    pub second: usize,
    pub connective: usize,
}

/// Deletes every leaf except `a` and `b`.
pub fn mon_restrict(obj: &MonObject, a: usize, b: usize) -> Result<MonObject, OperadError> {
    if a == b {
        return Err(OperadError::Labels(format!(
            "restriction needs two distinct labels, got {a} twice"
        )));
    }
    let labels = obj.labels();
    for l in [a, b] {
        if !labels.contains(&l) {
            return Err(OperadError::LabelAbsent(l));
        }
    }
    let tree = obj
        .tree
        .as_ref()
        .and_then(|t| t.map_leaves(&mut |l| (l == a || l == b).then_some(MonTree::Leaf(l))));
    Ok(MonObject { n: obj.n, tree })
}

/// The relation between two labels of an object.
pub fn pair_relation(obj: &MonObject, a: usize, b: usize) -> Result<PairRelation, OperadError> {
    match mon_restrict(obj, a, b)?.tree {
        Some(MonTree::Node(i, ch)) => match ch.as_slice() {
            [MonTree::Leaf(x), MonTree::Leaf(y)] => Ok(PairRelation {
                first: *x,
                second: *y,
                connective: i,
            }),
            _ => unreachable!("restriction to two labels has two leaves"),
        },
        _ => unreachable!("restriction to two labels is a node"),
    }
}

fn pair_ok(ta: &BTreeMap<(usize, usize), usize>, tb: &BTreeMap<(usize, usize), usize>) -> bool {
    ta.iter().all(|(&(x, y), &i)| match tb.get(&(x, y)) {
        Some(&j) => j >= i,
        None => tb[&(y, x)] > i,
    })
}

/// Whether a (necessarily unique) morphism `A → B` exists.
pub fn mon_hom_exists(a: &MonObject, b: &MonObject) -> Result<bool, OperadError> {
    if a.n != b.n || a.labels() != b.labels() {
        return Err(OperadError::Mismatch);
    }
    let labels: Vec<usize> = a.labels().into_iter().collect();
    for (p, &x) in labels.iter().enumerate() {
        for &y in &labels[p + 1..] {
            let ra = pair_relation(a, x, y)?;
            let rb = pair_relation(b, x, y)?;
            let ok = if ra.first == rb.first {
                rb.connective >= ra.connective
            } else {
                rb.connective > ra.connective
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Precomputed hom test for exhaustive sweeps. Agrees with [`mon_hom_exists`].
#[derive(Clone, Debug)]
pub struct MonHomTable {
    tables: Vec<BTreeMap<(usize, usize), usize>>,
}

impl MonHomTable {
    pub fn new(objects: &[MonObject]) -> Self {
        MonHomTable {
            tables: objects.iter().map(MonObject::pair_table).collect(),
        }
    }

    pub fn hom(&self, a: usize, b: usize) -> bool {
        pair_ok(&self.tables[a], &self.tables[b])
    }
}

/// Grafts `parts[l-1]` at leaf `l` of a standard object, shifting its labels
/// past the earlier parts.
pub fn mon_subst(a: &MonObject, parts: &[MonObject]) -> Result<MonObject, OperadError> {
    let k = a.k();
    if parts.len() != k {
        return Err(OperadError::Arity {
            expected: k,
            got: parts.len(),
        });
    }
    if parts.iter().any(|p| p.n != a.n) {
        return Err(OperadError::Mismatch);
    }
    let mut offsets = Vec::with_capacity(k);
    let mut acc = 0;
    for p in parts {
        offsets.push(acc);
        acc += p.k();
    }
    let tree = a.tree.as_ref().and_then(|t| {
        t.map_leaves(&mut |l| {
            let part = &parts[l - 1];
            let off = offsets[l - 1];
            part.tree
                .as_ref()
                .and_then(|pt| pt.map_leaves(&mut |m| Some(MonTree::Leaf(m + off))))
        })
    });
    Ok(MonObject { n: a.n, tree })
}

fn ordered_partitions(s: &[usize]) -> Vec<Vec<Vec<usize>>> {
    // Ordered set partitions of `s` into nonempty blocks.
    if s.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let m = s.len();
    for mask in 1u32..(1 << m) {
        let block: Vec<usize> = (0..m)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| s[b])
            .collect();
        let rest: Vec<usize> = (0..m)
            .filter(|b| mask >> b & 1 == 0)
            .map(|b| s[b])
            .collect();
        for mut tail in ordered_partitions(&rest) {
            tail.insert(0, block.clone());
            out.push(tail);
        }
    }
    out
}

fn trees_over(n: usize, labels: &[usize], forbid: usize) -> Vec<MonTree> {
    if labels.len() == 1 {
        return vec![MonTree::Leaf(labels[0])];
    }
    let mut out = Vec::new();
    for i in (1..=n).filter(|&i| i != forbid) {
        for blocks in ordered_partitions(labels)
            .into_iter()
            .filter(|b| b.len() >= 2)
        {
            let mut acc: Vec<Vec<MonTree>> = vec![vec![]];
            for block in &blocks {
                let choices = trees_over(n, block, i);
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        choices.iter().map(move |c| {
                            let mut v = prefix.clone();
                            v.push(c.clone());
                            v
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(|ch| MonTree::Node(i, ch)));
        }
    }
    out
}

/// Every object of Mon^n(k), sorted.
pub fn free_nfold_enumerate(n: usize, k: usize) -> Vec<MonObject> {
    if k == 0 {
        return vec![MonObject::unit(n)];
    }
    let labels: Vec<usize> = (1..=k).collect();
    let mut out: Vec<MonObject> = trees_over(n, &labels, 0)
        .into_iter()
        .map(|t| MonObject { n, tree: Some(t) })
        .collect();
    out.sort();
    out
}

/// The exchange source `(A ⊗_j B) ⊗_i (C ⊗_j D)` and target `(A ⊗_i C) ⊗_j (B ⊗_i D)` on labels 1..4.
pub fn exchange_pair(n: usize, i: usize, j: usize) -> Result<(MonObject, MonObject), OperadError> {
    use MonTree::{Leaf, Node};
    let src = Node(
        i,
        vec![
            Node(j, vec![Leaf(1), Leaf(2)]),
            Node(j, vec![Leaf(3), Leaf(4)]),
        ],
    );
    let tgt = Node(
        j,
        vec![
            Node(i, vec![Leaf(1), Leaf(3)]),
            Node(i, vec![Leaf(2), Leaf(4)]),
        ],
    );
    Ok((
        MonObject::standard(n, Some(src))?,
        MonObject::standard(n, Some(tgt))?,
    ))
}

// ---------------------------------------------------------------------------
// As and EAs

/// `σ⟨k⟩ ∘ (τ_1 ⊕ … ⊕ τ_n)`.
pub fn eas_compose(sigma: &Permutation, parts: &[Permutation]) -> Result<Permutation, OperadError> {
    if parts.len() != sigma.len() {
        return Err(OperadError::Arity {
            expected: sigma.len(),
            got: parts.len(),
        });
    }
    let k: Vec<usize> = parts.iter().map(Permutation::len).collect();
    Ok(perm_block(sigma, &k)?.compose(&perm_block_sum_all(parts)))
}

/// The unique morphism between two objects of EAs(n).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EAsMorphism {
    source: Permutation,
    target: Permutation,
}

impl EAsMorphism {
    pub fn new(source: Permutation, target: Permutation) -> Result<Self, OperadError> {
        if source.len() != target.len() {
            return Err(OperadError::Endpoints(format!(
                "{source} and {target} have different arity"
            )));
        }
        Ok(EAsMorphism { source, target })
    }

    pub fn identity(p: &Permutation) -> Self {
        EAsMorphism {
            source: p.clone(),
            target: p.clone(),
        }
    }

    pub fn source(&self) -> &Permutation {
        &self.source
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &EAsMorphism) -> Result<Self, OperadError> {
        if f.target != self.source {
            return Err(OperadError::Endpoints(format!(
                "{} then {}",
                f.target, self.source
            )));
        }
        Ok(EAsMorphism {
            source: f.source.clone(),
            target: self.target.clone(),
        })
    }

    /// `φ_v : id → v`.
    pub fn phi(v: &Permutation) -> Self {
        EAsMorphism {
            source: Permutation::identity(v.len()),
            target: v.clone(),
        }
    }

    /// Right action of Σ_n on morphisms.
    pub fn act(&self, sigma: &Permutation) -> Self {
        EAsMorphism {
            source: self.source.compose(sigma),
            target: self.target.compose(sigma),
        }
    }

    /// `(v, σ)` with `self = φ_v · σ`.
    pub fn factor(&self) -> (Permutation, Permutation) {
        (
            self.target.compose(&self.source.inverse()),
            self.source.clone(),
        )
    }
}

/// Operad composition on EAs morphisms, componentwise on endpoints.
pub fn eas_compose_morphisms(
    m: &EAsMorphism,
    parts: &[EAsMorphism],
) -> Result<EAsMorphism, OperadError> {
    let src: Vec<Permutation> = parts.iter().map(|p| p.source.clone()).collect();
    let tgt: Vec<Permutation> = parts.iter().map(|p| p.target.clone()).collect();
    EAsMorphism::new(eas_compose(&m.source, &src)?, eas_compose(&m.target, &tgt)?)
}

// ---------------------------------------------------------------------------
// Br

/// A morphism `source → target` of Br(n) witnessed by a braid over `target ∘ source⁻¹`.
#[derive(Clone, Debug)]
pub struct BrMorphism {
    source: Permutation,
    target: Permutation,
    witness: BraidWord,
}

impl BrMorphism {
    pub fn new(
        source: Permutation,
        target: Permutation,
        witness: BraidWord,
    ) -> Result<Self, OperadError> {
        let want = target.try_compose(&source.inverse())?;
        if witness.strands() != want.len() || braid_underlying(&witness) != want {
            return Err(OperadError::Endpoints(format!(
                "braid {witness} does not cover {source} -> {target}"
            )));
        }
        Ok(BrMorphism {
            source,
            target,
            witness,
        })
    }

    pub fn identity(p: &Permutation) -> Self {
        BrMorphism {
            source: p.clone(),
            target: p.clone(),
            witness: BraidWord::identity(p.len()),
        }
    }

    /// `φ_b : id → π(b)`.
    pub fn phi(b: &BraidWord) -> Self {
        BrMorphism {
            source: Permutation::identity(b.strands()),
            target: braid_underlying(b),
            witness: b.clone(),
        }
    }

    pub fn source(&self) -> &Permutation {
        &self.source
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    pub fn witness(&self) -> &BraidWord {
        &self.witness
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &BrMorphism) -> Result<Self, OperadError> {
        if f.target != self.source {
            return Err(OperadError::Endpoints(format!(
                "{} then {}",
                f.target, self.source
            )));
        }
        Ok(BrMorphism {
            source: f.source.clone(),
            target: self.target.clone(),
            witness: self.witness.compose(&f.witness),
        })
    }

    pub fn inverse(&self) -> Self {
        BrMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            witness: self.witness.inverse(),
        }
    }

    /// Right action of Σ_n; the witness is unchanged.
    pub fn act(&self, sigma: &Permutation) -> Self {
        BrMorphism {
            source: self.source.compose(sigma),
            target: self.target.compose(sigma),
            witness: self.witness.clone(),
        }
    }

    /// `(b, σ)` with `self = φ_b · σ`.
    pub fn factor(&self) -> (BraidWord, Permutation) {
        (self.witness.clone(), self.source.clone())
    }

    /// Equal endpoints and equal braids.
    pub fn equals(&self, other: &BrMorphism) -> bool {
        self.source == other.source
            && self.target == other.target
            && braid_equal(&self.witness, &other.witness).unwrap_or(false)
    }

    /// The image under π in EAs(n).
    pub fn underlying(&self) -> EAsMorphism {
        EAsMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
        }
    }
}

impl fmt::Display for BrMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -[{}]-> {}", self.source, self.witness, self.target)
    }
}

/// Operad composition in Br: `b⟨k_{σ⁻¹(1)}, …⟩ · (c_{σ⁻¹(1)} ⊕ … ⊕ c_{σ⁻¹(n)})` for `b : σ → σ′`.
pub fn br_compose(b: &BrMorphism, parts: &[BrMorphism]) -> Result<BrMorphism, OperadError> {
    let n = b.source.len();
    if parts.len() != n {
        return Err(OperadError::Arity {
            expected: n,
            got: parts.len(),
        });
    }
    let sinv = b.source.inverse();
    let arranged: Vec<usize> = (0..n).map(|j| parts[sinv.apply(j)].source.len()).collect();
    let sums: Vec<BraidWord> = (0..n)
        .map(|j| parts[sinv.apply(j)].witness.clone())
        .collect();
    let witness = braid_block(&b.witness, &arranged)?.compose(&braid_block_sum_all(&sums));
    let src: Vec<Permutation> = parts.iter().map(|p| p.source.clone()).collect();
    let tgt: Vec<Permutation> = parts.iter().map(|p| p.target.clone()).collect();
    BrMorphism::new(
        eas_compose(&b.source, &src)?,
        eas_compose(&b.target, &tgt)?,
        witness,
    )
}

impl FromStr for MonTree {
    type Err = OperadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = MonParser {
            s: s.as_bytes(),
            pos: 0,
        };
        let t = p.expr()?;
        p.ws();
        if p.pos < p.s.len() {
            return p.err("trailing input");
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, s: &str) -> MonObject {
        MonObject::parse(n, s).unwrap()
    }

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(m(2, "((1 *1 2) *1 3)").to_string(), "(1 *1 2 *1 3)");
        assert_eq!(m(2, "(1 *2 2)").to_string(), "(1 *2 2)");
        assert_eq!(m(2, "I").k(), 0);
        assert!(MonObject::parse(2, "(1 *3 2)").is_err());
        assert!(MonObject::parse(2, "(1 *1 3)").is_err());
        assert!(MonObject::parse(2, "(1 *1 1)").is_err());
        assert!(MonObject::parse(2, "(1 *1 2 *2 3)").is_err());
        assert!(MonObject::parse(2, "(1 *1 2").is_err());
    }

    #[test]
    fn restrict_examples() {
        let a = m(2, "((1 *2 2) *1 3)");
        assert_eq!(mon_restrict(&a, 1, 3).unwrap().to_string(), "(1 *1 3)");
        let b = m(2, "(1 *1 2)");
        assert_eq!(mon_restrict(&b, 1, 2).unwrap(), b);
        assert_eq!(mon_restrict(&b, 1, 5), Err(OperadError::LabelAbsent(5)));
    }

    #[test]
    fn hom_examples() {
        assert!(mon_hom_exists(&m(2, "(1 *1 2)"), &m(2, "(1 *2 2)")).unwrap());
        assert!(!mon_hom_exists(&m(2, "(1 *2 2)"), &m(2, "(2 *1 1)")).unwrap());
        let a = m(2, "((1 *2 2) *1 3)");
        assert!(mon_hom_exists(&a, &a).unwrap());
        assert!(mon_hom_exists(&m(2, "(1 *1 2)"), &m(3, "(1 *1 2)")).is_err());
    }

    #[test]
    fn subst_examples() {
        let a = m(2, "(1 *1 2)");
        let got = mon_subst(&a, &[m(2, "(1 *2 2)"), m(2, "1")]).unwrap();
        assert_eq!(got, m(2, "((1 *2 2) *1 3)"));
        let b = m(3, "((1 *2 3) *1 2)");
        assert_eq!(
            mon_subst(&b, &[m(3, "1"), m(3, "1"), m(3, "1")]).unwrap(),
            b
        );
        assert_eq!(
            mon_subst(&a, &[m(2, "I"), m(2, "(1 *2 2)")]).unwrap(),
            m(2, "(1 *2 2)")
        );
    }

    #[test]
    fn enumeration_examples() {
        let one = free_nfold_enumerate(1, 3);
        assert_eq!(one.len(), 6);
        for a in &one {
            for b in &one {
                assert_eq!(mon_hom_exists(a, b).unwrap(), a == b);
            }
        }
        let two: BTreeSet<String> = free_nfold_enumerate(2, 2)
            .iter()
            .map(|o| o.to_string())
            .collect();
        let want: BTreeSet<String> = ["(1 *1 2)", "(2 *1 1)", "(1 *2 2)", "(2 *2 1)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(two, want);
        assert_eq!(free_nfold_enumerate(3, 0), vec![MonObject::unit(3)]);
    }

    #[test]
    fn exchange_direction() {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let (s, t) = exchange_pair(3, i, j).unwrap();
            assert!(mon_hom_exists(&s, &t).unwrap());
            assert!(!mon_hom_exists(&t, &s).unwrap());
        }
    }

    #[test]
    fn eas_examples() {
        assert_eq!(
            eas_compose(&p(&[2, 1]), &[p(&[1]), p(&[1, 2])]).unwrap(),
            p(&[3, 1, 2])
        );
        assert!(eas_compose(&p(&[1, 2]), &[p(&[1, 2]), p(&[1])])
            .unwrap()
            .is_identity());
        assert!(eas_compose(&p(&[1, 2]), &[p(&[1])]).is_err());
    }

    #[test]
    fn br_unit_blocks() {
        let s1: BraidWord = "B2: s1".parse().unwrap();
        let b = BrMorphism::phi(&s1);
        let ids = [
            BrMorphism::identity(&p(&[1])),
            BrMorphism::identity(&p(&[1])),
        ];
        let c = br_compose(&b, &ids).unwrap();
        assert!(c.equals(&b));
    }

    #[test]
    fn factor_round_trip() {
        let e = EAsMorphism::new(p(&[2, 3, 1]), p(&[3, 1, 2])).unwrap();
        let (v, s) = e.factor();
        assert_eq!(EAsMorphism::phi(&v).act(&s), e);
    }
}
