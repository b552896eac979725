//! Structural moves in context and composable sequences of them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::terms::{parse_term, Op, Term, TermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("cannot compose: codomain {left} does not match domain {right}")]
    BoundaryMismatch { left: Term, right: Term },
    #[error("edge {index} does not compose: expected domain {expected}, found {found}")]
    IllComposed {
        index: usize,
        expected: Term,
        found: Term,
    },
    #[error("{kind} takes {expected} parameter(s), got {got}")]
    Arity {
        kind: EdgeKind,
        expected: usize,
        got: usize,
    },
    #[error("{0} has no formal inverse outside tight mode")]
    NoFormalInverse(EdgeKind),
    #[error("edge {kind} not available in {flavor} mode")]
    ModeViolation { kind: EdgeKind, flavor: Flavor },
    #[error("{kind} does not apply to {term}")]
    ShapeMismatch { kind: EdgeKind, term: Term },
    #[error("context does not match term {0}")]
    ContextMismatch(Term),
    #[error("path file line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Term(#[from] TermError),
}

/// Which kind of bimonoidal category paths are read in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Flavor {
    Symmetric,
    Nonsymmetric,
    Braided,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Symmetric => "symmetric",
            Flavor::Nonsymmetric => "nonsymmetric",
            Flavor::Braided => "braided",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum EdgeKind {
    AlphaSum,
    LambdaSum,
    RhoSum,
    ZetaSum,
    AlphaTens,
    LambdaTens,
    RhoTens,
    ZetaTens,
    LambdaDot,
    RhoDot,
    DeltaL,
    DeltaR,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 12] = [
        EdgeKind::AlphaSum,
        EdgeKind::LambdaSum,
        EdgeKind::RhoSum,
        EdgeKind::ZetaSum,
        EdgeKind::AlphaTens,
        EdgeKind::LambdaTens,
        EdgeKind::RhoTens,
        EdgeKind::ZetaTens,
        EdgeKind::LambdaDot,
        EdgeKind::RhoDot,
        EdgeKind::DeltaL,
        EdgeKind::DeltaR,
    ];

    pub fn arity(self) -> usize {
        use EdgeKind::*;
        match self {
            AlphaSum | AlphaTens | DeltaL | DeltaR => 3,
            ZetaSum | ZetaTens => 2,
            LambdaSum | RhoSum | LambdaTens | RhoTens | LambdaDot | RhoDot => 1,
        }
    }

    pub fn name(self) -> &'static str {
        use EdgeKind::*;
        match self {
            AlphaSum => "AlphaSum",
            LambdaSum => "LambdaSum",
            RhoSum => "RhoSum",
            ZetaSum => "ZetaSum",
            AlphaTens => "AlphaTens",
            LambdaTens => "LambdaTens",
            RhoTens => "RhoTens",
            ZetaTens => "ZetaTens",
            LambdaDot => "LambdaDot",
            RhoDot => "RhoDot",
            DeltaL => "DeltaL",
            DeltaR => "DeltaR",
        }
    }

    pub fn from_name(s: &str) -> Option<EdgeKind> {
        EdgeKind::ALL.iter().copied().find(|k| k.name() == s)
    }

    pub fn is_delta(self) -> bool {
        matches!(self, EdgeKind::DeltaL | EdgeKind::DeltaR)
    }

    /// Forward shape as text, e.g. `A*(B+C) -> (A*B)+(A*C)`.
    pub fn shape(self) -> &'static str {
        use EdgeKind::*;
        match self {
            AlphaSum => "((A+B)+C) -> (A+(B+C))",
            LambdaSum => "(0+A) -> A",
            RhoSum => "(A+0) -> A",
            ZetaSum => "(A+B) -> (B+A)",
            AlphaTens => "((A*B)*C) -> (A*(B*C))",
            LambdaTens => "(1*A) -> A",
            RhoTens => "(A*1) -> A",
            ZetaTens => "(A*B) -> (B*A)",
            LambdaDot => "(0*A) -> 0",
            RhoDot => "(A*0) -> 0",
            DeltaL => "(A*(B+C)) -> ((A*B)+(A*C))",
            DeltaR => "((A+B)*C) -> ((A*C)+(B*C))",
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        }
    }
}

/// A structure morphism at given naturality components, in one orientation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementaryEdge {
    kind: EdgeKind,
    params: Vec<Term>,
    dir: Direction,
}

impl ElementaryEdge {
    /// Builds an edge of the graph proper; distributivity edges cannot be inverted here.
    pub fn new(kind: EdgeKind, params: Vec<Term>, dir: Direction) -> Result<Self, PathError> {
        if kind.is_delta() && dir == Direction::Inverse {
            return Err(PathError::NoFormalInverse(kind));
        }
        Self::new_tight(kind, params, dir)
    }

    /// Like [`ElementaryEdge::new`], but admits formal inverses of distributivity.
    pub fn new_tight(kind: EdgeKind, params: Vec<Term>, dir: Direction) -> Result<Self, PathError> {
        if params.len() != kind.arity() {
            return Err(PathError::Arity {
                kind,
                expected: kind.arity(),
                got: params.len(),
            });
        }
        Ok(ElementaryEdge { kind, params, dir })
    }

    pub fn forward(kind: EdgeKind, params: Vec<Term>) -> Result<Self, PathError> {
        Self::new(kind, params, Direction::Forward)
    }

    pub fn kind(&self) -> EdgeKind {
        self.kind
    }

    pub fn params(&self) -> &[Term] {
        &self.params
    }

    pub fn direction(&self) -> Direction {
        self.dir
    }

    pub fn is_formal_delta_inverse(&self) -> bool {
        self.kind.is_delta() && self.dir == Direction::Inverse
    }

    fn source_target(&self) -> (Term, Term) {
        use EdgeKind::*;
        let p = &self.params;
        let c = |i: usize| p[i].clone();
        match self.kind {
            AlphaSum => (
                Term::sum(Term::sum(c(0), c(1)), c(2)),
                Term::sum(c(0), Term::sum(c(1), c(2))),
            ),
            LambdaSum => (Term::sum(Term::Zero, c(0)), c(0)),
            RhoSum => (Term::sum(c(0), Term::Zero), c(0)),
            ZetaSum => (Term::sum(c(0), c(1)), Term::sum(c(1), c(0))),
            AlphaTens => (
                Term::prod(Term::prod(c(0), c(1)), c(2)),
                Term::prod(c(0), Term::prod(c(1), c(2))),
            ),
            LambdaTens => (Term::prod(Term::One, c(0)), c(0)),
            RhoTens => (Term::prod(c(0), Term::One), c(0)),
            ZetaTens => (Term::prod(c(0), c(1)), Term::prod(c(1), c(0))),
            LambdaDot => (Term::prod(Term::Zero, c(0)), Term::Zero),
            RhoDot => (Term::prod(c(0), Term::Zero), Term::Zero),
            DeltaL => (
                Term::prod(c(0), Term::sum(c(1), c(2))),
                Term::sum(Term::prod(c(0), c(1)), Term::prod(c(0), c(2))),
            ),
            DeltaR => (
                Term::prod(Term::sum(c(0), c(1)), c(2)),
                Term::sum(Term::prod(c(0), c(2)), Term::prod(c(1), c(2))),
            ),
        }
    }

    pub fn boundaries(&self) -> (Term, Term) {
        let (s, t) = self.source_target();
        match self.dir {
            Direction::Forward => (s, t),
            Direction::Inverse => (t, s),
        }
    }

    pub fn domain(&self) -> Term {
        self.boundaries().0
    }

    pub fn codomain(&self) -> Term {
        self.boundaries().1
    }

    pub fn inverse(&self) -> Result<ElementaryEdge, PathError> {
        if self.kind.is_delta() && self.dir == Direction::Forward {
            return Err(PathError::NoFormalInverse(self.kind));
        }
        Ok(self.inverse_tight())
    }

    pub fn inverse_tight(&self) -> ElementaryEdge {
        ElementaryEdge {
            kind: self.kind,
            params: self.params.clone(),
            dir: self.dir.flip(),
        }
    }

    /// In symmetric readings an inverse symmetry is the symmetry with swapped components.
    pub fn symmetric_normal(&self, flavor: Flavor) -> ElementaryEdge {
        let swap = match self.kind {
            EdgeKind::ZetaSum => true,
            EdgeKind::ZetaTens => flavor != Flavor::Braided,
            _ => false,
        };
        if swap && self.dir == Direction::Inverse {
            ElementaryEdge {
                kind: self.kind,
                params: vec![self.params[1].clone(), self.params[0].clone()],
                dir: Direction::Forward,
            }
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for ElementaryEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")?;
        if self.dir == Direction::Inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ElementaryEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// One level of context: the hole sits next to `sibling`, which is on `side`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Frame {
    pub op: Op,
    pub side: Side,
    pub sibling: Term,
}

impl Frame {
    pub fn wrap(&self, hole: Term) -> Term {
        match self.side {
            Side::Left => Term::binary(self.op, self.sibling.clone(), hole),
            Side::Right => Term::binary(self.op, hole, self.sibling.clone()),
        }
    }
}

/// Frames listed from the root down to the hole.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Context {
    pub frames: Vec<Frame>,
}

impl Context {
    pub fn empty() -> Self {
        Context { frames: Vec::new() }
    }

    pub fn plug(&self, hole: Term) -> Term {
        self.frames.iter().rev().fold(hole, |acc, f| f.wrap(acc))
    }

    /// The subterm at the hole, if `t` has this context.
    pub fn hole_in<'a>(&self, t: &'a Term) -> Option<&'a Term> {
        let mut cur = t;
        for f in &self.frames {
            let (op, a, b) = cur.split()?;
            if op != f.op {
                return None;
            }
            let (sib, next) = match f.side {
                Side::Left => (a, b),
                Side::Right => (b, a),
            };
            if *sib != f.sibling {
                return None;
            }
            cur = next;
        }
        Some(cur)
    }

    /// Adds an outermost frame.
    pub fn wrapped(&self, op: Op, side: Side, sibling: Term) -> Context {
        let mut frames = Vec::with_capacity(self.frames.len() + 1);
        frames.push(Frame { op, side, sibling });
        frames.extend(self.frames.iter().cloned());
        Context { frames }
    }

    /// Adds an innermost frame.
    pub fn deeper(&self, op: Op, side: Side, sibling: Term) -> Context {
        let mut frames = self.frames.clone();
        frames.push(Frame { op, side, sibling });
        Context { frames }
    }

    /// Context of the subterm reached by following `route` (which child to enter at each step).
    pub fn at(t: &Term, route: &[Side]) -> Option<(Context, Term)> {
        let mut frames = Vec::with_capacity(route.len());
        let mut cur = t;
        for step in route {
            let (op, a, b) = cur.split()?;
            match step {
                Side::Left => {
                    frames.push(Frame {
                        op,
                        side: Side::Right,
                        sibling: b.clone(),
                    });
                    cur = a;
                }
                Side::Right => {
                    frames.push(Frame {
                        op,
                        side: Side::Left,
                        sibling: a.clone(),
                    });
                    cur = b;
                }
            }
        }
        Some((Context { frames }, cur.clone()))
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fr) in self.frames.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            let op = match fr.op {
                Op::Sum => 'S',
                Op::Prod => 'P',
            };
            let side = match fr.side {
                Side::Left => 'L',
                Side::Right => 'R',
            };
            write!(f, "{op}.{side}({})", fr.sibling)?;
        }
        Ok(())
    }
}

/// An elementary edge placed inside a context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeEdge {
    pub context: Context,
    pub edge: ElementaryEdge,
}

impl PrimeEdge {
    pub fn new(context: Context, edge: ElementaryEdge) -> Self {
        PrimeEdge { context, edge }
    }

    pub fn bare(edge: ElementaryEdge) -> Self {
        PrimeEdge {
            context: Context::empty(),
            edge,
        }
    }

    pub fn boundaries(&self) -> (Term, Term) {
        let (s, t) = self.edge.boundaries();
        (self.context.plug(s), self.context.plug(t))
    }

    pub fn domain(&self) -> Term {
        self.context.plug(self.edge.domain())
    }

    pub fn codomain(&self) -> Term {
        self.context.plug(self.edge.codomain())
    }

    pub fn inverse(&self) -> Result<PrimeEdge, PathError> {
        Ok(PrimeEdge {
            context: self.context.clone(),
            edge: self.edge.inverse()?,
        })
    }

    pub fn inverse_tight(&self) -> PrimeEdge {
        PrimeEdge {
            context: self.context.clone(),
            edge: self.edge.inverse_tight(),
        }
    }

    pub fn whiskered(&self, op: Op, side: Side, c: &Term) -> PrimeEdge {
        PrimeEdge {
            context: self.context.wrapped(op, side, c.clone()),
            edge: self.edge.clone(),
        }
    }

    pub fn to_line(&self) -> String {
        let dir = match self.edge.dir {
            Direction::Forward => "fwd",
            Direction::Inverse => "inv",
        };
        let params: Vec<String> = self.edge.params.iter().map(|p| p.to_string()).collect();
        format!(
            "ctx:{} edge:{}({}) dir:{}",
            self.context,
            self.edge.kind,
            params.join(","),
            dir
        )
    }
}

impl fmt::Debug for PrimeEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// A composable sequence of prime edges anchored at its domain.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Path {
    domain: Term,
    codomain: Term,
    edges: Vec<PrimeEdge>,
}

impl Path {
    pub fn identity(t: Term) -> Path {
        Path {
            domain: t.clone(),
            codomain: t,
            edges: Vec::new(),
        }
    }

    pub fn new(domain: Term, edges: Vec<PrimeEdge>) -> Result<Path, PathError> {
        let mut cur = domain.clone();
        for (index, e) in edges.iter().enumerate() {
            let (d, c) = e.boundaries();
            if d != cur {
                return Err(PathError::IllComposed {
                    index,
                    expected: cur,
                    found: d,
                });
            }
            cur = c;
        }
        Ok(Path {
            domain,
            codomain: cur,
            edges,
        })
    }

    pub fn single(e: PrimeEdge) -> Path {
        let (d, c) = e.boundaries();
        Path {
            domain: d,
            codomain: c,
            edges: vec![e],
        }
    }

    pub fn domain(&self) -> &Term {
        &self.domain
    }

    pub fn codomain(&self) -> &Term {
        &self.codomain
    }

    pub fn boundaries(&self) -> (Term, Term) {
        (self.domain.clone(), self.codomain.clone())
    }

    pub fn edges(&self) -> &[PrimeEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &Path) -> Result<Path, PathError> {
        if self.codomain != next.domain {
            return Err(PathError::BoundaryMismatch {
                left: self.codomain.clone(),
                right: next.domain.clone(),
            });
        }
        let mut edges = self.edges.clone();
        edges.extend(next.edges.iter().cloned());
        Ok(Path {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            edges,
        })
    }

    /// Appends an edge, checking that it composes.
    pub fn push(&mut self, e: PrimeEdge) -> Result<(), PathError> {
        let (d, c) = e.boundaries();
        if d != self.codomain {
            return Err(PathError::IllComposed {
                index: self.edges.len(),
                expected: self.codomain.clone(),
                found: d,
            });
        }
        self.codomain = c;
        self.edges.push(e);
        Ok(())
    }

    pub fn whisker(&self, op: Op, side: Side, c: &Term) -> Path {
        let wrap = |t: &Term| match side {
            Side::Left => Term::binary(op, c.clone(), t.clone()),
            Side::Right => Term::binary(op, t.clone(), c.clone()),
        };
        Path {
            domain: wrap(&self.domain),
            codomain: wrap(&self.codomain),
            edges: self
                .edges
                .iter()
                .map(|e| e.whiskered(op, side, c))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Result<Path, PathError> {
        let edges = self
            .edges
            .iter()
            .rev()
            .map(|e| e.inverse())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Path {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            edges,
        })
    }

    pub fn inverse_tight(&self) -> Path {
        Path {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            edges: self.edges.iter().rev().map(|e| e.inverse_tight()).collect(),
        }
    }

    pub fn uses_formal_delta_inverse(&self) -> bool {
        self.edges.iter().any(|e| e.edge.is_formal_delta_inverse())
    }

    pub fn uses_kind(&self, kind: EdgeKind) -> bool {
        self.edges.iter().any(|e| e.edge.kind == kind)
    }

    /// Checks that every edge is available in the graph of the given flavor.
    pub fn check_flavor(&self, flavor: Flavor) -> Result<(), PathError> {
        for e in &self.edges {
            if e.edge.is_formal_delta_inverse() {
                return Err(PathError::NoFormalInverse(e.edge.kind));
            }
            if flavor == Flavor::Nonsymmetric && e.edge.kind == EdgeKind::ZetaTens {
                return Err(PathError::ModeViolation {
                    kind: EdgeKind::ZetaTens,
                    flavor,
                });
            }
        }
        Ok(())
    }

    /// Drops adjacent pairs of mutually inverse edges.
    pub fn cancel_inverse_pairs(&self, flavor: Flavor) -> Path {
        let mut out: Vec<PrimeEdge> = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if let Some(last) = out.last() {
                if last.context == e.context
                    && last
                        .edge
                        .symmetric_normal(flavor)
                        .inverse_tight()
                        .symmetric_normal(flavor)
                        == e.edge.symmetric_normal(flavor)
                {
                    out.pop();
                    continue;
                }
            }
            out.push(e.clone());
        }
        Path {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            edges: out,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("domain: {}\n", self.domain);
        for e in &self.edges {
            s.push_str(&e.to_line());
            s.push('\n');
        }
        s
    }

    /// Reads the line format; blank lines and `#` comments are skipped and an
    /// optional final `codomain:` line is checked.
    pub fn parse(text: &str) -> Result<Path, PathError> {
        let mut domain: Option<Term> = None;
        let mut edges = Vec::new();
        let mut declared_cod: Option<(usize, Term)> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: String| PathError::Syntax {
                line: line_no,
                message,
            };
            if let Some(rest) = line.strip_prefix("domain:") {
                if domain.is_some() {
                    return Err(syntax("duplicate domain line".into()));
                }
                domain = Some(parse_term(rest).map_err(|e| syntax(e.to_string()))?);
                continue;
            }
            if let Some(rest) = line.strip_prefix("codomain:") {
                declared_cod = Some((
                    line_no,
                    parse_term(rest).map_err(|e| syntax(e.to_string()))?,
                ));
                continue;
            }
            if domain.is_none() {
                return Err(syntax("first line must be `domain: <term>`".into()));
            }
            if declared_cod.is_some() {
                return Err(syntax("edge after codomain line".into()));
            }
            edges.push(parse_edge_line(line).map_err(syntax)?);
        }
        let domain = domain.ok_or(PathError::Syntax {
            line: 1,
            message: "missing domain line".into(),
        })?;
        let path = Path::new(domain, edges)?;
        if let Some((line, cod)) = declared_cod {
            if cod != path.codomain {
                return Err(PathError::Syntax {
                    line,
                    message: format!("declared codomain {cod} but path ends at {}", path.codomain),
                });
            }
        }
        Ok(path)
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Path {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Path::parse(s)
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_frame(s: &str) -> Result<Frame, String> {
    let s = s.trim();
    let (head, rest) = s.split_at(s.find('(').ok_or_else(|| format!("bad frame {s:?}"))?);
    let op = match head.trim() {
        "S.L" | "S.R" => Op::Sum,
        "P.L" | "P.R" => Op::Prod,
        other => return Err(format!("unknown frame tag {other:?}")),
    };
    let side = if head.trim().ends_with('L') {
        Side::Left
    } else {
        Side::Right
    };
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("bad frame {s:?}"))?;
    let sibling = parse_term(inner).map_err(|e| e.to_string())?;
    Ok(Frame { op, side, sibling })
}

fn parse_edge_line(line: &str) -> Result<PrimeEdge, String> {
    let ctx_start = line.find("ctx:").ok_or("missing ctx:")?;
    let edge_start = line.find("edge:").ok_or("missing edge:")?;
    let dir_start = line.rfind("dir:").ok_or("missing dir:")?;
    if !(ctx_start < edge_start && edge_start < dir_start) {
        return Err("fields must appear as ctx: edge: dir:".into());
    }
    let ctx_text = line[ctx_start + 4..edge_start].trim();
    let edge_text = line[edge_start + 5..dir_start].trim();
    let dir_text = line[dir_start + 4..].trim();
    let mut frames = Vec::new();
    if !ctx_text.is_empty() {
        for part in split_top_level(ctx_text, ';') {
            frames.push(parse_frame(part)?);
        }
    }
    let open = edge_text
        .find('(')
        .ok_or_else(|| format!("bad edge {edge_text:?}"))?;
    let kind_name = edge_text[..open].trim();
    let kind =
        EdgeKind::from_name(kind_name).ok_or_else(|| format!("unknown edge kind {kind_name:?}"))?;
    let args = edge_text[open..]
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("bad edge {edge_text:?}"))?;
    let params = split_top_level(args, ',')
        .into_iter()
        .map(|p| parse_term(p).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let dir = match dir_text {
        "fwd" => Direction::Forward,
        "inv" => Direction::Inverse,
        other => return Err(format!("unknown direction {other:?}")),
    };
    // Path files may carry formal distributivity inverses; callers check the flavor.
    let edge = ElementaryEdge::new_tight(kind, params, dir).map_err(|e| e.to_string())?;
    Ok(PrimeEdge {
        context: Context { frames },
        edge,
    })
}

/// The edge of `kind` in orientation `dir` whose domain is `s`, if its shape fits.
///
/// Unit insertions are inferred from `s` itself; `0 -> 0*A` is ambiguous and never inferred.
pub fn infer_edge(s: &Term, kind: EdgeKind, dir: Direction) -> Option<ElementaryEdge> {
    use EdgeKind::*;
    let c = |t: &Term| t.clone();
    let params: Vec<Term> = match (dir, kind, s) {
        (Direction::Forward, AlphaSum, Term::Sum(a, b)) => match &**a {
            Term::Sum(x, y) => vec![c(x), c(y), c(b)],
            _ => return None,
        },
        (Direction::Forward, AlphaTens, Term::Prod(a, b)) => match &**a {
            Term::Prod(x, y) => vec![c(x), c(y), c(b)],
            _ => return None,
        },
        (Direction::Forward, LambdaSum, Term::Sum(a, b)) if **a == Term::Zero => vec![c(b)],
        (Direction::Forward, RhoSum, Term::Sum(a, b)) if **b == Term::Zero => vec![c(a)],
        (Direction::Forward, LambdaTens, Term::Prod(a, b)) if **a == Term::One => vec![c(b)],
        (Direction::Forward, RhoTens, Term::Prod(a, b)) if **b == Term::One => vec![c(a)],
        (Direction::Forward, LambdaDot, Term::Prod(a, b)) if **a == Term::Zero => vec![c(b)],
        (Direction::Forward, RhoDot, Term::Prod(a, b)) if **b == Term::Zero => vec![c(a)],
        (Direction::Forward, ZetaSum, Term::Sum(a, b)) => vec![c(a), c(b)],
        (Direction::Forward, ZetaTens, Term::Prod(a, b)) => vec![c(a), c(b)],
        (Direction::Forward, DeltaL, Term::Prod(a, b)) => match &**b {
            Term::Sum(y, z) => vec![c(a), c(y), c(z)],
            _ => return None,
        },
        (Direction::Forward, DeltaR, Term::Prod(a, b)) => match &**a {
            Term::Sum(x, y) => vec![c(x), c(y), c(b)],
            _ => return None,
        },
        (Direction::Inverse, AlphaSum, Term::Sum(a, b)) => match &**b {
            Term::Sum(y, z) => vec![c(a), c(y), c(z)],
            _ => return None,
        },
        (Direction::Inverse, AlphaTens, Term::Prod(a, b)) => match &**b {
            Term::Prod(y, z) => vec![c(a), c(y), c(z)],
            _ => return None,
        },
        (Direction::Inverse, LambdaSum | RhoSum | LambdaTens | RhoTens, _) => vec![s.clone()],
        (Direction::Inverse, ZetaSum, Term::Sum(a, b)) => vec![c(b), c(a)],
        (Direction::Inverse, ZetaTens, Term::Prod(a, b)) => vec![c(b), c(a)],
        (Direction::Inverse, DeltaL, Term::Sum(l, r)) => match (&**l, &**r) {
            (Term::Prod(a1, b), Term::Prod(a2, cc)) if a1 == a2 => vec![c(a1), c(b), c(cc)],
            _ => return None,
        },
        (Direction::Inverse, DeltaR, Term::Sum(l, r)) => match (&**l, &**r) {
            (Term::Prod(a, c1), Term::Prod(b, c2)) if c1 == c2 => vec![c(a), c(b), c(c1)],
            _ => return None,
        },
        _ => return None,
    };
    ElementaryEdge::new_tight(kind, params, dir).ok()
}

/// Builds a path by naming, for each step, the subterm position and the move to make there.
#[derive(Clone, Debug)]
pub struct PathBuilder {
    path: Path,
}

impl PathBuilder {
    pub fn new(t: Term) -> Self {
        PathBuilder {
            path: Path::identity(t),
        }
    }

    pub fn from_path(path: Path) -> Self {
        PathBuilder { path }
    }

    pub fn current(&self) -> &Term {
        self.path.codomain()
    }

    /// Applies `kind` in orientation `dir` at the subterm reached by `route`.
    pub fn apply(
        &mut self,
        route: &[Side],
        kind: EdgeKind,
        dir: Direction,
    ) -> Result<&mut Self, PathError> {
        let (ctx, sub) = Context::at(self.current(), route)
            .ok_or_else(|| PathError::ContextMismatch(self.current().clone()))?;
        let edge =
            infer_edge(&sub, kind, dir).ok_or(PathError::ShapeMismatch { kind, term: sub })?;
        self.path.push(PrimeEdge { context: ctx, edge })?;
        Ok(self)
    }

    pub fn fwd(&mut self, route: &[Side], kind: EdgeKind) -> Result<&mut Self, PathError> {
        self.apply(route, kind, Direction::Forward)
    }

    pub fn inv(&mut self, route: &[Side], kind: EdgeKind) -> Result<&mut Self, PathError> {
        self.apply(route, kind, Direction::Inverse)
    }

    pub fn push(&mut self, e: PrimeEdge) -> Result<&mut Self, PathError> {
        self.path.push(e)?;
        Ok(self)
    }

    pub fn append(&mut self, p: &Path) -> Result<&mut Self, PathError> {
        self.path = self.path.compose(p)?;
        Ok(self)
    }

    pub fn build(&self) -> Path {
        self.path.clone()
    }

    pub fn into_path(self) -> Path {
        self.path
    }
}

/// Parses a route such as `"LR"` (left child, then its right child).
pub fn route(s: &str) -> Vec<Side> {
    s.chars()
        .map(|c| match c {
            'L' => Side::Left,
            'R' => Side::Right,
            other => panic!("bad route letter {other:?}"),
        })
        .collect()
}

/// What [`applicable_edges`] should include.
#[derive(Clone, Copy, Debug)]
pub struct EdgeQuery {
    pub flavor: Flavor,
    /// Inverse orientations whose domain is matched by shape.
    pub inverses: bool,
    /// Unit insertions `A -> 0+A` and friends, which apply everywhere.
    pub unit_insertions: bool,
    /// Formal inverses of distributivity.
    pub tight: bool,
    /// Restrict to these kinds, if set.
    pub only: Option<&'static [EdgeKind]>,
}

impl EdgeQuery {
    pub fn forward(flavor: Flavor) -> Self {
        EdgeQuery {
            flavor,
            inverses: false,
            unit_insertions: false,
            tight: false,
            only: None,
        }
    }

    pub fn with_inverses(flavor: Flavor) -> Self {
        EdgeQuery {
            inverses: true,
            ..Self::forward(flavor)
        }
    }
}

/// Every prime edge whose domain is `t`, according to `q`.
pub fn applicable_edges(t: &Term, q: &EdgeQuery) -> Vec<PrimeEdge> {
    let mut out = Vec::new();
    walk(t, &Context::empty(), q, &mut out);
    out
}

fn walk(t: &Term, ctx: &Context, q: &EdgeQuery, out: &mut Vec<PrimeEdge>) {
    local_edges(t, ctx, q, out);
    if let Some((op, a, b)) = t.split() {
        walk(a, &ctx.deeper(op, Side::Right, b.clone()), q, out);
        walk(b, &ctx.deeper(op, Side::Left, a.clone()), q, out);
    }
}

fn local_edges(s: &Term, ctx: &Context, q: &EdgeQuery, out: &mut Vec<PrimeEdge>) {
    use EdgeKind::*;
    let allowed = |k: EdgeKind| {
        q.only.is_none_or(|ks| ks.contains(&k))
            && !(k == ZetaTens && q.flavor == Flavor::Nonsymmetric)
    };
    let mut push = |k: EdgeKind, params: Vec<Term>, dir: Direction| {
        if allowed(k) {
            let edge = ElementaryEdge::new_tight(k, params, dir).expect("arity by construction");
            out.push(PrimeEdge {
                context: ctx.clone(),
                edge,
            });
        }
    };
    let fwd = Direction::Forward;
    let inv = Direction::Inverse;
    match s {
        Term::Sum(a, b) => {
            if let Term::Sum(x, y) = &**a {
                push(
                    AlphaSum,
                    vec![(**x).clone(), (**y).clone(), (**b).clone()],
                    fwd,
                );
            }
            if **a == Term::Zero {
                push(LambdaSum, vec![(**b).clone()], fwd);
            }
            if **b == Term::Zero {
                push(RhoSum, vec![(**a).clone()], fwd);
            }
            push(ZetaSum, vec![(**a).clone(), (**b).clone()], fwd);
            if q.inverses {
                if let Term::Sum(y, z) = &**b {
                    push(
                        AlphaSum,
                        vec![(**a).clone(), (**y).clone(), (**z).clone()],
                        inv,
                    );
                }
            }
            if q.tight {
                if let (Term::Prod(a1, b1), Term::Prod(a2, c2)) = (&**a, &**b) {
                    if a1 == a2 {
                        push(
                            DeltaL,
                            vec![(**a1).clone(), (**b1).clone(), (**c2).clone()],
                            inv,
                        );
                    }
                    if b1 == c2 {
                        push(
                            DeltaR,
                            vec![(**a1).clone(), (**a2).clone(), (**b1).clone()],
                            inv,
                        );
                    }
                }
            }
        }
        Term::Prod(a, b) => {
            if let Term::Prod(x, y) = &**a {
                push(
                    AlphaTens,
                    vec![(**x).clone(), (**y).clone(), (**b).clone()],
                    fwd,
                );
            }
            if **a == Term::One {
                push(LambdaTens, vec![(**b).clone()], fwd);
            }
            if **b == Term::One {
                push(RhoTens, vec![(**a).clone()], fwd);
            }
            push(ZetaTens, vec![(**a).clone(), (**b).clone()], fwd);
            if **a == Term::Zero {
                push(LambdaDot, vec![(**b).clone()], fwd);
            }
            if **b == Term::Zero {
                push(RhoDot, vec![(**a).clone()], fwd);
            }
            if let Term::Sum(y, z) = &**b {
                push(
                    DeltaL,
                    vec![(**a).clone(), (**y).clone(), (**z).clone()],
                    fwd,
                );
            }
            if let Term::Sum(x, y) = &**a {
                push(
                    DeltaR,
                    vec![(**x).clone(), (**y).clone(), (**b).clone()],
                    fwd,
                );
            }
            if q.inverses {
                if let Term::Prod(y, z) = &**b {
                    push(
                        AlphaTens,
                        vec![(**a).clone(), (**y).clone(), (**z).clone()],
                        inv,
                    );
                }
                if q.flavor == Flavor::Braided {
                    push(ZetaTens, vec![(**b).clone(), (**a).clone()], inv);
                }
            }
        }
        _ => {}
    }
    if q.unit_insertions {
        push(LambdaSum, vec![s.clone()], inv);
        push(RhoSum, vec![s.clone()], inv);
        push(LambdaTens, vec![s.clone()], inv);
        push(RhoTens, vec![s.clone()], inv);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::{support, SupportFlavor};

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn edge(kind: EdgeKind, ps: &[&str]) -> ElementaryEdge {
        ElementaryEdge::forward(kind, ps.iter().map(|p| t(p)).collect()).unwrap()
    }

    #[test]
    fn boundary_examples() {
        let z = PrimeEdge::bare(edge(EdgeKind::ZetaSum, &["x", "y"]));
        assert_eq!(z.boundaries(), (t("(x+y)"), t("(y+x)")));
        let d = PrimeEdge::bare(edge(EdgeKind::DeltaL, &["x", "y", "z"]));
        assert_eq!(d.boundaries(), (t("(x*(y+z))"), t("((x*y)+(x*z))")));
        let id = Path::identity(t("(x*y)"));
        assert_eq!(id.boundaries(), (t("(x*y)"), t("(x*y)")));
    }

    #[test]
    fn delta_inverse_not_constructible() {
        for k in [EdgeKind::DeltaL, EdgeKind::DeltaR] {
            let ps = vec![t("x"), t("y"), t("z")];
            assert!(matches!(
                ElementaryEdge::new(k, ps.clone(), Direction::Inverse),
                Err(PathError::NoFormalInverse(_))
            ));
            let e = ElementaryEdge::forward(k, ps).unwrap();
            assert!(e.inverse().is_err());
            assert_eq!(e.inverse_tight().domain(), e.codomain());
        }
    }

    #[test]
    fn compose_and_whisker() {
        let z = Path::single(PrimeEdge::bare(edge(EdgeKind::ZetaSum, &["x", "y"])));
        let back = Path::single(PrimeEdge::bare(edge(EdgeKind::ZetaSum, &["y", "x"])));
        let id = Path::identity(t("(x+y)"));
        assert_eq!(id.compose(&z).unwrap(), z);
        let zz = z.compose(&back).unwrap();
        assert_eq!(zz.boundaries(), (t("(x+y)"), t("(x+y)")));
        assert_eq!(
            zz.compose(&z).unwrap().compose(&back).unwrap(),
            zz.compose(&z.compose(&back).unwrap()).unwrap()
        );
        match z.compose(&z) {
            Err(PathError::BoundaryMismatch { left, right }) => {
                assert_eq!((left, right), (t("(y+x)"), t("(x+y)")));
            }
            other => panic!("{other:?}"),
        }
        let w = z.whisker(Op::Prod, Side::Right, &t("z"));
        assert_eq!(w.boundaries(), (t("((x+y)*z)"), t("((y+x)*z)")));
        let wi = id.whisker(Op::Sum, Side::Left, &t("c"));
        assert_eq!(wi, Path::identity(t("(c+(x+y))")));
    }

    #[test]
    fn ill_composed_reports_index() {
        let e = PrimeEdge::bare(edge(EdgeKind::ZetaSum, &["x", "y"]));
        match Path::new(t("(x+y)"), vec![e.clone(), e]) {
            Err(PathError::IllComposed { index, .. }) => assert_eq!(index, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn text_round_trip() {
        let t0 = t("(((a+b)*c)+(1*d))");
        let mut p = Path::identity(t0.clone());
        for _ in 0..3 {
            let es = applicable_edges(p.codomain(), &EdgeQuery::with_inverses(Flavor::Braided));
            p.push(es[es.len() / 2].clone()).unwrap();
        }
        let text = p.to_text();
        assert_eq!(Path::parse(&text).unwrap(), p);
        let with_cod = format!("{text}codomain: {}\n", p.codomain());
        assert_eq!(Path::parse(&with_cod).unwrap(), p);
        assert!(
            Path::parse("domain: (x+y)\nctx: edge:ZetaSum(x,y) dir:fwd\ncodomain: (x+y)\n")
                .is_err()
        );
        assert!(Path::parse("ctx: edge:ZetaSum(x,y) dir:fwd").is_err());
    }

    #[test]
    fn parse_frames() {
        let p = Path::parse("domain: ((x+y)*z)\nctx:P.R(z) edge:ZetaSum(x,y) dir:fwd\n").unwrap();
        assert_eq!(p.codomain(), &t("((y+x)*z)"));
        let p = Path::parse("domain: (c+(y+x))\nctx:S.L(c) edge:ZetaSum(x,y) dir:inv\n").unwrap();
        assert_eq!(p.codomain(), &t("(c+(x+y))"));
    }

    #[test]
    fn edges_preserve_support() {
        let t0 = t("((((0+a)*(b+1))+(a*0))*((c*d)+b))");
        let q = EdgeQuery {
            unit_insertions: true,
            tight: true,
            ..EdgeQuery::with_inverses(Flavor::Braided)
        };
        let es = applicable_edges(&t0, &q);
        assert!(es.len() > 20);
        for e in es {
            let (d, c) = e.boundaries();
            assert_eq!(d, t0);
            assert_eq!(
                support(&d, SupportFlavor::Symmetric),
                support(&c, SupportFlavor::Symmetric)
            );
            if e.edge.kind() != EdgeKind::ZetaTens {
                assert_eq!(
                    support(&d, SupportFlavor::Nonsymmetric),
                    support(&c, SupportFlavor::Nonsymmetric)
                );
            }
        }
    }
}
