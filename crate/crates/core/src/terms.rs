//! Formal objects: the free algebra on generators with `+`, `*`, `0` and `1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid generator name {0:?}")]
    BadGenerator(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(Arc<str>);

impl Generator {
    pub fn new(name: &str) -> Result<Self, TermError> {
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if ok {
            Ok(Generator(Arc::from(name)))
        } else {
            Err(TermError::BadGenerator(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A raw formal term. Subterms are shared, so cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Gen(Generator),
    Zero,
    One,
    Sum(Arc<Term>, Arc<Term>),
    Prod(Arc<Term>, Arc<Term>),
}

/// The two binary operations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Op {
    Sum,
    Prod,
}

impl Term {
    pub fn generator(name: &str) -> Result<Term, TermError> {
        Generator::new(name).map(Term::Gen)
    }

    pub fn sum(a: Term, b: Term) -> Term {
        Term::Sum(Arc::new(a), Arc::new(b))
    }

    pub fn prod(a: Term, b: Term) -> Term {
        Term::Prod(Arc::new(a), Arc::new(b))
    }

    pub fn binary(op: Op, a: Term, b: Term) -> Term {
        match op {
            Op::Sum => Term::sum(a, b),
            Op::Prod => Term::prod(a, b),
        }
    }

    /// The operation and both children, if the term is a sum or product.
    pub fn split(&self) -> Option<(Op, &Term, &Term)> {
        match self {
            Term::Sum(a, b) => Some((Op::Sum, a, b)),
            Term::Prod(a, b) => Some((Op::Prod, a, b)),
            _ => None,
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            Term::Sum(a, b) | Term::Prod(a, b) => a.leaves() + b.leaves(),
            _ => 1,
        }
    }

    pub fn contains_zero(&self) -> bool {
        match self {
            Term::Zero => true,
            Term::Sum(a, b) | Term::Prod(a, b) => a.contains_zero() || b.contains_zero(),
            _ => false,
        }
    }

    pub fn contains_one(&self) -> bool {
        match self {
            Term::One => true,
            Term::Sum(a, b) | Term::Prod(a, b) => a.contains_one() || b.contains_one(),
            _ => false,
        }
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        let mut out = BTreeSet::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators(&self, out: &mut BTreeSet<Generator>) {
        match self {
            Term::Gen(g) => {
                out.insert(g.clone());
            }
            Term::Sum(a, b) | Term::Prod(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
            _ => {}
        }
    }

    /// Generator occurrences from left to right.
    pub fn generator_sequence(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        fn go(t: &Term, out: &mut Vec<Generator>) {
            match t {
                Term::Gen(g) => out.push(g.clone()),
                Term::Sum(a, b) | Term::Prod(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                _ => {}
            }
        }
        go(self, &mut out);
        out
    }

    pub fn support(&self, flavor: SupportFlavor) -> StrictPolynomial {
        support(self, flavor)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(g) => write!(f, "{g}"),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Sum(a, b) => write!(f, "({a}+{b})"),
            Term::Prod(a, b) => write!(f, "({a}*{b})"),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Term {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    opens: Vec<usize>,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for c in self.chars.iter().take(pos) {
            if *c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> TermError {
        let (line, column) = self.location(pos);
        TermError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn term(&mut self) -> Result<Term, TermError> {
        match self.peek() {
            None => match self.opens.last() {
                Some(&open) => Err(self.error(open, "unbalanced parenthesis")),
                None => Err(self.error(self.pos, "unexpected end of input, expected a term")),
            },
            Some('0') => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some('1') => {
                self.pos += 1;
                Ok(Term::One)
            }
            Some('(') => {
                let open = self.pos;
                self.opens.push(open);
                self.pos += 1;
                let a = self.term()?;
                let op = match self.peek() {
                    Some('+') => Op::Sum,
                    Some('*') => Op::Prod,
                    Some(c) => {
                        return Err(
                            self.error(self.pos, format!("expected '+' or '*', found {c:?}"))
                        )
                    }
                    None => return Err(self.error(open, "unbalanced parenthesis")),
                };
                self.pos += 1;
                let b = self.term()?;
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        self.opens.pop();
                        Ok(Term::binary(op, a, b))
                    }
                    Some(c) => Err(self.error(self.pos, format!("expected ')', found {c:?}"))),
                    None => Err(self.error(open, "unbalanced parenthesis")),
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(Term::Gen(Generator(Arc::from(name.as_str()))))
            }
            Some(c) => Err(self.error(self.pos, format!("unexpected token {c:?}"))),
        }
    }
}

/// Parses `IDENT | 0 | 1 | (t + t) | (t * t)`, whitespace-insensitive.
pub fn parse_term(text: &str) -> Result<Term, TermError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        opens: Vec::new(),
        src: text,
    };
    let t = p.term()?;
    if let Some(c) = p.peek() {
        return Err(p.error(
            p.pos,
            format!("trailing input starting at {c:?} in {:?}", p.src),
        ));
    }
    Ok(t)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SupportFlavor {
    Symmetric,
    Nonsymmetric,
}

/// Image of a term in the strict algebra: a sorted multiset of monomials.
/// Symmetric monomials are sorted multisets; nonsymmetric ones are sequences.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPolynomial {
    flavor: SupportFlavor,
    monomials: Vec<Vec<Generator>>,
}

impl StrictPolynomial {
    pub fn flavor(&self) -> SupportFlavor {
        self.flavor
    }

    pub fn monomials(&self) -> &[Vec<Generator>] {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Pairwise-distinct monomials.
    pub fn distinct_monomials(&self) -> bool {
        self.monomials.windows(2).all(|w| w[0] != w[1])
    }

    /// Pairwise-distinct factors within every monomial.
    pub fn distinct_factors(&self) -> bool {
        self.monomials.iter().all(|m| {
            let set: BTreeSet<&Generator> = m.iter().collect();
            set.len() == m.len()
        })
    }
}

impl fmt::Display for StrictPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self.flavor {
            SupportFlavor::Symmetric => ('{', '}'),
            SupportFlavor::Nonsymmetric => ('(', ')'),
        };
        write!(f, "{{")?;
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{open}")?;
            for (j, g) in m.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{g}")?;
            }
            write!(f, "{close}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for StrictPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn support_raw(t: &Term, flavor: SupportFlavor) -> Vec<Vec<Generator>> {
    match t {
        Term::Gen(g) => vec![vec![g.clone()]],
        Term::Zero => vec![],
        Term::One => vec![vec![]],
        Term::Sum(a, b) => {
            let mut v = support_raw(a, flavor);
            v.extend(support_raw(b, flavor));
            v
        }
        Term::Prod(a, b) => {
            let sa = support_raw(a, flavor);
            let sb = support_raw(b, flavor);
            let mut out = Vec::with_capacity(sa.len() * sb.len());
            for x in &sa {
                for y in &sb {
                    let mut m = x.clone();
                    m.extend(y.iter().cloned());
                    if flavor == SupportFlavor::Symmetric {
                        m.sort();
                    }
                    out.push(m);
                }
            }
            out
        }
    }
}

pub fn support(t: &Term, flavor: SupportFlavor) -> StrictPolynomial {
    let mut monomials = support_raw(t, flavor);
    monomials.sort();
    StrictPolynomial { flavor, monomials }
}

/// Monomials of a term in the order they occur after full distribution,
/// with `(a+b)*(c+d)` expanding as `ac, bc, ad, bd`.
pub fn expanded_monomials(t: &Term) -> Vec<Vec<Generator>> {
    match t {
        Term::Gen(g) => vec![vec![g.clone()]],
        Term::Zero => vec![],
        Term::One => vec![vec![]],
        Term::Sum(a, b) => {
            let mut v = expanded_monomials(a);
            v.extend(expanded_monomials(b));
            v
        }
        Term::Prod(a, b) => {
            let sa = expanded_monomials(a);
            let sb = expanded_monomials(b);
            let mut out = Vec::with_capacity(sa.len() * sb.len());
            for y in &sb {
                for x in &sa {
                    let mut m = x.clone();
                    m.extend(y.iter().cloned());
                    out.push(m);
                }
            }
            out
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Measures {
    pub norm: usize,
    pub rank: usize,
    pub size: usize,
}

/// `norm` counts leaves and `rank` counts generator occurrences. `size` adds
/// to the rank a penalty for every constant and every product whose factors
/// are not both generators, so `size == rank` exactly for sums of generators
/// and binary products of generators.
pub fn measures(t: &Term) -> Measures {
    fn go(t: &Term) -> (usize, usize, usize) {
        match t {
            Term::Gen(_) => (1, 1, 1),
            Term::Zero | Term::One => (1, 0, 1),
            Term::Sum(a, b) => {
                let (na, ra, sa) = go(a);
                let (nb, rb, sb) = go(b);
                (na + nb, ra + rb, sa + sb)
            }
            Term::Prod(a, b) => {
                let (na, ra, sa) = go(a);
                let (nb, rb, sb) = go(b);
                (na + nb, ra + rb, sa * sb + sa + sb - 1)
            }
        }
    }
    let (norm, rank, size) = go(t);
    Measures { norm, rank, size }
}

/// The shape on which size equals rank: a sum whose summands are generators
/// or products of two generators.
pub fn is_sum_of_atoms_or_binary_products(t: &Term) -> bool {
    match t {
        Term::Gen(_) => true,
        Term::Prod(a, b) => matches!((&**a, &**b), (Term::Gen(_), Term::Gen(_))),
        Term::Sum(a, b) => {
            is_sum_of_atoms_or_binary_products(a) && is_sum_of_atoms_or_binary_products(b)
        }
        _ => false,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    pub zero_free: bool,
    pub one_free: bool,
    pub is_monomial: bool,
    pub is_polynomial: bool,
    pub is_delta_reduced: bool,
    pub is_regular: bool,
}

/// No sum occurs anywhere.
pub fn is_monomial(t: &Term) -> bool {
    match t {
        Term::Sum(..) => false,
        Term::Prod(a, b) => is_monomial(a) && is_monomial(b),
        _ => true,
    }
}

/// A sum-tree of monomials.
pub fn is_polynomial(t: &Term) -> bool {
    match t {
        Term::Sum(a, b) => is_polynomial(a) && is_polynomial(b),
        other => is_monomial(other),
    }
}

/// No product has a sum as an immediate factor.
pub fn is_delta_reduced(t: &Term) -> bool {
    match t {
        Term::Prod(a, b) => {
            !matches!(**a, Term::Sum(..))
                && !matches!(**b, Term::Sum(..))
                && is_delta_reduced(a)
                && is_delta_reduced(b)
        }
        Term::Sum(a, b) => is_delta_reduced(a) && is_delta_reduced(b),
        _ => true,
    }
}

pub fn is_regular(t: &Term) -> bool {
    let s = support(t, SupportFlavor::Symmetric);
    s.distinct_monomials() && s.distinct_factors()
}

/// Regularity for the setting without multiplicative symmetry: the monomial
/// sequences are pairwise distinct.
pub fn is_ns_regular(t: &Term) -> bool {
    support(t, SupportFlavor::Nonsymmetric).distinct_monomials()
}

pub fn classify(t: &Term) -> Classification {
    Classification {
        zero_free: !t.contains_zero(),
        one_free: !t.contains_one(),
        is_monomial: is_monomial(t),
        is_polynomial: is_polynomial(t),
        is_delta_reduced: is_delta_reduced(t),
        is_regular: is_regular(t),
    }
}

/// Options for [`random_term`].
#[derive(Clone, Debug)]
pub struct RandomTermSpec {
    pub max_leaves: usize,
    pub generators: Vec<Generator>,
    /// Probability that a leaf is `0` or `1` instead of a generator.
    pub constant_rate: f64,
}

impl RandomTermSpec {
    pub fn new(max_leaves: usize, generator_count: usize, constant_rate: f64) -> Self {
        let names = ["a", "b", "c", "d", "e", "f", "g", "h"];
        RandomTermSpec {
            max_leaves,
            generators: names[..generator_count.min(names.len())]
                .iter()
                .map(|n| Generator::new(n).expect("valid name"))
                .collect(),
            constant_rate,
        }
    }
}

pub fn random_term<R: Rng + ?Sized>(rng: &mut R, spec: &RandomTermSpec) -> Term {
    let leaves = rng.gen_range(1..=spec.max_leaves.max(1));
    random_term_with_leaves(rng, spec, leaves)
}

pub fn random_term_with_leaves<R: Rng + ?Sized>(
    rng: &mut R,
    spec: &RandomTermSpec,
    leaves: usize,
) -> Term {
    if leaves <= 1 {
        if spec.generators.is_empty() || rng.gen_bool(spec.constant_rate.clamp(0.0, 1.0)) {
            return if rng.gen_bool(0.5) {
                Term::Zero
            } else {
                Term::One
            };
        }
        let g = &spec.generators[rng.gen_range(0..spec.generators.len())];
        return Term::Gen(g.clone());
    }
    let left = rng.gen_range(1..leaves);
    let a = random_term_with_leaves(rng, spec, left);
    let b = random_term_with_leaves(rng, spec, leaves - left);
    if rng.gen_bool(0.5) {
        Term::sum(a, b)
    } else {
        Term::prod(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn x(name: &str) -> Term {
        Term::generator(name).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(t("(x + y)"), Term::sum(x("x"), x("y")));
        assert_eq!(
            t("((x * 1) + 0)"),
            Term::sum(Term::prod(x("x"), Term::One), Term::Zero)
        );
        assert_eq!(t("((x * 1) + 0)").to_string(), "((x*1)+0)");
        match parse_term("(x +") {
            Err(TermError::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 1)),
            other => panic!("{other:?}"),
        }
        match parse_term("(x\n + @)") {
            Err(TermError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("{other:?}"),
        }
        assert!(parse_term("x y").is_err());
        assert!(parse_term("(x - y)").is_err());
    }

    #[test]
    fn support_examples() {
        let s = support(&t("((x+y)*z)"), SupportFlavor::Symmetric);
        assert_eq!(s.to_string(), "{{x,z},{y,z}}");
        assert!(support(&t("(0*x)"), SupportFlavor::Symmetric).is_zero());
        assert_eq!(
            support(&t("(x*1)"), SupportFlavor::Nonsymmetric).to_string(),
            "{(x)}"
        );
        assert_eq!(
            support(&t("1"), SupportFlavor::Symmetric).monomials(),
            &[Vec::<Generator>::new()]
        );
        assert_ne!(
            support(&t("(x*y)"), SupportFlavor::Nonsymmetric),
            support(&t("(y*x)"), SupportFlavor::Nonsymmetric)
        );
        assert_eq!(
            support(&t("(x*y)"), SupportFlavor::Symmetric),
            support(&t("(y*x)"), SupportFlavor::Symmetric)
        );
    }

    #[test]
    fn measure_examples() {
        let m = measures(&x("x"));
        assert_eq!(m.size, m.rank);
        let m = measures(&t("((x*y)*z)"));
        assert!(m.size > m.rank);
        let m = measures(&t("((x*y)+(z+w))"));
        assert_eq!(m.size, m.rank);
        let m = measures(&t("(x+1)"));
        assert!(m.size > m.rank);
    }

    #[test]
    fn classify_examples() {
        assert!(classify(&t("((x+y)*z)")).is_regular);
        assert!(!classify(&t("(x+x)")).is_regular);
        assert!(!classify(&t("(x*x)")).is_regular);
        assert!(classify(&Term::Zero).is_regular);
        assert!(classify(&Term::One).is_regular);
        let c = classify(&t("((x*y)+(1*0))"));
        assert!(
            c.is_polynomial && c.is_delta_reduced && !c.zero_free && !c.one_free && !c.is_monomial
        );
        let c = classify(&t("(x*(y+z))"));
        assert!(!c.is_polynomial && !c.is_delta_reduced);
        assert!(is_ns_regular(&t("((x*y)+(y*x))")));
        assert!(!is_regular(&t("((x*y)+(y*x))")));
    }

    #[test]
    fn expanded_order_is_right_factor_major() {
        let m = expanded_monomials(&t("((a+b)*(c+d))"));
        let names: Vec<String> = m
            .iter()
            .map(|m| m.iter().map(|g| g.name()).collect())
            .collect();
        assert_eq!(names, ["ac", "bc", "ad", "bd"]);
    }
}
