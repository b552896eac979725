//! Permutations in one-line notation and braid words in Artin generators.
//!
//! Composition follows the functional convention: `g.compose(&f)` applies `f`
//! first. A braid word `l1 l2 ... lk` is the group product, so its rightmost
//! letter acts first and `braid_underlying` is a homomorphism for `compose`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation of 1..{len}: {image:?}")]
    NotBijective { image: Vec<usize>, len: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("letter s{index} out of range for {strands} strands")]
    LetterOutOfRange { index: usize, strands: usize },
    #[error("syntax error: {0}")]
    Syntax(String),
}

/// A bijection of `{1..n}`, stored zero-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds from 1-indexed one-line notation, e.g. `[2,1,3]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self, PermError> {
        let zero: Option<Vec<usize>> = one_line.iter().map(|&v| v.checked_sub(1)).collect();
        match zero {
            Some(z) => Self::from_zero_based(z).map_err(|_| PermError::NotBijective {
                image: one_line.to_vec(),
                len: one_line.len(),
            }),
            None => Err(PermError::NotBijective {
                image: one_line.to_vec(),
                len: one_line.len(),
            }),
        }
    }

    pub fn from_zero_based(image: Vec<usize>) -> Result<Self, PermError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(PermError::NotBijective {
                    image: image.iter().map(|v| v + 1).collect(),
                    len: n,
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Zero-based image of a zero-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn zero_based(&self) -> &[usize] {
        &self.image
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Permutation {
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        }
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.len() != other.len() {
            return Err(PermError::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// Adjacent swaps (zero-based position `p` swaps `p` and `p+1`), listed in
    /// the order they are applied, whose composite is `self`.
    pub fn adjacent_swaps(&self) -> Vec<usize> {
        let mut arr = self.image.clone();
        let mut swaps = Vec::new();
        let n = arr.len();
        for pass in 0..n {
            let mut changed = false;
            for p in 0..n.saturating_sub(1 + pass) {
                if arr[p] > arr[p + 1] {
                    arr.swap(p, p + 1);
                    swaps.push(p);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        swaps
    }

    /// Every permutation of `n` letters, in lexicographic order of one-line images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { image: cur.clone() });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    go(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        go(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Applies the permutation to a sequence: item at position `i` moves to `σ(i)`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(items.len(), self.len());
        let mut out: Vec<Option<T>> = vec![None; items.len()];
        for (i, item) in items.iter().enumerate() {
            out[self.image[i]] = Some(item.clone());
        }
        out.into_iter().map(|x| x.expect("bijection")).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| PermError::Syntax(format!("expected [..], got {t:?}")))?;
        let mut vals = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            vals.push(
                part.parse::<usize>()
                    .map_err(|e| PermError::Syntax(format!("{part:?}: {e}")))?,
            );
        }
        Permutation::from_one_line(&vals)
    }
}

/// Block sum: `σ` on the first `|σ|` letters, `τ` shifted on the rest.
pub fn perm_block_sum(sigma: &Permutation, tau: &Permutation) -> Permutation {
    let m = sigma.len();
    let mut image = sigma.image.clone();
    image.extend(tau.image.iter().map(|v| v + m));
    Permutation { image }
}

/// Block sum of a list of permutations.
pub fn perm_block_sum_all(parts: &[Permutation]) -> Permutation {
    parts
        .iter()
        .fold(Permutation::identity(0), |acc, p| perm_block_sum(&acc, p))
}

/// Block permutation: blocks of sizes `k` are permuted as `σ` permutes letters.
pub fn perm_block(sigma: &Permutation, k: &[usize]) -> Result<Permutation, PermError> {
    let n = sigma.len();
    if k.len() != n {
        return Err(PermError::LengthMismatch {
            expected: n,
            got: k.len(),
        });
    }
    let mut cod_sizes = vec![0; n];
    for i in 0..n {
        cod_sizes[sigma.image[i]] = k[i];
    }
    let cod_off = offsets(&cod_sizes);
    let dom_off = offsets(k);
    let total: usize = k.iter().sum();
    let mut image = vec![0; total];
    for i in 0..n {
        for t in 0..k[i] {
            image[dom_off[i] + t] = cod_off[sigma.image[i]] + t;
        }
    }
    Ok(Permutation { image })
}

pub(crate) fn offsets(sizes: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .iter()
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// Interval swap `τ(m,n)`: the first `m` letters move past the next `n`.
pub fn perm_tau(m: usize, n: usize) -> Permutation {
    let mut image = Vec::with_capacity(m + n);
    image.extend((0..m).map(|i| i + n));
    image.extend(0..n);
    Permutation { image }
}

/// Kronecker permutation with pairing `(i,j) ↦ i·n + j` (zero-based).
pub fn perm_kron(sigma: &Permutation, tau: &Permutation) -> Permutation {
    let n = tau.len();
    let mut image = Vec::with_capacity(sigma.len() * n);
    for i in 0..sigma.len() {
        for j in 0..n {
            image.push(sigma.image[i] * n + tau.image[j]);
        }
    }
    Permutation { image }
}

/// Transposes an `m × n` grid stored row-major into an `n × m` grid stored row-major.
pub fn perm_transpose(m: usize, n: usize) -> Permutation {
    let mut image = vec![0; m * n];
    for i in 0..m {
        for j in 0..n {
            image[i * n + j] = j * m + i;
        }
    }
    Permutation { image }
}

/// One Artin generator `s_index` (1-based) or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter {
            index,
            positive: true,
        }
    }

    pub fn neg(index: usize) -> Self {
        Letter {
            index,
            positive: false,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            positive: !self.positive,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, PermError> {
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(PermError::LetterOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The generator `s_i` (1-based) in `B_strands`.
    pub fn generator(strands: usize, i: usize) -> Result<Self, PermError> {
        BraidWord::new(strands, vec![Letter::pos(i)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty_word(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group product `self · other`; `other` acts first.
    pub fn compose(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(
            self.strands, other.strands,
            "composing braids on different strand counts"
        );
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn try_compose(&self, other: &BraidWord) -> Result<BraidWord, PermError> {
        if self.strands != other.strands {
            return Err(PermError::StrandMismatch(self.strands, other.strands));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Re-embeds on `total` strands with every index moved up by `offset`.
    pub fn shifted(&self, offset: usize, total: usize) -> BraidWord {
        assert!(offset + self.strands <= total);
        BraidWord {
            strands: total,
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    index: l.index + offset,
                    positive: l.positive,
                })
                .collect(),
        }
    }

    /// Positive permutation braid lifting `σ`.
    pub fn lift(sigma: &Permutation) -> BraidWord {
        let letters = sigma
            .adjacent_swaps()
            .into_iter()
            .rev()
            .map(|p| Letter::pos(p + 1))
            .collect();
        BraidWord {
            strands: sigma.len(),
            letters,
        }
    }

    /// Freely reduced images of the free generators under the Artin action;
    /// equal exactly when the braids are equal.
    pub fn artin_images(&self) -> Vec<Vec<i32>> {
        artin_images(self)
    }

    /// Text body without the `B<n>:` prefix, e.g. `s1 s2^-1`.
    pub fn letters_text(&self) -> String {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.positive {
                    format!("s{}", l.index)
                } else {
                    format!("s{}^-1", l.index)
                }
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        if !self.letters.is_empty() {
            write!(f, " {}", self.letters_text())?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BraidWord {
    type Err = PermError;

    /// Parses `B<n>: s1 s2^-1 s1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| PermError::Syntax(format!("missing ':' in {s:?}")))?;
        let strands = head
            .trim()
            .strip_prefix('B')
            .and_then(|n| n.parse::<usize>().ok())
            .ok_or_else(|| PermError::Syntax(format!("bad strand header {head:?}")))?;
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let rest = tok
                .strip_prefix('s')
                .ok_or_else(|| PermError::Syntax(format!("bad letter {tok:?}")))?;
            let (num, positive) = match rest.strip_suffix("^-1") {
                Some(n) => (n, false),
                None => (rest, true),
            };
            let index = num
                .parse::<usize>()
                .map_err(|_| PermError::Syntax(format!("bad letter {tok:?}")))?;
            letters.push(Letter { index, positive });
        }
        BraidWord::new(strands, letters)
    }
}

/// Product of the adjacent transpositions of the letters, rightmost acting first.
pub fn braid_underlying(b: &BraidWord) -> Permutation {
    let mut image: Vec<usize> = (0..b.strands).collect();
    // image = t_{l1} ∘ ... ∘ t_{lk}; build by post-composing from the left.
    for l in b.letters.iter().rev() {
        let p = l.index - 1;
        for v in image.iter_mut() {
            if *v == p {
                *v = p + 1;
            } else if *v == p + 1 {
                *v = p;
            }
        }
    }
    Permutation { image }
}

fn free_reduce_push(word: &mut Vec<i32>, g: i32) {
    if word.last() == Some(&-g) {
        word.pop();
    } else {
        word.push(g);
    }
}

fn artin_images(b: &BraidWord) -> Vec<Vec<i32>> {
    let n = b.strands;
    let mut phi: Vec<Vec<i32>> = (1..=n as i32).map(|j| vec![j]).collect();
    let subst = |phi: &Vec<Vec<i32>>, w: &[i32]| -> Vec<i32> {
        let mut out = Vec::new();
        for &g in w {
            if g > 0 {
                for &h in &phi[(g - 1) as usize] {
                    free_reduce_push(&mut out, h);
                }
            } else {
                for &h in phi[(-g - 1) as usize].iter().rev() {
                    free_reduce_push(&mut out, -h);
                }
            }
        }
        out
    };
    // phi ← phi ∘ ρ(letter), reading letters left to right.
    for l in &b.letters {
        let i = l.index as i32;
        let (wi, wi1) = if l.positive {
            (vec![i, i + 1, -i], vec![i])
        } else {
            (vec![i + 1], vec![-(i + 1), i, i + 1])
        };
        let new_i = subst(&phi, &wi);
        let new_i1 = subst(&phi, &wi1);
        phi[(i - 1) as usize] = new_i;
        phi[i as usize] = new_i1;
    }
    phi
}

/// Decides equality in the braid group via the Artin action on the free group.
pub fn braid_equal(b1: &BraidWord, b2: &BraidWord) -> Result<bool, PermError> {
    if b1.strands != b2.strands {
        return Err(PermError::StrandMismatch(b1.strands, b2.strands));
    }
    if b1.letters == b2.letters {
        return Ok(true);
    }
    Ok(artin_images(b1) == artin_images(b2))
}

/// Sum braid: `c` placed to the right of `b`.
pub fn braid_block_sum(b: &BraidWord, c: &BraidWord) -> BraidWord {
    let total = b.strands + c.strands;
    let mut out = b.shifted(0, total);
    out.letters.extend(c.shifted(b.strands, total).letters);
    out
}

pub fn braid_block_sum_all(parts: &[BraidWord]) -> BraidWord {
    parts
        .iter()
        .fold(BraidWord::identity(0), |acc, p| braid_block_sum(&acc, p))
}

/// Elementary block braid: a block of `m` strands crosses positively over the next `n`.
pub fn elementary_block_braid(m: usize, n: usize) -> BraidWord {
    // Actions in the order performed: each strand of the first block, last one
    // first, walks right across the second block.
    let mut actions = Vec::with_capacity(m * n);
    for s in (1..=m).rev() {
        for step in 0..n {
            actions.push(Letter::pos(s + step));
        }
    }
    actions.reverse();
    BraidWord {
        strands: m + n,
        letters: actions,
    }
}

/// Block braid: each letter of `b` becomes an elementary block braid between
/// the blocks currently occupying its two positions.
pub fn braid_block(b: &BraidWord, k: &[usize]) -> Result<BraidWord, PermError> {
    if k.len() != b.strands {
        return Err(PermError::LengthMismatch {
            expected: b.strands,
            got: k.len(),
        });
    }
    let total: usize = k.iter().sum();
    let mut arr = k.to_vec();
    let mut pieces: Vec<BraidWord> = Vec::with_capacity(b.letters.len());
    for l in b.letters.iter().rev() {
        let pos = l.index - 1;
        let (p, q) = (arr[pos], arr[pos + 1]);
        let off: usize = arr[..pos].iter().sum();
        let piece = if l.positive {
            elementary_block_braid(p, q)
        } else {
            elementary_block_braid(q, p).inverse()
        };
        pieces.push(piece.shifted(off, total));
        arr.swap(pos, pos + 1);
    }
    let mut letters = Vec::new();
    for piece in pieces.iter().rev() {
        letters.extend_from_slice(&piece.letters);
    }
    Ok(BraidWord {
        strands: total,
        letters,
    })
}
