//! Associative Lyndon–Shirshov Ω-words (ALSW), their factorization, the
//! Shirshov standard bracketing `[u]`, and bracketings relative to a
//! distinguished ALSW subword.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::omega_words::{cmp_prime, Generator, Hole, OmegaWord, OperatorSymbol, Prime, StarWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LyndonError {
    #[error("`{0}` is not an associative Lyndon–Shirshov Ω-word")]
    NotAlsw(String),
    #[error("operator arguments of `{0}` are not all Lyndon–Shirshov")]
    ArgumentsNotAlsw(String),
    #[error("no bracket of `{host}` starts at the subword `{sub}`")]
    NoEnclosingBracket { host: String, sub: String },
}

/// A bracket tree over generators and operators. `Slot` marks the position
/// of a not-yet-substituted polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(Generator),
    Op(OperatorSymbol, Vec<Tree>),
    Bracket(Box<Tree>, Box<Tree>),
    Slot,
}

/// The standard bracketing `[u]` of an ALSW word.
pub type NlswTree = Tree;

impl Tree {
    pub fn bracket(left: Tree, right: Tree) -> Tree {
        Tree::Bracket(Box::new(left), Box::new(right))
    }

    pub fn slot_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Slot => 1,
            Tree::Op(_, args) => args.iter().map(Tree::slot_count).sum(),
            Tree::Bracket(l, r) => l.slot_count() + r.slot_count(),
        }
    }

    /// The associative word read off the leaves, with `Slot` replaced by
    /// `slot`. `None` if a slot is present but no replacement is given.
    pub fn flatten(&self, slot: Option<&OmegaWord>) -> Option<OmegaWord> {
        let mut primes = Vec::new();
        self.flatten_into(slot, &mut primes)?;
        OmegaWord::from_slice(&primes)
    }

    fn flatten_into(&self, slot: Option<&OmegaWord>, out: &mut Vec<Prime>) -> Option<()> {
        match self {
            Tree::Leaf(g) => out.push(Prime::Letter(g.clone())),
            Tree::Slot => out.extend_from_slice(slot?.primes()),
            Tree::Bracket(l, r) => {
                l.flatten_into(slot, out)?;
                r.flatten_into(slot, out)?;
            }
            Tree::Op(op, args) => {
                let args = args
                    .iter()
                    .map(|a| a.flatten(slot))
                    .collect::<Option<Vec<_>>>()?;
                out.push(Prime::op(op.clone(), args));
            }
        }
        Some(())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(g) => write!(f, "{g}"),
            Tree::Slot => f.write_str("#"),
            Tree::Bracket(l, r) => write!(f, "({l} {r})"),
            Tree::Op(op, args) => {
                write!(f, "{op}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A bracketing with exactly one `Slot`, standing for `[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedTree(Tree);

impl MarkedTree {
    pub fn tree(&self) -> &Tree {
        &self.0
    }

    pub fn into_tree(self) -> Tree {
        self.0
    }
}

/// `uv >_lex vu` for every proper split of the prime sequence.
pub fn is_lyndon_sequence(s: &[Prime]) -> bool {
    let n = s.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|i| {
        let rotated = s[i..].iter().chain(s[..i].iter());
        s.iter()
            .zip(rotated)
            .map(|(a, b)| cmp_prime(a, b))
            .find(|o| o.is_ne())
            .is_some_and(Ordering::is_gt)
    })
}

fn args_alsw(p: &Prime) -> bool {
    p.as_op().is_none_or(|app| app.args().iter().all(is_alsw))
}

/// ALSW test: every operator argument is ALSW and the top-level prime
/// sequence is strictly greater than each of its rotations.
pub fn is_alsw(u: &OmegaWord) -> bool {
    u.primes().iter().all(args_alsw) && is_lyndon_sequence(u.primes())
}

/// Factorization `c₁c₂⋯c_t` into Lyndon prime sequences with
/// `c_j ⪯_lex c_{j+1}`, by Duval's scan with the prime order reversed.
pub fn factorize_sequence(s: &[Prime]) -> Vec<&[Prime]> {
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n {
            match cmp_prime(&s[k], &s[j]) {
                Ordering::Greater => k = i,
                Ordering::Equal => k += 1,
                Ordering::Less => break,
            }
            j += 1;
        }
        while i <= k {
            out.push(&s[i..i + j - k]);
            i += j - k;
        }
    }
    out
}

/// Unique nondecreasing ALSW factorization of `u`.
pub fn factorize(u: &OmegaWord) -> Result<Vec<OmegaWord>, LyndonError> {
    if !u.primes().iter().all(args_alsw) {
        return Err(LyndonError::ArgumentsNotAlsw(u.to_string()));
    }
    Ok(factorize_sequence(u.primes())
        .into_iter()
        .map(|f| OmegaWord::from_primes(f.to_vec()))
        .collect())
}

/// Split point of the standard bracketing of a Lyndon sequence of length
/// ≥ 2: the start of its longest proper Lyndon suffix.
pub fn standard_split(s: &[Prime]) -> usize {
    debug_assert!(s.len() >= 2);
    (1..s.len())
        .find(|&i| is_lyndon_sequence(&s[i..]))
        .expect("a single prime is always Lyndon")
}

fn prime_tree(p: &Prime) -> Tree {
    match p {
        Prime::Letter(g) => Tree::Leaf(g.clone()),
        Prime::Op(app) => Tree::Op(
            app.op().clone(),
            app.args().iter().map(bracket_alsw).collect(),
        ),
    }
}

/// Spans of the standard bracketing of a Lyndon prime sequence.
#[derive(Debug)]
enum Span {
    Leaf(usize),
    Node {
        start: usize,
        end: usize,
        left: Box<Span>,
        right: Box<Span>,
    },
}

impl Span {
    fn build(s: &[Prime], offset: usize) -> Span {
        if s.len() == 1 {
            return Span::Leaf(offset);
        }
        let k = standard_split(s);
        Span::Node {
            start: offset,
            end: offset + s.len(),
            left: Box::new(Span::build(&s[..k], offset)),
            right: Box::new(Span::build(&s[k..], offset + k)),
        }
    }

    fn range(&self) -> (usize, usize) {
        match self {
            Span::Leaf(i) => (*i, i + 1),
            Span::Node { start, end, .. } => (*start, *end),
        }
    }

    /// The smallest node starting at `start` that covers `[start, end)`.
    fn enclosing(&self, start: usize, end: usize) -> Option<(usize, usize)> {
        let (s, e) = self.range();
        if s > start || e < end {
            return None;
        }
        if let Span::Node { left, right, .. } = self {
            if let Some(r) = left
                .enclosing(start, end)
                .or_else(|| right.enclosing(start, end))
            {
                return Some(r);
            }
        }
        (s == start).then_some((s, e))
    }

    /// Converts to a tree, replacing the node spanning `target` (if any)
    /// with `replacement` and leaf trees via `leaf`.
    fn to_tree(
        &self,
        target: (usize, usize),
        replacement: &mut Option<Tree>,
        leaf: &mut dyn FnMut(usize) -> Tree,
    ) -> Tree {
        if self.range() == target {
            if let Some(t) = replacement.take() {
                return t;
            }
        }
        match self {
            Span::Leaf(i) => leaf(*i),
            Span::Node { left, right, .. } => {
                let l = left.to_tree(target, replacement, leaf);
                let r = right.to_tree(target, replacement, leaf);
                Tree::bracket(l, r)
            }
        }
    }
}

fn bracket_alsw(u: &OmegaWord) -> Tree {
    bracket_sequence(u.primes())
}

fn bracket_sequence(s: &[Prime]) -> Tree {
    if s.len() == 1 {
        return prime_tree(&s[0]);
    }
    let k = standard_split(s);
    Tree::bracket(bracket_sequence(&s[..k]), bracket_sequence(&s[k..]))
}

/// The Shirshov standard bracketing `[u]`.
pub fn std_bracket(u: &OmegaWord) -> Result<NlswTree, LyndonError> {
    if !is_alsw(u) {
        return Err(LyndonError::NotAlsw(u.to_string()));
    }
    Ok(bracket_alsw(u))
}

/// `[π|_v]_v`: a bracketing of `π|_v` in which `v` is one intact unit
/// (the slot). The bracket `[vc]` of `[π|_v]` that starts at `v` is
/// re-expanded as `[⋯[[v][c₁]][c₂]⋯[c_m]]` over the ALSW factorization
/// of `c`; inside an operator argument the construction recurses.
pub fn relative_bracket(pi: &StarWord, v: &OmegaWord) -> Result<MarkedTree, LyndonError> {
    if !is_alsw(v) {
        return Err(LyndonError::NotAlsw(v.to_string()));
    }
    let host = pi.substitute(v);
    if !is_alsw(&host) {
        return Err(LyndonError::NotAlsw(host.to_string()));
    }
    relative(pi, v).map(MarkedTree)
}

fn relative(pi: &StarWord, v: &OmegaWord) -> Result<Tree, LyndonError> {
    let host = pi.substitute(v);
    let seq = host.primes();
    let spans = Span::build(seq, 0);
    let start = pi.left().len();
    match pi.hole() {
        Hole::Star => {
            let end = start + v.breadth();
            let (s, e) =
                spans
                    .enclosing(start, end)
                    .ok_or_else(|| LyndonError::NoEnclosingBracket {
                        host: host.to_string(),
                        sub: v.to_string(),
                    })?;
            debug_assert_eq!(s, start);
            let tail = factorize_sequence(&seq[end..e]);
            let replacement = tail
                .into_iter()
                .fold(Tree::Slot, |acc, c| Tree::bracket(acc, bracket_sequence(c)));
            let mut leaf = |i: usize| prime_tree(&seq[i]);
            Ok(spans.to_tree((s, e), &mut Some(replacement), &mut leaf))
        }
        Hole::Op {
            op,
            before,
            inner,
            after,
        } => {
            let mut args: Vec<Tree> = before.iter().map(bracket_alsw).collect();
            args.push(relative(inner, v)?);
            args.extend(after.iter().map(bracket_alsw));
            let mut marked = Some(Tree::Op(op.clone(), args));
            let mut leaf = |i: usize| {
                if i == start {
                    marked.take().expect("marked prime visited once")
                } else {
                    prime_tree(&seq[i])
                }
            };
            Ok(spans.to_tree((usize::MAX, usize::MAX), &mut None, &mut leaf))
        }
    }
}
