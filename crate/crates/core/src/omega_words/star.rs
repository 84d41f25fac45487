use std::fmt;

use super::alphabet::OperatorSymbol;
use super::word::{OmegaWord, Prime};

/// An Ω-word over `X ∪ {⋆}` with exactly one `⋆`.
///
/// Stored as a zipper: the primes to the left and right of the hole at the
/// top level, and the hole itself, which is either `⋆` or an operator prime
/// one of whose arguments is again a star-word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarWord {
    left: Vec<Prime>,
    hole: Hole,
    right: Vec<Prime>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Hole {
    Star,
    Op {
        op: OperatorSymbol,
        before: Vec<OmegaWord>,
        inner: Box<StarWord>,
        after: Vec<OmegaWord>,
    },
}

impl StarWord {
    /// The bare hole `⋆`.
    pub fn star() -> Self {
        StarWord {
            left: Vec::new(),
            hole: Hole::Star,
            right: Vec::new(),
        }
    }

    /// `left ⋆ right` at the top level.
    pub fn around(left: Vec<Prime>, right: Vec<Prime>) -> Self {
        StarWord {
            left,
            hole: Hole::Star,
            right,
        }
    }

    /// `left op(before…, inner, after…) right`. Panics on an arity mismatch.
    pub fn nested(
        left: Vec<Prime>,
        op: OperatorSymbol,
        before: Vec<OmegaWord>,
        inner: StarWord,
        after: Vec<OmegaWord>,
        right: Vec<Prime>,
    ) -> Self {
        assert_eq!(
            before.len() + after.len() + 1,
            op.arity(),
            "arity mismatch in star-word"
        );
        StarWord {
            left,
            hole: Hole::Op {
                op,
                before,
                inner: Box::new(inner),
                after,
            },
            right,
        }
    }

    pub fn left(&self) -> &[Prime] {
        &self.left
    }

    pub fn right(&self) -> &[Prime] {
        &self.right
    }

    pub fn hole(&self) -> &Hole {
        &self.hole
    }

    pub fn is_star(&self) -> bool {
        self.left.is_empty() && self.right.is_empty() && matches!(self.hole, Hole::Star)
    }

    /// Degree with `⋆` counted once.
    pub fn degree(&self) -> usize {
        let side: usize = self
            .left
            .iter()
            .chain(self.right.iter())
            .map(Prime::degree)
            .sum();
        side + match &self.hole {
            Hole::Star => 1,
            Hole::Op {
                before,
                inner,
                after,
                ..
            } => {
                1 + inner.degree()
                    + before
                        .iter()
                        .chain(after.iter())
                        .map(OmegaWord::degree)
                        .sum::<usize>()
            }
        }
    }

    /// `π|_u`: replaces `⋆` by the primes of `u`.
    pub fn substitute(&self, u: &OmegaWord) -> OmegaWord {
        let mut primes = self.left.clone();
        match &self.hole {
            Hole::Star => primes.extend_from_slice(u.primes()),
            Hole::Op {
                op,
                before,
                inner,
                after,
            } => {
                let mut args = before.clone();
                args.push(inner.substitute(u));
                args.extend(after.iter().cloned());
                primes.push(Prime::op(op.clone(), args));
            }
        }
        primes.extend_from_slice(&self.right);
        OmegaWord::from_primes(primes)
    }

    /// Wraps `self` as the argument `index` of an operator prime sitting
    /// between `left` and `right`.
    fn wrap(self, left: &[Prime], app: &super::word::OpApp, index: usize, right: &[Prime]) -> Self {
        let args = app.args();
        StarWord::nested(
            left.to_vec(),
            app.op().clone(),
            args[..index].to_vec(),
            self,
            args[index + 1..].to_vec(),
            right.to_vec(),
        )
    }
}

/// Every `π` with `π|_pattern = host`, leftmost first; at a given position
/// the top-level match precedes matches nested inside that prime.
pub fn occurrences(host: &OmegaWord, pattern: &OmegaWord) -> Vec<StarWord> {
    let mut out = Vec::new();
    collect_occurrences(host.primes(), pattern, &mut out);
    out
}

fn collect_occurrences(host: &[Prime], pattern: &OmegaWord, out: &mut Vec<StarWord>) {
    let k = pattern.breadth();
    let pat = pattern.primes();
    for i in 0..host.len() {
        if i + k <= host.len() && host[i..i + k] == *pat {
            out.push(StarWord::around(host[..i].to_vec(), host[i + k..].to_vec()));
        }
        if let Prime::Op(app) = &host[i] {
            for (j, arg) in app.args().iter().enumerate() {
                if arg.degree() < pattern.degree() {
                    continue;
                }
                let mut inner = Vec::new();
                collect_occurrences(arg.primes(), pattern, &mut inner);
                out.extend(
                    inner
                        .into_iter()
                        .map(|pi| pi.wrap(&host[..i], app, j, &host[i + 1..])),
                );
            }
        }
    }
}

/// An intersection ambiguity `w = t₁·a = b·t₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub w: OmegaWord,
    pub a: OmegaWord,
    pub b: OmegaWord,
}

/// All proper top-level overlaps of a suffix of `t1` with a prefix of `t2`,
/// with `a` and `b` nonempty; ordered by increasing `w`.
pub fn overlaps(t1: &OmegaWord, t2: &OmegaWord) -> Vec<Overlap> {
    let (p1, p2) = (t1.primes(), t2.primes());
    let max = p1.len().min(p2.len());
    let mut out = Vec::new();
    // larger shared border → shorter w
    for k in (1..max).rev() {
        if p1[p1.len() - k..] == p2[..k] {
            let a = OmegaWord::from_primes(p2[k..].to_vec());
            let b = OmegaWord::from_primes(p1[..p1.len() - k].to_vec());
            out.push(Overlap {
                w: t1.concat(&a),
                a,
                b,
            });
        }
    }
    out
}

impl fmt::Display for StarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            Ok(())
        };
        for p in &self.left {
            sep(f)?;
            write!(f, "{p}")?;
        }
        sep(f)?;
        match &self.hole {
            Hole::Star => f.write_str("*")?,
            Hole::Op {
                op,
                before,
                inner,
                after,
            } => {
                write!(f, "{op}(")?;
                let mut parts: Vec<String> = before.iter().map(|w| w.to_string()).collect();
                parts.push(inner.to_string());
                parts.extend(after.iter().map(|w| w.to_string()));
                write!(f, "{})", parts.join(", "))?;
            }
        }
        for p in &self.right {
            sep(f)?;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
