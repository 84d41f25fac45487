use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::alphabet::{Generator, OperatorSymbol};

/// An operator applied to Ω-word arguments.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct OpApp {
    op: OperatorSymbol,
    args: Vec<OmegaWord>,
    degree: usize,
}

impl OpApp {
    pub fn op(&self) -> &OperatorSymbol {
        &self.op
    }

    pub fn args(&self) -> &[OmegaWord] {
        &self.args
    }
}

/// A letter or a single operator application.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Prime {
    Letter(Generator),
    Op(Arc<OpApp>),
}

impl Prime {
    /// Panics when `args.len()` differs from the operator's arity.
    pub fn op(op: OperatorSymbol, args: Vec<OmegaWord>) -> Prime {
        assert_eq!(
            args.len(),
            op.arity(),
            "arity mismatch for operator {}",
            op.name()
        );
        let degree = 1 + args.iter().map(OmegaWord::degree).sum::<usize>();
        Prime::Op(Arc::new(OpApp { op, args, degree }))
    }

    pub fn degree(&self) -> usize {
        match self {
            Prime::Letter(_) => 1,
            Prime::Op(app) => app.degree,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Prime::Letter(_) => 0,
            Prime::Op(app) => 1 + app.args.iter().map(OmegaWord::depth).max().unwrap_or(0),
        }
    }

    pub fn as_op(&self) -> Option<&OpApp> {
        match self {
            Prime::Letter(_) => None,
            Prime::Op(app) => Some(app),
        }
    }
}

/// An associative Ω-word `u₁u₂⋯uₙ` in canonical prime form.
#[derive(Clone, Debug, Eq)]
pub struct OmegaWord {
    primes: Arc<[Prime]>,
    degree: usize,
}

impl PartialEq for OmegaWord {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.primes, &other.primes)
            || (self.degree == other.degree && self.primes == other.primes)
    }
}

impl Hash for OmegaWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.primes.hash(state);
    }
}

impl OmegaWord {
    /// Panics on an empty prime sequence; Ω-words are nonempty.
    pub fn from_primes(primes: Vec<Prime>) -> Self {
        assert!(!primes.is_empty(), "Ω-words are nonempty");
        let degree = primes.iter().map(Prime::degree).sum();
        OmegaWord {
            primes: primes.into(),
            degree,
        }
    }

    /// `None` for an empty slice.
    pub fn from_slice(primes: &[Prime]) -> Option<Self> {
        if primes.is_empty() {
            None
        } else {
            Some(Self::from_primes(primes.to_vec()))
        }
    }

    pub fn letter(g: Generator) -> Self {
        Self::from_primes(vec![Prime::Letter(g)])
    }

    pub fn prime(p: Prime) -> Self {
        Self::from_primes(vec![p])
    }

    /// The single-prime word `op(args…)`.
    pub fn apply(op: OperatorSymbol, args: Vec<OmegaWord>) -> Self {
        Self::prime(Prime::op(op, args))
    }

    pub fn primes(&self) -> &[Prime] {
        &self.primes
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn breadth(&self) -> usize {
        self.primes.len()
    }

    pub fn depth(&self) -> usize {
        self.primes.iter().map(Prime::depth).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &OmegaWord) -> OmegaWord {
        let mut v = Vec::with_capacity(self.breadth() + other.breadth());
        v.extend_from_slice(&self.primes);
        v.extend_from_slice(&other.primes);
        OmegaWord {
            primes: v.into(),
            degree: self.degree + other.degree,
        }
    }
}

/// The prime order `≻`: degree first, then letters by `>_X` and operator
/// words by `(ω, args…)` lexicographically.
pub fn cmp_prime(a: &Prime, b: &Prime) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| match (a, b) {
        (Prime::Letter(x), Prime::Letter(y)) => y.rank().cmp(&x.rank()),
        (Prime::Letter(_), Prime::Op(_)) => Ordering::Less,
        (Prime::Op(_), Prime::Letter(_)) => Ordering::Greater,
        (Prime::Op(p), Prime::Op(q)) => {
            if Arc::ptr_eq(p, q) {
                return Ordering::Equal;
            }
            q.op.rank().cmp(&p.op.rank()).then_with(|| {
                p.args
                    .iter()
                    .zip(q.args.iter())
                    .map(|(u, v)| cmp_dl(u, v))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
        }
    })
}

/// Lexicographic order on prime sequences where a proper prefix is the
/// *greater* word (the empty word exceeds every nonempty word).
pub fn cmp_lex(u: &[Prime], v: &[Prime]) -> Ordering {
    for (a, b) in u.iter().zip(v.iter()) {
        let o = cmp_prime(a, b);
        if o.is_ne() {
            return o;
        }
    }
    v.len().cmp(&u.len())
}

/// The Deg-lex order: `(deg, bre, u₁, …, uₙ)` compared lexicographically.
pub fn cmp_dl(u: &OmegaWord, v: &OmegaWord) -> Ordering {
    if Arc::ptr_eq(&u.primes, &v.primes) {
        return Ordering::Equal;
    }
    u.degree
        .cmp(&v.degree)
        .then_with(|| u.breadth().cmp(&v.breadth()))
        .then_with(|| {
            u.primes
                .iter()
                .zip(v.primes.iter())
                .map(|(a, b)| cmp_prime(a, b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
}

impl Ord for OmegaWord {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_dl(self, other)
    }
}

impl PartialOrd for OmegaWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prime::Letter(g) => write!(f, "{g}"),
            Prime::Op(app) => {
                write!(f, "{}(", app.op)?;
                for (i, a) in app.args.iter().enumerate() {
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

impl fmt::Display for OmegaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega_words::Alphabet;

    fn setup() -> (Generator, Generator, OperatorSymbol) {
        let a = Alphabet::new(&["x2", "x1"], &[("P", 1)]).unwrap();
        (
            a.generator("x2").unwrap().clone(),
            a.generator("x1").unwrap().clone(),
            a.operator("P").unwrap().clone(),
        )
    }

    fn w(ps: Vec<Prime>) -> OmegaWord {
        OmegaWord::from_primes(ps)
    }

    #[test]
    fn worked_example_statistics() {
        let a = Alphabet::new(&["x2", "x1"], &[("w3", 3), ("w1", 1)]).unwrap();
        let x2 = Prime::Letter(a.generator("x2").unwrap().clone());
        let x1 = Prime::Letter(a.generator("x1").unwrap().clone());
        let w3 = a.operator("w3").unwrap().clone();
        let w1 = a.operator("w1").unwrap().clone();
        let inner = Prime::op(w1, vec![w(vec![x2.clone(), x2.clone(), x1.clone()])]);
        let big = Prime::op(
            w3,
            vec![
                w(vec![x2.clone(), x1.clone(), x1.clone()]),
                w(vec![x1.clone()]),
                w(vec![inner]),
            ],
        );
        let u = w(vec![big, x2, x1]);
        assert_eq!((u.degree(), u.breadth(), u.depth()), (11, 3, 2));
    }

    #[test]
    fn small_statistics() {
        let (x2, x1, p) = setup();
        let x = OmegaWord::letter(x2.clone());
        assert_eq!((x.degree(), x.breadth(), x.depth()), (1, 1, 0));
        let ppx = OmegaWord::apply(p.clone(), vec![OmegaWord::apply(p, vec![x])]);
        assert_eq!((ppx.degree(), ppx.breadth(), ppx.depth()), (3, 1, 2));
        let xxx = w(vec![
            Prime::Letter(x1.clone()),
            Prime::Letter(x1.clone()),
            Prime::Letter(x1),
        ]);
        assert_eq!((xxx.breadth(), xxx.depth()), (3, 0));
    }

    #[test]
    fn lex_prefix_is_greater() {
        let (x2, x1, _) = setup();
        let a = [Prime::Letter(x2.clone())];
        let b = [Prime::Letter(x2.clone()), Prime::Letter(x1.clone())];
        assert_eq!(cmp_lex(&a, &b), Ordering::Greater);
        assert_eq!(cmp_lex(&b, &a), Ordering::Less);
        assert_eq!(cmp_lex(&[], &a), Ordering::Greater);
        let c = [Prime::Letter(x1.clone())];
        assert_eq!(cmp_lex(&a, &c), Ordering::Greater);
        assert_eq!(cmp_lex(&b, &b), Ordering::Equal);
    }

    #[test]
    fn deg_lex_examples() {
        let (x2, x1, p) = setup();
        let l2 = OmegaWord::letter(x2);
        let l1 = OmegaWord::letter(x1.clone());
        let px2 = Prime::op(p.clone(), vec![l2.clone()]);
        let px1 = Prime::op(p.clone(), vec![l1.clone()]);
        assert_eq!(
            cmp_dl(&OmegaWord::prime(px1.clone()), &l1),
            Ordering::Greater
        );
        // equal degree 3: breadth 3 beats breadth 1
        let l = Prime::Letter(x1);
        let xxx = w(vec![l.clone(), l.clone(), l.clone()]);
        let pxx = OmegaWord::apply(p, vec![w(vec![l.clone(), l])]);
        assert_eq!(cmp_dl(&xxx, &pxx), Ordering::Greater);
        let a = w(vec![px2.clone(), px1.clone()]);
        let b = w(vec![px1, px2]);
        assert_eq!(cmp_dl(&a, &b), Ordering::Greater);
        assert_eq!(cmp_dl(&a, &a.clone()), Ordering::Equal);
    }
}
