use std::cmp::Ordering;
use std::fmt;

use super::rules::RuleSet;
use super::GsbError;
use crate::lie_poly::{to_nlsw, AssocPoly, LiePoly};
use crate::omega_words::{occurrences, overlaps, OmegaWord, StarWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AmbiguityKind {
    /// `w = f̄·a = b·ḡ`.
    Intersection { a: OmegaWord, b: OmegaWord },
    /// `w = f̄ = π|_ḡ`.
    Inclusion { pi: StarWord },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub f: usize,
    pub g: usize,
    pub w: OmegaWord,
}

impl Ambiguity {
    pub fn is_intersection(&self) -> bool {
        matches!(self.kind, AmbiguityKind::Intersection { .. })
    }

    /// Canonical report order: by `w`, then rule ids, then context.
    pub fn canonical_cmp(&self, other: &Ambiguity) -> Ordering {
        self.w
            .cmp(&other.w)
            .then(self.f.cmp(&other.f))
            .then(self.g.cmp(&other.g))
            .then_with(|| self.context_key().cmp(&other.context_key()))
    }

    fn context_key(&self) -> (u8, String) {
        match &self.kind {
            AmbiguityKind::Intersection { a, .. } => (0, a.to_string()),
            AmbiguityKind::Inclusion { pi } => (1, pi.to_string()),
        }
    }
}

impl fmt::Display for Ambiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AmbiguityKind::Intersection { a, b } => write!(
                f,
                "intersection f={} g={} w={} a={} b={}",
                self.f, self.g, self.w, a, b
            ),
            AmbiguityKind::Inclusion { pi } => {
                write!(
                    f,
                    "inclusion f={} g={} w={} pi={}",
                    self.f, self.g, self.w, pi
                )
            }
        }
    }
}

/// Every ambiguity between the leading words of rules `f` and `g`; the
/// trivial self-inclusion `f = g, π = ⋆` is left out.
pub fn ambiguities(rules: &RuleSet, f: usize, g: usize) -> Vec<Ambiguity> {
    let (lf, lg) = (rules.rule(f).lead(), rules.rule(g).lead());
    let mut out: Vec<Ambiguity> = overlaps(lf, lg)
        .into_iter()
        .map(|o| Ambiguity {
            kind: AmbiguityKind::Intersection { a: o.a, b: o.b },
            f,
            g,
            w: o.w,
        })
        .collect();
    out.extend(
        occurrences(lf, lg)
            .into_iter()
            .filter(|pi| !(f == g && pi.is_star()))
            .map(|pi| Ambiguity {
                kind: AmbiguityKind::Inclusion { pi },
                f,
                g,
                w: lf.clone(),
            }),
    );
    out
}

/// All ambiguities of the rule set with `deg(w) ≤ maxdeg`, in canonical
/// order. Uses the lead and prefix indices rather than scanning all pairs.
pub fn all_ambiguities(rules: &RuleSet, maxdeg: usize) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    for f in 0..rules.len() {
        out.extend(ambiguities_of(rules, f, maxdeg, |_| true));
    }
    out.sort_by(Ambiguity::canonical_cmp);
    out
}

/// Ambiguities with `f` as first rule and any `g` accepted by `keep_g`.
pub(crate) fn ambiguities_of(
    rules: &RuleSet,
    f: usize,
    maxdeg: usize,
    keep_g: impl Fn(usize) -> bool,
) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    let lf = rules.rule(f).lead();
    let p = lf.primes();
    for k in 1..p.len() {
        let border = OmegaWord::from_primes(p[p.len() - k..].to_vec());
        for &g in rules.rules_with_prefix(&border) {
            if !keep_g(g) {
                continue;
            }
            let lg = rules.rule(g).lead();
            let a = OmegaWord::from_primes(lg.primes()[k..].to_vec());
            if lf.degree() + a.degree() > maxdeg {
                continue;
            }
            let b = OmegaWord::from_primes(p[..p.len() - k].to_vec());
            out.push(Ambiguity {
                kind: AmbiguityKind::Intersection { a: a.clone(), b },
                f,
                g,
                w: lf.concat(&a),
            });
        }
    }
    if lf.degree() <= maxdeg {
        for g in rules.applicable(lf) {
            if !keep_g(g) {
                continue;
            }
            for pi in occurrences(lf, rules.rule(g).lead()) {
                if f == g && pi.is_star() {
                    continue;
                }
                out.push(Ambiguity {
                    kind: AmbiguityKind::Inclusion { pi },
                    f,
                    g,
                    w: lf.clone(),
                });
            }
        }
    }
    out
}

/// The composition `⟨f,g⟩_w` in associative coordinates.
pub(crate) fn composition_expanded(
    rules: &RuleSet,
    amb: &Ambiguity,
) -> Result<AssocPoly, GsbError> {
    let (f, g) = (amb.f, amb.g);
    let (lhs, rhs) = match &amb.kind {
        AmbiguityKind::Intersection { a, b } => (
            rules
                .special_normal_expansion(&StarWord::around(Vec::new(), a.primes().to_vec()), f)?,
            rules
                .special_normal_expansion(&StarWord::around(b.primes().to_vec(), Vec::new()), g)?,
        ),
        AmbiguityKind::Inclusion { pi } => (
            rules.special_normal_expansion(&StarWord::star(), f)?,
            rules.special_normal_expansion(pi, g)?,
        ),
    };
    Ok(lhs.sub(&rhs))
}

/// `⟨f,g⟩_w`: `[fa]_{f̄} − [bg]_{ḡ}` for an intersection and
/// `f − [π|_g]_{ḡ}` for an inclusion.
pub fn composition(rules: &RuleSet, amb: &Ambiguity) -> Result<LiePoly, GsbError> {
    Ok(to_nlsw(&composition_expanded(rules, amb)?)?)
}

/// The associative composition: `f·a − b·g` or `f − π|_g` on expansions.
pub fn assoc_composition(rules: &RuleSet, amb: &Ambiguity) -> AssocPoly {
    let (ef, eg) = (rules.rule(amb.f).expansion(), rules.rule(amb.g).expansion());
    match &amb.kind {
        AmbiguityKind::Intersection { a, b } => ef.right_mul_word(a).sub(&eg.left_mul_word(b)),
        AmbiguityKind::Inclusion { pi } => ef.sub(&AssocPoly::substitute(pi, eg)),
    }
}
