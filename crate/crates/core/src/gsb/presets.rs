use std::fmt;
use std::str::FromStr;

use super::rules::{LambdaMode, RuleSet};
use super::GsbError;
use crate::lie_poly::{Coefficient, LiePoly};
use crate::omega_words::{Alphabet, OmegaWord, OperatorSymbol, WordEnumerator};

/// The operator identities shipped as rule families.
///
/// `Perturbed` drops the last two terms of the Rota–Baxter identity and
/// is not a Gröbner–Shirshov basis; it serves as a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresetKind {
    RotaBaxter,
    ModifiedRotaBaxter,
    Nijenhuis,
    Perturbed,
}

impl PresetKind {
    pub const ALL: [PresetKind; 4] = [
        PresetKind::RotaBaxter,
        PresetKind::ModifiedRotaBaxter,
        PresetKind::Nijenhuis,
        PresetKind::Perturbed,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            PresetKind::RotaBaxter => "rb",
            PresetKind::ModifiedRotaBaxter => "mrb",
            PresetKind::Nijenhuis => "nij",
            PresetKind::Perturbed => "perturbed",
        }
    }
}

impl fmt::Display for PresetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for PresetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PresetKind::ALL
            .into_iter()
            .find(|k| k.short_name() == s)
            .ok_or_else(|| format!("unknown preset `{s}` (expected rb, mrb, nij or perturbed)"))
    }
}

fn apply(op: &OperatorSymbol, p: &LiePoly) -> LiePoly {
    LiePoly::apply_op(op, &[p]).expect("unary operator")
}

/// The relation of the given kind for the pair `(u, v)`:
///
/// * rb: `(P[u] P[v]) − P((P[u] [v])) − P(([u] P[v])) − λP(([u] [v]))`
/// * mrb: the same with the last term `−λ([u] [v])`
/// * nij: the same with the last term `+P(P(([u] [v])))`
/// * perturbed: `(P[u] P[v]) − P((P[u] [v]))`
pub fn preset_rule(kind: PresetKind, op: &OperatorSymbol, u: &OmegaWord, v: &OmegaWord) -> LiePoly {
    let (bu, bv) = (LiePoly::basis(u.clone()), LiePoly::basis(v.clone()));
    let (pu, pv) = (apply(op, &bu), apply(op, &bv));
    let mut f = pu.bracket(&pv).sub(&apply(op, &pu.bracket(&bv)));
    if kind == PresetKind::Perturbed {
        return f;
    }
    f = f.sub(&apply(op, &bu.bracket(&pv)));
    let uv = bu.bracket(&bv);
    let last = match kind {
        PresetKind::RotaBaxter => apply(op, &uv).scale(&-&Coefficient::lambda()),
        PresetKind::ModifiedRotaBaxter => uv.scale(&-&Coefficient::lambda()),
        PresetKind::Nijenhuis => apply(op, &apply(op, &uv)),
        PresetKind::Perturbed => unreachable!(),
    };
    f.add(&last)
}

/// The family `{f_{u,v} : u >_Dl v ALSW, deg(P(u)P(v)) ≤ maxdeg}`, ordered
/// by leading word. The alphabet must have exactly one operator, unary.
pub fn preset_rules(
    kind: PresetKind,
    alphabet: &Alphabet,
    maxdeg: usize,
    lambda: LambdaMode,
) -> Result<RuleSet, GsbError> {
    let op = match alphabet.operators() {
        [op] if op.arity() == 1 => op.clone(),
        _ => return Err(GsbError::PresetAlphabet),
    };
    let mut out = RuleSet::new(alphabet, lambda);
    if maxdeg < 4 {
        return Ok(out);
    }
    let words = WordEnumerator::lyndon(alphabet).up_to(maxdeg - 3);
    let mut pairs: Vec<(OmegaWord, &OmegaWord, &OmegaWord)> = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for v in &words[..i] {
            if u.degree() + v.degree() + 2 <= maxdeg {
                let lead = OmegaWord::apply(op.clone(), vec![u.clone()])
                    .concat(&OmegaWord::apply(op.clone(), vec![v.clone()]));
                pairs.push((lead, u, v));
            }
        }
    }
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    for (lead, u, v) in pairs {
        let f = preset_rule(kind, &op, u, v);
        debug_assert_eq!(f.leading().map(|(w, _)| w.clone()).ok(), Some(lead));
        out.push_monic(f)?;
    }
    Ok(out)
}
