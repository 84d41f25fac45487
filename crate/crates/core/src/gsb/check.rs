use std::collections::BTreeSet;

use rayon::prelude::*;

use super::ambiguity::{
    all_ambiguities, ambiguities_of, assoc_composition, composition_expanded, Ambiguity,
};
use super::rules::RuleSet;
use super::GsbError;
use crate::lie_poly::{to_nlsw, AssocPoly, LiePoly};

/// The outcome of one composition: the polynomial and its normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionReport<P> {
    pub ambiguity: Ambiguity,
    pub composition: P,
    pub normal_form: P,
    pub trivial: bool,
}

pub type LieReport = CompositionReport<LiePoly>;
pub type AssocReport = CompositionReport<AssocPoly>;

/// Computes and reduces every Lie composition with `deg(w) ≤ maxdeg`.
/// Reports come in canonical order whatever the thread schedule.
pub fn check_gsb(rules: &RuleSet, maxdeg: usize) -> Result<Vec<LieReport>, GsbError> {
    rules.check_monic()?;
    all_ambiguities(rules, maxdeg)
        .into_par_iter()
        .map(|amb| {
            let comp = composition_expanded(rules, &amb)?;
            let composition = to_nlsw(&comp)?;
            let normal_form = rules.reduce_expanded(comp, None);
            let trivial = normal_form.is_zero();
            Ok(CompositionReport {
                ambiguity: amb,
                composition,
                normal_form,
                trivial,
            })
        })
        .collect()
}

/// The associative counterpart of `check_gsb` on the rule expansions.
pub fn assoc_check(rules: &RuleSet, maxdeg: usize) -> Result<Vec<AssocReport>, GsbError> {
    rules.check_monic()?;
    Ok(all_ambiguities(rules, maxdeg)
        .into_par_iter()
        .map(|amb| {
            let composition = assoc_composition(rules, &amb);
            let normal_form = rules.reduce_assoc(&composition);
            let trivial = normal_form.is_zero();
            CompositionReport {
                ambiguity: amb,
                composition,
                normal_form,
                trivial,
            }
        })
        .collect())
}

/// The result of `complete`.
#[derive(Debug, Clone)]
pub struct Completion {
    pub rules: RuleSet,
    /// Ids (in `rules`) of the rules adjoined from nontrivial compositions.
    pub added: Vec<usize>,
    /// Number of compositions examined.
    pub examined: usize,
}

#[derive(PartialEq, Eq)]
struct Queued(Ambiguity);

impl Ord for Queued {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.canonical_cmp(&other.0)
    }
}

impl PartialOrd for Queued {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Adjoins normalized nontrivial compositions, smallest `w` first, until
/// every composition with `deg(w) ≤ maxdeg` is trivial; then tail-reduces
/// each rule by the others. Leading words, and hence ids, are preserved.
pub fn complete(rules: &RuleSet, maxdeg: usize) -> Result<Completion, GsbError> {
    rules.check_monic()?;
    let mut work = rules.clone();
    let mut queue: BTreeSet<Queued> = all_ambiguities(&work, maxdeg)
        .into_iter()
        .map(Queued)
        .collect();
    let mut added = Vec::new();
    let mut examined = 0;
    while let Some(Queued(amb)) = queue.pop_first() {
        examined += 1;
        let comp = composition_expanded(&work, &amb)?;
        let nf = work.reduce_expanded(comp, None);
        if nf.is_zero() {
            continue;
        }
        let id = work.push_monic(nf)?;
        added.push(id);
        let mut fresh = ambiguities_of(&work, id, maxdeg, |_| true);
        for f in 0..id {
            fresh.extend(ambiguities_of(&work, f, maxdeg, |g| g == id));
        }
        queue.extend(fresh.into_iter().map(Queued));
    }
    Ok(Completion {
        rules: inter_reduce(&work)?,
        added,
        examined,
    })
}

/// Replaces each rule `s`, in id order, by `s̄ + reduce(s − s̄)` modulo the
/// current other rules. Leading words and the ideal are unchanged.
pub fn inter_reduce(rules: &RuleSet) -> Result<RuleSet, GsbError> {
    let mut out = rules.clone();
    for id in 0..out.len() {
        let poly = out.rule(id).poly().clone();
        let (lead, c) = poly.leading()?;
        let head = LiePoly::term(lead.clone(), c.clone());
        let tail = out.reduce_without(&poly.sub(&head), id);
        let reduced = head.add(&tail);
        if reduced != poly {
            out.replace(id, reduced);
        }
    }
    Ok(out)
}
