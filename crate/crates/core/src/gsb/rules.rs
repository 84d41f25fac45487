use std::collections::{HashMap, HashSet};
use std::sync::{Arc, RwLock};

use num_rational::BigRational;

use super::GsbError;
use crate::lie_poly::{eval_tree_assoc, expand_basis, AssocPoly, Coefficient, LiePoly};
use crate::lyndon::{is_alsw, relative_bracket};
use crate::omega_words::{occurrences, Alphabet, OmegaWord, Prime, StarWord};

/// How the parameter `λ` is treated by a rule set.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum LambdaMode {
    #[default]
    Symbolic,
    Specialized(BigRational),
}

/// A rewrite rule: a Lie polynomial with its cached leading word.
#[derive(Clone, Debug)]
pub struct Rule {
    id: usize,
    poly: LiePoly,
    lead: OmegaWord,
    expansion: Arc<AssocPoly>,
}

impl Rule {
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn poly(&self) -> &LiePoly {
        &self.poly
    }

    pub fn lead(&self) -> &OmegaWord {
        &self.lead
    }

    /// The associative expansion of `poly`.
    pub fn expansion(&self) -> &AssocPoly {
        &self.expansion
    }

    pub fn is_monic(&self) -> bool {
        self.poly.leading().is_ok_and(|(_, c)| c.is_one())
    }
}

/// One rewrite performed by a traced reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// The leading word of the remainder before this step.
    pub word: OmegaWord,
    pub coeff: Coefficient,
    /// `Some((rule id, π))` when `word = π|_{lead}` was rewritten,
    /// `None` when the term was moved to the normal form.
    pub rewrite: Option<(usize, StarWord)>,
}

/// An ordered set of rules over one alphabet, indexed by leading word.
#[derive(Debug)]
pub struct RuleSet {
    alphabet: Alphabet,
    lambda: LambdaMode,
    rules: Vec<Rule>,
    by_lead: HashMap<OmegaWord, Vec<usize>>,
    by_prefix: HashMap<OmegaWord, Vec<usize>>,
    lead_breadth: usize,
    lead_degrees: HashSet<usize>,
    snw_cache: RwLock<HashMap<(usize, StarWord), Arc<AssocPoly>>>,
}

impl Clone for RuleSet {
    fn clone(&self) -> Self {
        let mut out = RuleSet::new(&self.alphabet, self.lambda.clone());
        for r in &self.rules {
            out.insert(r.poly.clone());
        }
        out
    }
}

impl RuleSet {
    pub fn new(alphabet: &Alphabet, lambda: LambdaMode) -> Self {
        RuleSet {
            alphabet: alphabet.clone(),
            lambda,
            rules: Vec::new(),
            by_lead: HashMap::new(),
            by_prefix: HashMap::new(),
            lead_breadth: 0,
            lead_degrees: HashSet::new(),
            snw_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn lambda(&self) -> &LambdaMode {
        &self.lambda
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, id: usize) -> &Rule {
        &self.rules[id]
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Appends `poly` as is (after specializing `λ` if the set does) and
    /// returns its id. Monicity is checked by the verification routines.
    pub fn push(&mut self, poly: LiePoly) -> Result<usize, GsbError> {
        if poly.is_zero() {
            return Err(GsbError::ZeroRule);
        }
        let poly = match &self.lambda {
            LambdaMode::Symbolic => poly,
            LambdaMode::Specialized(r) => poly.specialize(r),
        };
        if poly.is_zero() {
            return Err(GsbError::ZeroRule);
        }
        Ok(self.insert(poly))
    }

    /// Appends `poly` divided by its leading coefficient.
    pub fn push_monic(&mut self, poly: LiePoly) -> Result<usize, GsbError> {
        let poly = match &self.lambda {
            LambdaMode::Symbolic => poly,
            LambdaMode::Specialized(r) => poly.specialize(r),
        };
        let poly = poly.normalize_monic()?;
        Ok(self.insert(poly))
    }

    fn insert(&mut self, poly: LiePoly) -> usize {
        let id = self.rules.len();
        let lead = poly.leading().expect("nonzero").0.clone();
        debug_assert!(is_alsw(&lead));
        let expansion = Arc::new(poly.expand());
        self.by_lead.entry(lead.clone()).or_default().push(id);
        let p = lead.primes();
        for k in 1..p.len() {
            let prefix = OmegaWord::from_primes(p[..k].to_vec());
            self.by_prefix.entry(prefix).or_default().push(id);
        }
        self.lead_breadth = self.lead_breadth.max(lead.breadth());
        self.lead_degrees.insert(lead.degree());
        self.rules.push(Rule {
            id,
            poly,
            lead,
            expansion,
        });
        id
    }

    /// Replaces the polynomial of rule `id` by one with the same leading
    /// word and coefficient.
    pub(crate) fn replace(&mut self, id: usize, poly: LiePoly) {
        assert_eq!(poly.leading().ok(), self.rules[id].poly.leading().ok());
        let rule = &mut self.rules[id];
        rule.expansion = Arc::new(poly.expand());
        rule.poly = poly;
        self.snw_cache.write().expect("cache poisoned").clear();
    }

    /// Ids of rules whose leading word is exactly `w`.
    pub fn rules_with_lead(&self, w: &OmegaWord) -> &[usize] {
        self.by_lead.get(w).map_or(&[], Vec::as_slice)
    }

    /// Ids of rules whose leading word has `w` as a proper top-level prefix.
    pub(crate) fn rules_with_prefix(&self, w: &OmegaWord) -> &[usize] {
        self.by_prefix.get(w).map_or(&[], Vec::as_slice)
    }

    /// A copy with `λ` replaced by `at` in every rule.
    pub fn specialize(&self, at: &BigRational) -> RuleSet {
        let mut out = RuleSet::new(&self.alphabet, LambdaMode::Specialized(at.clone()));
        for r in &self.rules {
            out.insert(r.poly.specialize(at));
        }
        out
    }

    /// Ids of all rules whose leading word occurs somewhere in `w`, sorted.
    pub fn applicable(&self, w: &OmegaWord) -> Vec<usize> {
        let mut ids = Vec::new();
        self.visit_subwords(w.primes(), &mut |sub| {
            if let Some(v) = self.by_lead.get(sub) {
                ids.extend_from_slice(v);
            }
            false
        });
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Whether some rule's leading word occurs in `w`.
    pub fn is_reducible(&self, w: &OmegaWord) -> bool {
        let mut found = false;
        self.visit_subwords(w.primes(), &mut |sub| {
            found = self.by_lead.contains_key(sub);
            found
        });
        found
    }

    /// The smallest applicable rule id with its leftmost-outermost occurrence.
    pub fn find_reducer(&self, w: &OmegaWord) -> Option<(usize, StarWord)> {
        self.find_reducer_skipping(w, None)
    }

    fn find_reducer_skipping(
        &self,
        w: &OmegaWord,
        skip: Option<usize>,
    ) -> Option<(usize, StarWord)> {
        let mut best: Option<usize> = None;
        self.visit_subwords(w.primes(), &mut |sub| {
            if let Some(m) = self
                .by_lead
                .get(sub)
                .and_then(|v| v.iter().find(|&&i| Some(i) != skip))
            {
                best = Some(best.map_or(*m, |b| b.min(*m)));
            }
            false
        });
        best.map(|id| {
            let pi = occurrences(w, &self.rules[id].lead)
                .into_iter()
                .next()
                .expect("indexed lead occurs");
            (id, pi)
        })
    }

    /// Calls `f` on every contiguous factor at every nesting level whose
    /// breadth and degree could match a leading word; stops when `f` is true.
    fn visit_subwords(&self, s: &[Prime], f: &mut dyn FnMut(&OmegaWord) -> bool) -> bool {
        if self.rules.is_empty() {
            return false;
        }
        for i in 0..s.len() {
            let mut deg = 0;
            for j in i..s.len().min(i + self.lead_breadth) {
                deg += s[j].degree();
                if self.lead_degrees.contains(&deg) {
                    let sub = OmegaWord::from_primes(s[i..=j].to_vec());
                    if f(&sub) {
                        return true;
                    }
                }
            }
            if let Prime::Op(app) = &s[i] {
                for arg in app.args() {
                    if self.visit_subwords(arg.primes(), f) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// The associative expansion of the special normal word `[π|_s]_{s̄}`,
    /// memoized per rule and context.
    pub fn special_normal_expansion(
        &self,
        pi: &StarWord,
        id: usize,
    ) -> Result<Arc<AssocPoly>, GsbError> {
        let key = (id, pi.clone());
        if let Some(p) = self.snw_cache.read().expect("cache poisoned").get(&key) {
            return Ok(p.clone());
        }
        let rule = &self.rules[id];
        let p = if pi.is_star() {
            rule.expansion.clone()
        } else {
            let marked = relative_bracket(pi, &rule.lead)?;
            Arc::new(eval_tree_assoc(marked.tree(), Some(&rule.expansion))?)
        };
        self.snw_cache
            .write()
            .expect("cache poisoned")
            .insert(key, p.clone());
        Ok(p)
    }

    /// Normal form of `h` modulo the rules.
    pub fn reduce(&self, h: &LiePoly) -> LiePoly {
        self.reduce_expanded(h.expand(), None)
    }

    /// Normal form of `h` modulo every rule except `skip`.
    pub fn reduce_without(&self, h: &LiePoly, skip: usize) -> LiePoly {
        self.reduce_core(h.expand(), None, Some(skip))
    }

    /// As `reduce`, also returning every step taken.
    pub fn reduce_traced(&self, h: &LiePoly) -> (LiePoly, Vec<Step>) {
        let mut steps = Vec::new();
        let out = self.reduce_expanded(h.expand(), Some(&mut steps));
        (out, steps)
    }

    /// Reduces a Lie element given in associative coordinates. Rewrites
    /// always use special normal words, so the remainder stays a Lie element.
    pub(crate) fn reduce_expanded(
        &self,
        rest: AssocPoly,
        trace: Option<&mut Vec<Step>>,
    ) -> LiePoly {
        self.reduce_core(rest, trace, None)
    }

    fn reduce_core(
        &self,
        mut rest: AssocPoly,
        mut trace: Option<&mut Vec<Step>>,
        skip: Option<usize>,
    ) -> LiePoly {
        let mut out = LiePoly::zero();
        while let Some((w, c)) = rest.leading() {
            let (w, c) = (w.clone(), c.clone());
            let neg = -&c;
            let rewrite = self.find_reducer_skipping(&w, skip);
            match &rewrite {
                Some((id, pi)) => {
                    let snw = self
                        .special_normal_expansion(pi, *id)
                        .expect("leading words of Lie elements are ALSW");
                    rest.add_scaled(&snw, &neg);
                }
                None => {
                    assert!(is_alsw(&w), "remainder `{w}` left the Lie algebra");
                    rest.add_scaled(&expand_basis(&w), &neg);
                    out.add_term(w.clone(), &c);
                }
            }
            if let Some(t) = trace.as_deref_mut() {
                t.push(Step {
                    word: w,
                    coeff: c,
                    rewrite,
                });
            }
        }
        out
    }

    /// Associative normal form of `q` modulo the expansions of the rules:
    /// any occurrence `π|_{s̄}` of the leading word is replaced using `π|_s`.
    pub fn reduce_assoc(&self, q: &AssocPoly) -> AssocPoly {
        let mut rest = q.clone();
        let mut out = AssocPoly::zero();
        while let Some((w, c)) = rest.leading() {
            let (w, c) = (w.clone(), c.clone());
            let neg = -&c;
            match self.find_reducer(&w) {
                Some((id, pi)) => {
                    let sub = AssocPoly::substitute(&pi, &self.rules[id].expansion);
                    rest.add_scaled(&sub, &neg);
                }
                None => {
                    rest.add_term(w.clone(), &neg);
                    out.add_term(w, &c);
                }
            }
        }
        out
    }

    pub(crate) fn check_monic(&self) -> Result<(), GsbError> {
        match self.rules.iter().find(|r| !r.is_monic()) {
            Some(r) => Err(GsbError::NonMonicRule(r.id)),
            None => Ok(()),
        }
    }
}

/// `[π|_s]_{s̄}` in NLSW coordinates.
pub fn special_normal_word(rules: &RuleSet, pi: &StarWord, id: usize) -> Result<LiePoly, GsbError> {
    let e = rules.special_normal_expansion(pi, id)?;
    Ok(crate::lie_poly::to_nlsw(&e)?)
}
