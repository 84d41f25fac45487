use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_rational::BigRational;
use num_traits::One;

use super::assoc::AssocPoly;
use super::coeff::Coefficient;
use super::LieError;
use crate::lyndon::{is_alsw, standard_split, std_bracket, Tree};
use crate::omega_words::{OmegaWord, OperatorSymbol, Prime};

/// An element of `Lie(Ω;X)` in coordinates of the basis `{[u] : u ALSW}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LiePoly(BTreeMap<OmegaWord, Coefficient>);

static EXPANSIONS: LazyLock<RwLock<HashMap<OmegaWord, Arc<AssocPoly>>>> =
    LazyLock::new(Default::default);

/// The associative expansion of the basis element `[u]`, memoized.
/// `u` must be ALSW.
pub fn expand_basis(u: &OmegaWord) -> Arc<AssocPoly> {
    if let Some(p) = EXPANSIONS.read().expect("expansion cache poisoned").get(u) {
        return p.clone();
    }
    let p = Arc::new(compute_expansion(u));
    EXPANSIONS
        .write()
        .expect("expansion cache poisoned")
        .insert(u.clone(), p.clone());
    p
}

fn compute_expansion(u: &OmegaWord) -> AssocPoly {
    let s = u.primes();
    if s.len() == 1 {
        return match &s[0] {
            Prime::Letter(_) => AssocPoly::word(u.clone()),
            Prime::Op(app) => {
                let args: Vec<Arc<AssocPoly>> = app.args().iter().map(expand_basis).collect();
                let refs: Vec<&AssocPoly> = args.iter().map(Arc::as_ref).collect();
                AssocPoly::apply_op(app.op(), &refs)
            }
        };
    }
    let k = standard_split(s);
    let left = expand_basis(&OmegaWord::from_primes(s[..k].to_vec()));
    let right = expand_basis(&OmegaWord::from_primes(s[k..].to_vec()));
    left.commutator(&right)
}

/// Drops all memoized basis expansions.
pub fn clear_expansion_cache() {
    EXPANSIONS
        .write()
        .expect("expansion cache poisoned")
        .clear();
}

/// Evaluates a bracket tree in `k⟨Ω;X⟩` with `Slot` bound to `slot`.
pub fn eval_tree_assoc(tree: &Tree, slot: Option<&AssocPoly>) -> Result<AssocPoly, LieError> {
    Ok(match tree {
        Tree::Leaf(g) => AssocPoly::word(OmegaWord::letter(g.clone())),
        Tree::Slot => slot.ok_or(LieError::UnfilledSlot)?.clone(),
        Tree::Bracket(l, r) => {
            let l = eval_tree_assoc(l, slot)?;
            let r = eval_tree_assoc(r, slot)?;
            l.commutator(&r)
        }
        Tree::Op(op, args) => {
            check_arity(op, args.len())?;
            let vals = args
                .iter()
                .map(|a| eval_tree_assoc(a, slot))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&AssocPoly> = vals.iter().collect();
            AssocPoly::apply_op(op, &refs)
        }
    })
}

fn check_arity(op: &OperatorSymbol, found: usize) -> Result<(), LieError> {
    if op.arity() != found {
        return Err(LieError::ArityMismatch {
            op: op.name().to_string(),
            expected: op.arity(),
            found,
        });
    }
    Ok(())
}

/// Rewrites an associative polynomial in the basis `{[u]}` by repeatedly
/// peeling off the leading term. Fails if a leading word is not ALSW,
/// i.e. the input is not a Lie element.
pub fn to_nlsw(q: &AssocPoly) -> Result<LiePoly, LieError> {
    let mut rest = q.clone();
    let mut out = LiePoly::zero();
    while let Some((w, c)) = rest.leading() {
        let (w, c) = (w.clone(), c.clone());
        if !is_alsw(&w) {
            return Err(LieError::NotLieElement(w));
        }
        rest.add_scaled(&expand_basis(&w), &-&c);
        out.add_term(w, &c);
    }
    Ok(out)
}

impl LiePoly {
    pub fn zero() -> Self {
        LiePoly(BTreeMap::new())
    }

    /// `1·[u]`. Panics if `u` is not ALSW.
    pub fn basis(u: OmegaWord) -> Self {
        Self::term(u, Coefficient::one())
    }

    /// `c·[u]`. Panics if `u` is not ALSW.
    pub fn term(u: OmegaWord, c: Coefficient) -> Self {
        assert!(is_alsw(&u), "`{u}` is not ALSW");
        let mut p = Self::zero();
        p.add_term(u, &c);
        p
    }

    /// `[x]` for a generator.
    pub fn generator(g: crate::omega_words::Generator) -> Self {
        Self::basis(OmegaWord::letter(g))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Terms in `>_Dl`-descending order of their keys.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&OmegaWord, &Coefficient)> {
        self.0.iter().rev()
    }

    pub fn coefficient(&self, u: &OmegaWord) -> Option<&Coefficient> {
        self.0.get(u)
    }

    /// Keys are assumed ALSW; callers outside this module go through
    /// `term`, `to_nlsw` or the arithmetic below.
    pub(crate) fn add_term(&mut self, u: OmegaWord, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(u) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LiePoly, c: &Coefficient) {
        for (u, d) in &other.0 {
            self.add_term(u.clone(), &(d * c));
        }
    }

    pub fn add(&self, other: &LiePoly) -> LiePoly {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::one());
        out
    }

    pub fn sub(&self, other: &LiePoly) -> LiePoly {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Coefficient) -> LiePoly {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> LiePoly {
        self.scale(&Coefficient::from_int(-1))
    }

    /// The associative expansion `Σ αᵢ·[uᵢ]` in `k⟨Ω;X⟩`.
    pub fn expand(&self) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (u, c) in &self.0 {
            out.add_scaled(&expand_basis(u), c);
        }
        out
    }

    /// `(p q) = pq − qp`, rewritten in the basis.
    pub fn bracket(&self, other: &LiePoly) -> LiePoly {
        let comm = self.expand().commutator(&other.expand());
        to_nlsw(&comm).expect("the commutator of Lie elements is a Lie element")
    }

    /// `op(args…)`, extended multilinearly; each `op([u₁],…,[u_m])` is the
    /// basis element keyed by `op(u₁,…,u_m)`.
    pub fn apply_op(op: &OperatorSymbol, args: &[&LiePoly]) -> Result<LiePoly, LieError> {
        check_arity(op, args.len())?;
        let mut out = LiePoly::zero();
        let mut words = Vec::with_capacity(args.len());
        fn go(
            op: &OperatorSymbol,
            args: &[&LiePoly],
            words: &mut Vec<OmegaWord>,
            c: Coefficient,
            out: &mut LiePoly,
        ) {
            let i = words.len();
            if i == args.len() {
                out.add_term(OmegaWord::apply(op.clone(), words.clone()), &c);
                return;
            }
            for (u, d) in &args[i].0 {
                words.push(u.clone());
                go(op, args, words, &c * d, out);
                words.pop();
            }
        }
        go(op, args, &mut words, Coefficient::one(), &mut out);
        Ok(out)
    }

    /// Evaluates an arbitrary bracket tree bottom-up with `bracket` and
    /// `apply_op`.
    pub fn from_tree(tree: &Tree) -> Result<LiePoly, LieError> {
        Self::eval_tree(tree, None)
    }

    /// As `from_tree`, binding `Slot` to `slot`.
    pub fn eval_tree(tree: &Tree, slot: Option<&LiePoly>) -> Result<LiePoly, LieError> {
        Ok(match tree {
            Tree::Leaf(g) => LiePoly::generator(g.clone()),
            Tree::Slot => slot.ok_or(LieError::UnfilledSlot)?.clone(),
            Tree::Bracket(l, r) => {
                let l = Self::eval_tree(l, slot)?;
                let r = Self::eval_tree(r, slot)?;
                l.bracket(&r)
            }
            Tree::Op(op, args) => {
                check_arity(op, args.len())?;
                let vals = args
                    .iter()
                    .map(|a| Self::eval_tree(a, slot))
                    .collect::<Result<Vec<_>, _>>()?;
                let refs: Vec<&LiePoly> = vals.iter().collect();
                Self::apply_op(op, &refs)?
            }
        })
    }

    /// The `>_Dl`-greatest key and its coefficient.
    pub fn leading(&self) -> Result<(&OmegaWord, &Coefficient), LieError> {
        self.0.last_key_value().ok_or(LieError::ZeroPolynomial)
    }

    /// Divides by the leading coefficient, which must be a nonzero rational.
    pub fn normalize_monic(&self) -> Result<LiePoly, LieError> {
        let (_, c) = self.leading()?;
        let r = c
            .as_constant()
            .ok_or_else(|| LieError::NonConstantLeadingCoefficient(c.clone()))?;
        if r.is_one() {
            return Ok(self.clone());
        }
        let inv = BigRational::one() / r;
        let mut out = LiePoly::zero();
        for (u, d) in &self.0 {
            out.add_term(u.clone(), &d.scale(&inv));
        }
        Ok(out)
    }

    /// Replaces `λ` by a rational value throughout.
    pub fn specialize(&self, at: &BigRational) -> LiePoly {
        let mut out = LiePoly::zero();
        for (u, c) in &self.0 {
            out.add_term(u.clone(), &c.specialize(at));
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.0.keys().map(OmegaWord::degree).max().unwrap_or(0)
    }

    /// The standard-bracketing tree of each key, with its coefficient.
    pub fn trees(&self) -> impl Iterator<Item = (Tree, &Coefficient)> {
        self.terms()
            .map(|(u, c)| (std_bracket(u).expect("LiePoly keys are ALSW"), c))
    }

    pub fn is_constant_coefficients(&self) -> bool {
        self.0.values().all(|c| c.as_constant().is_some())
    }
}

impl fmt::Display for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        super::write_terms(f, self.trees().map(|(t, c)| (t.to_string(), c)))
    }
}
