use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::coeff::Coefficient;
use crate::omega_words::{OmegaWord, OperatorSymbol, StarWord};

/// An element of the free associative Ω-algebra `k⟨Ω;X⟩`: a finite map
/// from Ω-words to nonzero coefficients, ordered by `<_Dl`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AssocPoly(BTreeMap<OmegaWord, Coefficient>);

impl AssocPoly {
    pub fn zero() -> Self {
        AssocPoly(BTreeMap::new())
    }

    pub fn monomial(w: OmegaWord, c: Coefficient) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &c);
        p
    }

    pub fn word(w: OmegaWord) -> Self {
        Self::monomial(w, Coefficient::one())
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

    pub fn coefficient(&self, w: &OmegaWord) -> Option<&Coefficient> {
        self.0.get(w)
    }

    /// Terms in `>_Dl`-descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&OmegaWord, &Coefficient)> {
        self.0.iter().rev()
    }

    /// The `>_Dl`-greatest word and its coefficient.
    pub fn leading(&self) -> Option<(&OmegaWord, &Coefficient)> {
        self.0.last_key_value()
    }

    pub fn add_term(&mut self, w: OmegaWord, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(w) {
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

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &AssocPoly, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (w, d) in &other.0 {
            if unit {
                self.add_term(w.clone(), d);
            } else {
                self.add_term(w.clone(), &(d * c));
            }
        }
    }

    pub fn add(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::one());
        out
    }

    pub fn sub(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Coefficient) -> AssocPoly {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = Self::zero();
        for (u, a) in &self.0 {
            for (v, b) in &other.0 {
                out.add_term(u.concat(v), &(a * b));
            }
        }
        out
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = self.mul(other);
        out.add_scaled(&other.mul(self), &Coefficient::from_int(-1));
        out
    }

    /// `word·self`.
    pub fn left_mul_word(&self, w: &OmegaWord) -> AssocPoly {
        AssocPoly(
            self.0
                .iter()
                .map(|(u, c)| (w.concat(u), c.clone()))
                .collect(),
        )
    }

    /// `self·word`.
    pub fn right_mul_word(&self, w: &OmegaWord) -> AssocPoly {
        AssocPoly(
            self.0
                .iter()
                .map(|(u, c)| (u.concat(w), c.clone()))
                .collect(),
        )
    }

    /// `op(args…)`, extended multilinearly. Panics on an arity mismatch.
    pub fn apply_op(op: &OperatorSymbol, args: &[&AssocPoly]) -> AssocPoly {
        assert_eq!(args.len(), op.arity());
        let mut out = Self::zero();
        let mut words = Vec::with_capacity(args.len());
        multilinear(op, args, &mut words, Coefficient::one(), &mut out);
        out
    }

    /// `π|_p`, extended linearly in `p`.
    pub fn substitute(pi: &StarWord, p: &AssocPoly) -> AssocPoly {
        let mut out = Self::zero();
        for (w, c) in &p.0 {
            out.add_term(pi.substitute(w), c);
        }
        out
    }

    pub fn specialize(&self, at: &BigRational) -> AssocPoly {
        let mut out = Self::zero();
        for (w, c) in &self.0 {
            out.add_term(w.clone(), &c.specialize(at));
        }
        out
    }
}

fn multilinear(
    op: &OperatorSymbol,
    args: &[&AssocPoly],
    words: &mut Vec<OmegaWord>,
    coeff: Coefficient,
    out: &mut AssocPoly,
) {
    let i = words.len();
    if i == args.len() {
        out.add_term(OmegaWord::apply(op.clone(), words.clone()), &coeff);
        return;
    }
    for (w, c) in &args[i].0 {
        words.push(w.clone());
        multilinear(op, args, words, &coeff * c, out);
        words.pop();
    }
}

impl fmt::Display for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        super::write_terms(f, self.terms().map(|(w, c)| (w.to_string(), c)))
    }
}
