use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rules::{LambdaMode, RuleSet};
use super::GsbError;
use crate::lie_poly::LiePoly;
use crate::omega_words::{OmegaWord, WordEnumerator};

/// `Irr(S)` up to `maxdeg`: the ALSW words with no occurrence of any
/// leading word. Entry `n - 1` holds the words of degree `n`, ascending.
pub fn irr_enumerate(rules: &RuleSet, maxdeg: usize) -> Vec<Vec<OmegaWord>> {
    let mut words = WordEnumerator::lyndon(rules.alphabet());
    (1..=maxdeg)
        .map(|n| {
            words
                .words(n)
                .iter()
                .filter(|w| !rules.is_reducible(w))
                .cloned()
                .collect()
        })
        .collect()
}

/// Per-degree sizes of `irr_enumerate`.
pub fn irr_counts(rules: &RuleSet, maxdeg: usize) -> Vec<usize> {
    irr_enumerate(rules, maxdeg).iter().map(Vec::len).collect()
}

/// Seed used by `dim_oracle` to draw values of `λ`.
pub const ORACLE_SEED: u64 = 0x5eed_1a4b;

/// Dimension count by linear algebra, independent of the rewriting
/// machinery: entry `n - 1` is the number of ALSW words of degree `n`
/// minus the number of degree-`n` pivots of an echelon basis of the
/// ideal generated by the rules, truncated at `maxdeg`.
///
/// The ideal is spanned by closing the rules under brackets with basis
/// elements and operator applications, keeping support degree at most
/// `maxdeg`. `λ` is replaced by `specializations` random rationals whose
/// answers must agree.
pub fn dim_oracle(rules: &RuleSet, maxdeg: usize) -> Result<Vec<usize>, GsbError> {
    dim_oracle_with(rules, maxdeg, &random_lambdas(3, ORACLE_SEED))
}

/// `count` distinct nonzero rationals drawn from a seeded generator.
pub fn random_lambdas(count: usize, seed: u64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    while out.len() < count {
        let n: i64 = rng.gen_range(-97..=97);
        let d: i64 = rng.gen_range(1..=31);
        let r = BigRational::new(BigInt::from(n), BigInt::from(d));
        if n != 0 && !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// `dim_oracle` at the given values of `λ`.
pub fn dim_oracle_with(
    rules: &RuleSet,
    maxdeg: usize,
    lambdas: &[BigRational],
) -> Result<Vec<usize>, GsbError> {
    assert!(!lambdas.is_empty());
    let mut answers: Vec<Vec<usize>> = Vec::new();
    for at in lambdas {
        let s = match rules.lambda() {
            LambdaMode::Symbolic => rules.specialize(at),
            LambdaMode::Specialized(_) => rules.clone(),
        };
        answers.push(quotient_dims(&s, maxdeg));
    }
    if let Some(i) = answers.iter().position(|a| a != &answers[0]) {
        return Err(GsbError::OracleDisagreement {
            lambda_a: lambdas[0].to_string(),
            lambda_b: lambdas[i].to_string(),
            dims_a: answers[0].clone(),
            dims_b: answers[i].clone(),
        });
    }
    Ok(answers.swap_remove(0))
}

#[derive(Default)]
struct Echelon {
    pivots: HashMap<OmegaWord, LiePoly>,
}

impl Echelon {
    /// Adds `v` to the span; returns the new basis vector if independent.
    fn insert(&mut self, mut v: LiePoly) -> Option<LiePoly> {
        loop {
            let (w, c) = match v.leading() {
                Ok((w, c)) => (w.clone(), c.clone()),
                Err(_) => return None,
            };
            match self.pivots.get(&w) {
                Some(p) => v.add_scaled(p, &-&c),
                None => {
                    let v = v.normalize_monic().expect("rational coefficients");
                    self.pivots.insert(w, v.clone());
                    return Some(v);
                }
            }
        }
    }
}

fn quotient_dims(rules: &RuleSet, maxdeg: usize) -> Vec<usize> {
    let alphabet = rules.alphabet();
    let mut words = WordEnumerator::lyndon(alphabet);
    let by_degree: Vec<Vec<OmegaWord>> = (0..=maxdeg).map(|n| words.words(n).to_vec()).collect();

    let mut ech = Echelon::default();
    let mut queue: Vec<LiePoly> = Vec::new();
    for r in rules.rules() {
        if r.poly().max_degree() <= maxdeg {
            queue.extend(ech.insert(r.poly().clone()));
        }
    }
    while let Some(e) = queue.pop() {
        let room = maxdeg - e.max_degree();
        for words in &by_degree[1..=room] {
            for u in words {
                queue.extend(ech.insert(e.bracket(&LiePoly::basis(u.clone()))));
            }
        }
        for op in alphabet.operators() {
            if room < op.arity() {
                continue;
            }
            for slot in 0..op.arity() {
                for others in tuples(&by_degree, op.arity() - 1, room - 1) {
                    let mut args: Vec<LiePoly> = others.into_iter().map(LiePoly::basis).collect();
                    args.insert(slot, e.clone());
                    let refs: Vec<&LiePoly> = args.iter().collect();
                    let v = LiePoly::apply_op(op, &refs).expect("arity checked");
                    queue.extend(ech.insert(v));
                }
            }
        }
    }

    let mut dims: Vec<usize> = (1..=maxdeg).map(|n| by_degree[n].len()).collect();
    for w in ech.pivots.keys() {
        dims[w.degree() - 1] -= 1;
    }
    dims
}

/// All `k`-tuples of basis words with total degree at most `budget`.
fn tuples(by_degree: &[Vec<OmegaWord>], k: usize, budget: usize) -> Vec<Vec<OmegaWord>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for d in 1..=budget.min(by_degree.len() - 1) {
        for u in &by_degree[d] {
            for mut rest in tuples(by_degree, k - 1, budget - d) {
                rest.insert(0, u.clone());
                out.push(rest);
            }
        }
    }
    out
}
