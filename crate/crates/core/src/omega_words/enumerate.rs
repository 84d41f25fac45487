use super::alphabet::Alphabet;
use super::word::{cmp_prime, OmegaWord, Prime};
use crate::lyndon::is_lyndon_sequence;

/// Degree-by-degree enumeration of Ω-words, memoized.
///
/// In Lyndon mode only ALSW words are produced: operator arguments are
/// ALSW and the top-level prime sequence is Lyndon.
#[derive(Debug, Clone)]
pub struct WordEnumerator {
    alphabet: Alphabet,
    lyndon: bool,
    primes: Vec<Vec<Prime>>,
    words: Vec<Vec<OmegaWord>>,
}

impl WordEnumerator {
    pub fn all(alphabet: &Alphabet) -> Self {
        Self::with_mode(alphabet, false)
    }

    pub fn lyndon(alphabet: &Alphabet) -> Self {
        Self::with_mode(alphabet, true)
    }

    fn with_mode(alphabet: &Alphabet, lyndon: bool) -> Self {
        WordEnumerator {
            alphabet: alphabet.clone(),
            lyndon,
            primes: vec![Vec::new()],
            words: vec![Vec::new()],
        }
    }

    /// Words of degree exactly `n`, ascending under `<_Dl`.
    pub fn words(&mut self, n: usize) -> &[OmegaWord] {
        self.fill(n);
        &self.words[n]
    }

    /// Words of every degree in `1..=n`, ascending under `<_Dl`.
    pub fn up_to(&mut self, n: usize) -> Vec<OmegaWord> {
        self.fill(n);
        self.words[1..=n].iter().flatten().cloned().collect()
    }

    /// Primes of degree exactly `d`.
    pub fn primes(&mut self, d: usize) -> &[Prime] {
        self.fill(d);
        &self.primes[d]
    }

    fn fill(&mut self, n: usize) {
        while self.words.len() <= n {
            let d = self.words.len();
            let primes = self.build_primes(d);
            self.primes.push(primes);
            let mut words = self.build_words(d);
            words.sort();
            self.words.push(words);
        }
    }

    fn build_primes(&self, d: usize) -> Vec<Prime> {
        let mut out = Vec::new();
        if d == 1 {
            out.extend(
                self.alphabet
                    .generators()
                    .iter()
                    .cloned()
                    .map(Prime::Letter),
            );
        }
        for op in self.alphabet.operators() {
            if d < 1 + op.arity() {
                continue;
            }
            let mut args = Vec::new();
            self.arg_tuples(op.arity(), d - 1, &mut args, &mut out, op);
        }
        out
    }

    fn arg_tuples(
        &self,
        remaining: usize,
        budget: usize,
        acc: &mut Vec<OmegaWord>,
        out: &mut Vec<Prime>,
        op: &super::alphabet::OperatorSymbol,
    ) {
        if remaining == 0 {
            if budget == 0 {
                out.push(Prime::op(op.clone(), acc.clone()));
            }
            return;
        }
        // leave at least one degree for each later argument
        for deg in 1..=budget.saturating_sub(remaining - 1) {
            for w in &self.words[deg] {
                acc.push(w.clone());
                self.arg_tuples(remaining - 1, budget - deg, acc, out, op);
                acc.pop();
            }
        }
    }

    fn build_words(&self, n: usize) -> Vec<OmegaWord> {
        let mut out = Vec::new();
        let mut seq = Vec::new();
        self.sequences(n, &mut seq, &mut out);
        out
    }

    fn sequences(&self, budget: usize, seq: &mut Vec<Prime>, out: &mut Vec<OmegaWord>) {
        if budget == 0 {
            if !self.lyndon || is_lyndon_sequence(seq) {
                out.push(OmegaWord::from_primes(seq.clone()));
            }
            return;
        }
        for d in 1..=budget {
            for p in &self.primes[d] {
                // a Lyndon sequence starts with one of its ≻-greatest primes
                if self.lyndon && !seq.is_empty() && cmp_prime(p, &seq[0]).is_gt() {
                    continue;
                }
                seq.push(p.clone());
                self.sequences(budget - d, seq, out);
                seq.pop();
            }
        }
    }
}

/// All Ω-words of degree exactly `n`.
pub fn words_of_degree(alphabet: &Alphabet, n: usize) -> Vec<OmegaWord> {
    WordEnumerator::all(alphabet).words(n).to_vec()
}
