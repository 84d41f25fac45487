//! Ω-words over a generator set `X` and an operator set `Ω`.
//!
//! An associative Ω-word is a nonempty sequence of *primes*; a prime is a
//! letter or an operator applied to Ω-words. Words are immutable and share
//! structure through `Arc`, so cloning is cheap.

mod alphabet;
mod enumerate;
mod star;
mod word;

pub use alphabet::{Alphabet, AlphabetError, Generator, OperatorSymbol};
pub use enumerate::{words_of_degree, WordEnumerator};
pub use star::{occurrences, overlaps, Hole, Overlap, StarWord};
pub use word::{cmp_dl, cmp_lex, cmp_prime, OmegaWord, OpApp, Prime};
