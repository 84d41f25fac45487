//! Exact computer algebra for free Lie Ω-algebras: Lyndon–Shirshov Ω-words,
//! Shirshov bracketing, and Gröbner–Shirshov bases for operator identities
//! of Rota–Baxter and Nijenhuis type.

pub mod cli;
pub mod gsb;
pub mod lie_poly;
pub mod lyndon;
pub mod omega_words;
