//! Exact coefficients in `ℚ[λ]`, associative Ω-polynomials, and Lie
//! Ω-polynomials in the basis of non-associative Lyndon–Shirshov Ω-words.

mod assoc;
mod coeff;
mod lie;

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use assoc::AssocPoly;
pub use coeff::{format_rational, Coefficient};
pub use lie::{clear_expansion_cache, eval_tree_assoc, expand_basis, to_nlsw, LiePoly};

use crate::omega_words::OmegaWord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("not a Lie element: leading word `{0}` is not Lyndon–Shirshov")]
    NotLieElement(OmegaWord),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("leading coefficient `{0}` is not a unit of ℚ[λ]")]
    NonConstantLeadingCoefficient(Coefficient),
    #[error("operator `{op}` expects {expected} argument(s), found {found}")]
    ArityMismatch {
        op: String,
        expected: usize,
        found: usize,
    },
    #[error("bracket tree has an unfilled slot")]
    UnfilledSlot,
}

/// Writes `Σ c·body` one `λ`-monomial at a time, in the term grammar the
/// CLI parses back: `3/2*l^2*body`, `-l*body`, `body`.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Coefficient)>,
) -> fmt::Result {
    let mut first = true;
    for (body, c) in terms {
        for (k, r) in c.coeffs().iter().enumerate().rev() {
            if r.is_zero() {
                continue;
            }
            match (first, r.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let a = r.abs();
            if !a.is_one() {
                write!(f, "{}*", format_rational(&a))?;
            }
            match k {
                0 => {}
                1 => f.write_str("l*")?,
                _ => write!(f, "l^{k}*")?,
            }
            f.write_str(&body)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
