//! Gröbner–Shirshov machinery in `Lie(Ω;X)`: special normal words,
//! ambiguities and compositions, reduction, verification, completion,
//! linear bases and the operator-identity presets.

mod ambiguity;
mod basis;
mod check;
mod presets;
mod rules;

use thiserror::Error;

pub use ambiguity::{
    all_ambiguities, ambiguities, assoc_composition, composition, Ambiguity, AmbiguityKind,
};
pub use basis::{
    dim_oracle, dim_oracle_with, irr_counts, irr_enumerate, random_lambdas, ORACLE_SEED,
};
pub use check::{
    assoc_check, check_gsb, complete, inter_reduce, AssocReport, Completion, CompositionReport,
    LieReport,
};
pub use presets::{preset_rule, preset_rules, PresetKind};
pub use rules::{special_normal_word, LambdaMode, Rule, RuleSet, Step};

use crate::lie_poly::LieError;
use crate::lyndon::LyndonError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GsbError {
    #[error("rule {0} is not monic")]
    NonMonicRule(usize),
    #[error("the zero polynomial cannot be a rule")]
    ZeroRule,
    #[error("presets need exactly one operator, of arity 1")]
    PresetAlphabet,
    #[error(
        "dimension counts depend on λ: {dims_a:?} at λ = {lambda_a}, {dims_b:?} at λ = {lambda_b}"
    )]
    OracleDisagreement {
        lambda_a: String,
        lambda_b: String,
        dims_a: Vec<usize>,
        dims_b: Vec<usize>,
    },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Lyndon(#[from] LyndonError),
}

#[cfg(test)]
mod tests;
