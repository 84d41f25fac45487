use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// A letter of `X`. Rank 0 is the greatest generator under `>_X`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    name: Arc<str>,
    rank: u32,
}

impl Generator {
    pub fn new(name: &str, rank: u32) -> Self {
        Generator {
            name: name.into(),
            rank,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// An operator of `Ω` with a fixed arity. Rank 0 is the greatest under `>_Ω`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OperatorSymbol {
    name: Arc<str>,
    arity: usize,
    rank: u32,
}

impl OperatorSymbol {
    pub fn new(name: &str, arity: usize, rank: u32) -> Self {
        assert!(arity >= 1, "operator arity must be at least 1");
        OperatorSymbol {
            name: name.into(),
            arity,
            rank,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

impl fmt::Display for OperatorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("duplicate symbol name `{0}`")]
    DuplicateName(String),
    #[error("invalid symbol name `{0}`")]
    InvalidName(String),
    #[error("operator `{0}` must have arity at least 1")]
    ZeroArity(String),
}

/// Generators and operators, each listed in descending order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    generators: Vec<Generator>,
    operators: Vec<OperatorSymbol>,
}

/// Names that collide with the text grammar.
const RESERVED: &[&str] = &["l"];

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_') && !RESERVED.contains(&name)
}

impl Alphabet {
    /// `generators` and `operators` are given greatest first.
    pub fn new(generators: &[&str], operators: &[(&str, usize)]) -> Result<Self, AlphabetError> {
        if generators.is_empty() {
            return Err(AlphabetError::NoGenerators);
        }
        let mut seen = HashSet::new();
        let names = generators
            .iter()
            .copied()
            .chain(operators.iter().map(|(n, _)| *n));
        for name in names {
            if !valid_name(name) {
                return Err(AlphabetError::InvalidName(name.to_string()));
            }
            if !seen.insert(name) {
                return Err(AlphabetError::DuplicateName(name.to_string()));
            }
        }
        if let Some((name, _)) = operators.iter().find(|(_, a)| *a == 0) {
            return Err(AlphabetError::ZeroArity(name.to_string()));
        }
        Ok(Alphabet {
            generators: generators
                .iter()
                .enumerate()
                .map(|(i, n)| Generator::new(n, i as u32))
                .collect(),
            operators: operators
                .iter()
                .enumerate()
                .map(|(i, (n, a))| OperatorSymbol::new(n, *a, i as u32))
                .collect(),
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn operators(&self) -> &[OperatorSymbol] {
        &self.operators
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name() == name)
    }

    pub fn operator(&self, name: &str) -> Option<&OperatorSymbol> {
        self.operators.iter().find(|o| o.name() == name)
    }
}
