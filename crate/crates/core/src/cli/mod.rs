//! Text grammar and the `lieomega` command line.

mod parse;
mod run;

pub use parse::{parse_poly, parse_tree, parse_word, ParseError};
pub use run::run;
