//! Command-line front end: expression syntax, evaluation and report emission.

pub mod app;
pub mod eval;
pub mod expr;

use thiserror::Error;
use zform::liealg::AlgebraKind;

/// Errors surfaced to the command line.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("type error{}: {message}", at(*offset))]
    Type { offset: Option<usize>, message: String },
    #[error("unknown generator `{name}`{}{}", at(*offset), algebra.map(|a| format!(" for {a}")).unwrap_or_default())]
    UnknownGenerator {
        offset: Option<usize>,
        name: String,
        algebra: Option<AlgebraKind>,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] zform::Error),
}

fn at(offset: Option<usize>) -> String {
    offset.map(|o| format!(" at byte {o}")).unwrap_or_default()
}
