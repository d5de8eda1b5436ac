//! Error types shared across the crate.
//!
//! Errors fall in two classes: [`ParseError`] for text that does not match a
//! grammar, and [`DomainError`] for well-formed values outside the domain of
//! an operation.

use thiserror::Error;

/// Text input that does not match the expected grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {what} from {input:?}: {reason}")]
pub struct ParseError {
    pub what: &'static str,
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        ParseError {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// A syntactically valid value passed to an operation that does not accept it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("tree is not in family {family}: {report}")]
    InvalidTree { family: String, report: String },
    #[error("graft needs {expected} angle labels, got {got}")]
    AngleCount { expected: usize, got: usize },
    #[error("graft subtree {index} has root label 0")]
    ZeroRootSubtree { index: usize },
    #[error("lower bar is undefined on a tree with root label 0")]
    ZeroRootBar,
    #[error("the bare leaf is not an element of the non-augmented algebra")]
    AugmentedInput,
    #[error("family mismatch: {0} vs {1}")]
    FamilyMismatch(String, String),
    #[error("no quotient morphism from family {from} to family {to}")]
    NotComparable { from: String, to: String },
    #[error("path is outside the required class: {0}")]
    PathClass(String),
    #[error("{0}")]
    Other(String),
}

/// Either error class, for entry points that parse and then compute.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] DomainError),
}
