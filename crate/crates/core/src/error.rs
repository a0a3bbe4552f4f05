use std::fmt;

use crate::sigdef::Sort;

/// Position of a syntax error, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("DuplicateName {0}")]
    DuplicateName(String),
    #[error("MalformedSort in {schema}: {sort}")]
    MalformedSort { schema: String, sort: String },
    #[error("TypeSystemMismatch: signatures are declared over different type systems")]
    TypeSystemMismatch,
    #[error("ParamArityMismatch for {schema}: expected {expected} parameters, found {found}")]
    ParamArityMismatch {
        schema: String,
        expected: usize,
        found: usize,
    },
    #[error("ParamKindMismatch for {schema}: parameter {index} expects a {expected}")]
    ParamKindMismatch {
        schema: String,
        index: usize,
        expected: &'static str,
    },
    #[error("UnknownBuiltin {0}")]
    UnknownBuiltin(String),
    #[error("SyntaxError at {location}: {message}")]
    SyntaxError { location: Location, message: String },
    #[error("ScopeError: variable {index} is out of scope in a context of length {len}")]
    ScopeError { index: usize, len: usize },
    #[error("UnknownOp {0}")]
    UnknownOp(String),
    #[error("ArityMismatch for {schema}: expected {expected} arguments, found {found}")]
    ArityMismatch {
        schema: String,
        expected: usize,
        found: usize,
    },
    #[error("SortMismatch at argument {index}: expected {expected}, found {found}")]
    SortMismatch {
        index: usize,
        expected: Sort,
        found: Sort,
    },
    #[error("IllFormed at path {path:?}: {cause}")]
    IllFormed { path: Vec<usize>, cause: Box<Error> },
    #[error("Unbounded: schema {0} admits infinitely many instantiations; give a bound")]
    Unbounded(String),
    #[error("ContextMismatch: {0}")]
    ContextMismatch(String),
    #[error("TypedSignature: the {0} model needs an untyped signature")]
    TypedSignature(String),
    #[error("BindingLabel {0}: operator labels take no parameters and bind nothing")]
    BindingLabel(String),
    #[error("UnknownLabel {0}")]
    UnknownLabel(String),
    #[error("MissingClause {0}")]
    MissingClause(String),
    #[error("OffsetMismatch in clause {schema}: placeholder {placeholder} used under the wrong binders")]
    OffsetMismatch { schema: String, placeholder: usize },
    #[error("Model error at path {path:?}: {message}")]
    Model { path: Vec<usize>, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::SyntaxError {
            location: Location { line, column },
            message: message.into(),
        }
    }
}
