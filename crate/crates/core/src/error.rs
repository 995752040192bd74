use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    UnboundVariable,
    VarianceViolation,
    ClassifierMismatch,
    ArityMismatch,
    IllFormedDescription,
    IndexMismatch,
    ContextMismatch,
    EndpointMismatch,
    CannotInfer,
    UnknownName,
}

impl ErrorKind {
    pub fn code(self) -> &'static str {
        match self {
            ErrorKind::UnboundVariable => "UnboundVariable",
            ErrorKind::VarianceViolation => "VarianceViolation",
            ErrorKind::ClassifierMismatch => "ClassifierMismatch",
            ErrorKind::ArityMismatch => "ArityMismatch",
            ErrorKind::IllFormedDescription => "IllFormedDescription",
            ErrorKind::IndexMismatch => "IndexMismatch",
            ErrorKind::ContextMismatch => "ContextMismatch",
            ErrorKind::EndpointMismatch => "EndpointMismatch",
            ErrorKind::CannotInfer => "CannotInfer",
            ErrorKind::UnknownName => "UnknownName",
        }
    }
}

/// A kernel diagnostic. `expected` and `got` are printed classifiers or
/// short descriptions.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct Error {
    pub kind: ErrorKind,
    pub expected: String,
    pub got: String,
}

impl Error {
    pub fn new(kind: ErrorKind, expected: impl Into<String>, got: impl Into<String>) -> Error {
        Error { kind, expected: expected.into(), got: got.into() }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} expected {} got {}", self.kind.code(), self.expected, self.got)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
