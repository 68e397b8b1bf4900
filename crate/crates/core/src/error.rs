use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::parser::ParseError;

/// A gamma-function pole hit by an argument that rounds to a non-positive integer.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleReport {
    /// The non-positive integer the argument was snapped to.
    pub location: f64,
    /// Which operation ran into the pole.
    pub context: &'static str,
}

impl fmt::Display for PoleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: gamma pole at {}", self.context, self.location)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    Pole(PoleReport),
    /// A precondition on a real argument was violated.
    Domain {
        operation: &'static str,
        message: String,
    },
    Parse(ParseError),
    /// A term-level failure inside an expression-wide operation.
    Term {
        term: String,
        source: Box<Error>,
    },
    /// One of the compositions compared by a semigroup check could not be formed.
    Composition {
        which: &'static str,
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(operation: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            operation,
            message: message.into(),
        }
    }

    pub(crate) fn pole(location: f64, context: &'static str) -> Self {
        Error::Pole(PoleReport { location, context })
    }

    /// True for syntax errors, as opposed to domain and pole errors.
    pub fn is_parse(&self) -> bool {
        match self {
            Error::Parse(_) => true,
            Error::Term { source, .. } | Error::Composition { source, .. } => source.is_parse(),
            _ => false,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole(report) => report.fmt(f),
            Error::Domain { operation, message } => write!(f, "{operation}: {message}"),
            Error::Parse(err) => err.fmt(f),
            Error::Term { term, source } => write!(f, "term `{term}`: {source}"),
            Error::Composition { which, source } => write!(f, "composition {which}: {source}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(err: ParseError) -> Self {
        Error::Parse(err)
    }
}

pub type Result<T> = core::result::Result<T, Error>;
