use std::fmt;

use fracalc_core::Error;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitCode {
    Success = 0,
    Usage = 1,
    Parse = 2,
    Domain = 3,
    Verification = 4,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    Usage(String),
    Parse(Error),
    Domain(String),
    Verification(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::Usage,
            Failure::Parse(_) => ExitCode::Parse,
            Failure::Domain(_) => ExitCode::Domain,
            Failure::Verification(_) => ExitCode::Verification,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        if err.is_parse() {
            Failure::Parse(err)
        } else {
            Failure::Domain(err.to_string())
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "usage error: {msg}"),
            Failure::Parse(err) => write!(f, "{err}"),
            Failure::Domain(msg) => write!(f, "domain error: {msg}"),
            Failure::Verification(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl std::error::Error for Failure {}
