//! Error-to-exit-code mapping.

#[derive(Debug)]
pub enum CliError {
    /// Exit 1: the run completed but some claim could not be verified or no
    /// answer exists within range.
    Unverified(String),
    /// Exit 2: malformed input (bad flags, parse errors, wrong graphs).
    Input(String),
    /// Exit 3: a resource guard refused the computation.
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unverified(_) => 1,
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Unverified(m) | CliError::Input(m) | CliError::Guard(m) => m,
        }
    }
}

pub fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

pub fn guard(msg: impl Into<String>) -> CliError {
    CliError::Guard(msg.into())
}

pub fn unverified(msg: impl Into<String>) -> CliError {
    CliError::Unverified(msg.into())
}
