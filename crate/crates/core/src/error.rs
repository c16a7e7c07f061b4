//! Crate-wide error type.

use std::fmt;

/// Errors produced by the toolkit.
///
/// Mathematical "negative" outcomes (an inconclusive certificate, an
/// incomplete factorization) are ordinary result values, not errors; `Error`
/// is reserved for violated preconditions, exceeded envelopes, and internal
/// invariant failures.
#[derive(Debug)]
pub enum Error {
    /// A precondition on the inputs was violated.
    Domain(String),
    /// The request is outside the declared performance envelope.
    Unsupported(String),
    /// A rigorous enclosure could not decide a comparison even after
    /// precision escalation.
    Precision(String),
    /// An internal invariant failed; indicates a bug, not bad input.
    Internal(String),
    /// A named stage of a multi-stage pipeline failed its assertion.
    Stage { stage: &'static str, message: String },
    /// I/O failure while reading external data.
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Precision(m) => write!(f, "precision exhausted: {m}"),
            Error::Internal(m) => write!(f, "internal invariant violated: {m}"),
            Error::Stage { stage, message } => write!(f, "stage `{stage}` failed: {message}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
