use std::fmt;

use thiserror::Error;

/// Outcome of running a checker on a triple whose precondition holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Rejection),
}

/// The first violated clause of a witness predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    /// Stable clause name, e.g. `trian` or `subset`.
    pub clause: &'static str,
    pub detail: String,
}

impl Verdict {
    pub fn reject(clause: &'static str, detail: impl Into<String>) -> Self {
        Verdict::Reject(Rejection {
            clause,
            detail: detail.into(),
        })
    }

    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    pub fn clause(&self) -> Option<&'static str> {
        match self {
            Verdict::Accept => None,
            Verdict::Reject(r) => Some(r.clause),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => f.write_str("ACCEPT"),
            Verdict::Reject(r) => write!(f, "REJECT: {}", r.clause),
        }
    }
}

/// Raised instead of a verdict when the input violates the problem's
/// precondition, or the witness arrays do not fit the graph.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("length mismatch: {what} has length {found}, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        found: usize,
        expected: usize,
    },
}

pub(crate) fn expect_len(what: &'static str, found: usize, expected: usize) -> Result<(), CheckError> {
    if found == expected {
        Ok(())
    } else {
        Err(CheckError::LengthMismatch { what, found, expected })
    }
}

/// Runs clause checks in order and stops at the first rejection.
macro_rules! first_rejection {
    ($($check:expr),+ $(,)?) => {{
        let mut verdict = $crate::verdict::Verdict::Accept;
        $(
            if verdict.is_accept() {
                verdict = $check;
            }
        )+
        verdict
    }};
}
pub(crate) use first_rejection;
