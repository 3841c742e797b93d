//! Crate-wide error type.
//!
//! Every error belongs to one of four categories that map onto the CLI exit
//! codes (and the FFI status codes): invalid input, unmet precondition,
//! exhausted budget, or an internal check that should never fail.

use thiserror::Error;

/// Coarse classification of an [`Error`], stable across releases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed or out-of-domain input (exit code 2).
    Input,
    /// The operation's mathematical precondition does not hold (exit code 3).
    Precondition,
    /// A step or size budget ran out before an answer was reached (exit code 4).
    Budget,
    /// A certificate the theory guarantees failed to verify — a bug (exit code 1).
    Internal,
}

impl ErrorCategory {
    /// Process exit code / FFI status code for this category.
    pub fn code(self) -> i32 {
        match self {
            ErrorCategory::Input => 2,
            ErrorCategory::Precondition => 3,
            ErrorCategory::Budget => 4,
            ErrorCategory::Internal => 1,
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    // ---- input ----
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("duplicate letter '{0}' in alphabet")]
    DuplicateLetter(char),
    #[error("letter '{0}' is not in the alphabet")]
    UnknownLetter(char),
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("the empty word is not allowed in this language")]
    EpsilonInLanguage,
    #[error("the language must not be empty")]
    EmptyLanguage,
    #[error("operands use different alphabets ({0} vs {1})")]
    AlphabetMismatch(String, String),
    #[error("invalid argument: {0}")]
    BadArgument(String),
    #[error("invalid witness: {0}")]
    BadWitness(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    // ---- preconditions ----
    #[error("the set is not a code ({0})")]
    NotACode(String),
    #[error("the set is not invariant under the map")]
    NotInvariant,
    #[error("the set is already complete; nothing to complete")]
    AlreadyComplete,
    #[error("the set is not a {family} code ({detail})")]
    NotInFamily { family: String, detail: String },
    #[error("the set is not uniformly synchronized with delay {k} ({detail})")]
    NotSynchronized { k: u32, detail: String },
    #[error("the language is not a submonoid ({0})")]
    NotSubmonoid(String),
    #[error("unsupported map for this construction: {0}")]
    UnsupportedMap(String),

    // ---- budgets ----
    #[error("budget exhausted: {0}")]
    Budget(String),

    // ---- internal certificates ----
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Which category (and therefore exit code) this error belongs to.
    pub fn category(&self) -> ErrorCategory {
        use Error::*;
        match self {
            EmptyAlphabet | DuplicateLetter(_) | UnknownLetter(_) | BadPermutation(_)
            | EpsilonInLanguage | EmptyLanguage | AlphabetMismatch(..) | BadArgument(_)
            | BadWitness(_) | Parse { .. } => ErrorCategory::Input,
            NotACode(_) | NotInvariant | AlreadyComplete | NotInFamily { .. }
            | NotSynchronized { .. } | NotSubmonoid(_) | UnsupportedMap(_) => {
                ErrorCategory::Precondition
            }
            Budget(_) => ErrorCategory::Budget,
            Internal(_) => ErrorCategory::Internal,
        }
    }
}
