use thiserror::Error;

/// Errors raised by the library.
///
/// The variants separate four failure classes that callers treat
/// differently: malformed input data, exceeded resource guards, violated
/// operation hypotheses, and failures of internally verified certificates
/// (which indicate a bug rather than bad input and should never occur).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed tables or documents: wrong dimensions, out-of-range
    /// indices, inconsistent shapes. Distinct from an axiom failing on
    /// well-shaped data.
    #[error("structural error: {0}")]
    Structure(String),

    /// A configurable size or work guard was exceeded. Never silently
    /// truncated.
    #[error("guard exceeded during {what}: needed {needed}, limit {limit}")]
    Guard {
        what: String,
        needed: u64,
        limit: u64,
    },

    /// A hypothesis of the requested operation does not hold for the given
    /// inputs (for example, a set that is not a radical order ideal).
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// An internally verified certificate failed. This cannot happen for
    /// inputs satisfying the operation hypotheses.
    #[error("certificate check failed: {0}")]
    PaperCheck(String),
}

impl Error {
    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }

    pub fn paper_check(msg: impl Into<String>) -> Self {
        Error::PaperCheck(msg.into())
    }

    pub fn guard(what: impl Into<String>, needed: u64, limit: u64) -> Self {
        Error::Guard {
            what: what.into(),
            needed,
            limit,
        }
    }
}
