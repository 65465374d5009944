use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps the variants onto exit codes: input problems are `2`,
/// exhausted budgets are `3`, internal inconsistencies are `4`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("table of {requested} entries exceeds the cap of {cap}")]
    TableTooLarge { requested: u64, cap: u64 },

    #[error("degree {needed} lies beyond the membership table limit {limit}")]
    TableRange { needed: u64, limit: u64 },

    #[error("budget exhausted: {0}")]
    Budget(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Overflow(_) => 2,
            Error::Budget(_) | Error::TableTooLarge { .. } => 3,
            Error::TableRange { .. } | Error::Precondition(_) | Error::Invariant(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
