use thiserror::Error;

/// Errors raised by the library. Each variant maps onto a CLI exit code,
/// see [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("semigroup is not positive: {reason}")]
    Positivity {
        reason: String,
        /// Nonnegative integer multipliers, one per generator, whose
        /// combination has zero free part.
        certificate: Option<Vec<i64>>,
    },

    #[error("element {0} is not a member of the semigroup")]
    Membership(String),

    #[error("enumeration budget of {limit} elements exceeded")]
    Budget { limit: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("the Alexander dual is undefined for a complex with empty support")]
    EmptySupport,

    #[error("cannot expand: {0}")]
    Expansion(String),

    #[error("consistency check `{check}` failed at {at}")]
    Consistency { check: String, at: String },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn consistency(check: impl Into<String>, at: impl Into<String>) -> Self {
        Error::Consistency {
            check: check.into(),
            at: at.into(),
        }
    }

    /// 1 config, 2 hypothesis, 3 consistency, 4 budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Hypothesis(_) | Error::Positivity { .. } => 2,
            Error::Consistency { .. } => 3,
            Error::Budget { .. } => 4,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
