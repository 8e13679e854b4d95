use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A sequence prefix is too short for the requested computation.
    #[error("length error: need at least {needed} terms, have {available}")]
    Length { needed: usize, available: usize },

    /// A series does not have the constant or linear term an operation needs.
    #[error("shape error: {0}")]
    Shape(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown transform name `{0}`")]
    UnknownName(String),

    #[error("transform `{name}` requires parameter `{param}`")]
    MissingParameter { name: String, param: &'static str },

    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),

    #[error("`{key}` has only {available} terms available, {requested} requested")]
    PrefixUnavailable {
        key: String,
        requested: usize,
        available: usize,
    },

    /// Brute-force enumerators refuse sizes beyond their hard-coded bound.
    #[error("{kind}: size {n} exceeds enumeration bound {max}")]
    SizeBound {
        kind: &'static str,
        n: usize,
        max: usize,
    },

    #[error("refused: {0}")]
    Refused(String),

    /// A claimed relation between sequences does not hold on the data.
    #[error("mismatch: {0}")]
    Mismatch(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}
