use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: `{left}` vs `{right}`")]
    RingMismatch { left: String, right: String },

    #[error("element `{0}` is not homogeneous")]
    NotHomogeneous(String),

    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("membership queries over `{0}` require a positive-degree element")]
    DegreeZeroQuery(String),

    #[error("unknown ring `{0}`")]
    UnknownRing(String),

    #[error("no homomorphism `{0}` in the catalog")]
    UnknownHom(String),

    #[error("parse error in `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("operation requires a principal ideal, got {0} generators")]
    NonPrincipal(usize),

    #[error("ring `{0}` is not a polynomial ring over a field")]
    NotPolynomialField(String),

    #[error("generator `{0}` appears in both tensor factors")]
    GeneratorClash(String),

    #[error("invalid homomorphism `{name}`: {reason}")]
    InvalidHom { name: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
