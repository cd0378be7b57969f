use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("attempted to invert zero")]
    ZeroInversion,
    #[error("conductor mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    ConductorMismatch { left: u32, right: u32 },
    #[error("group closure exceeded bound {bound}")]
    BoundExceeded { bound: usize },
    #[error("generators must be nonempty and of a single kind: {0}")]
    MixedElements(String),
    #[error("invalid ADE label: {0}")]
    InvalidLabel(String),
    #[error("twisted-sector total is not rational: {0}")]
    NonRationalTotal(String),
    #[error("non-identity class with trace 2: {0}")]
    TraceTwoNonIdentity(String),
    #[error("identity failure in {what}: {lhs} != {rhs}")]
    IdentityFailure {
        what: String,
        lhs: String,
        rhs: String,
    },
    #[error("cannot combine scalars from {left} and {right}")]
    FieldMismatch { left: String, right: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
