use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("band a({lower},{upper}) is invalid on {strands} strands")]
    IndexViolation {
        lower: usize,
        upper: usize,
        strands: usize,
    },

    #[error("canonical surface is disconnected ({components} components)")]
    DisconnectedSurface { components: usize },

    #[error("surface is not an annulus: {reason}")]
    NotAnAnnulus { reason: String },

    #[error("word is not strongly quasipositive (negative letters at {positions:?})")]
    NotSqp { positions: Vec<usize> },

    #[error("annulus has framing {framing}, expected 0")]
    NonZeroFraming { framing: i64 },

    #[error("strand {strand} is isolated (no incident band)")]
    IsolatedStrand { strand: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("letter {position} is not a negative band")]
    NotNegative { position: usize },

    #[error("invalid annulus: {0}")]
    InvalidAnnulus(String),

    #[error("expected {expected} companion annuli, got {got}")]
    CompanionArity { expected: usize, got: usize },

    #[error("certificate does not match basis: {0}")]
    CertificateMismatch(String),

    #[error("unknown closure component {0}")]
    UnknownComponent(usize),

    #[error("zero polynomial cannot be normalized")]
    ZeroPolynomial,

    #[error("exact division failed: closure permutation does not support the Burau quotient")]
    NotCoprimePermutation,

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("catalog validation failed for `{name}`: {source}")]
    ValidationFailed {
        name: String,
        #[source]
        source: Box<Error>,
    },

    #[error("catalog store error: {0}")]
    StoreIo(String),

    #[error("unknown strategy `{name}` (available: {available})")]
    UnknownStrategy { name: String, available: String },
}
