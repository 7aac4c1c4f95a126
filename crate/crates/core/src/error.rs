use thiserror::Error;

/// Errors raised by the algebra kernel and the signature pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("denominator {denominator} is not invertible in characteristic {characteristic}")]
    NonInvertibleDenominator {
        denominator: String,
        characteristic: u64,
    },
    #[error("cyclotomic conductor {conductor} exceeds the configured bound {bound}")]
    ConductorTooLarge { conductor: u32, bound: u32 },
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("bad coefficient: {0}")]
    BadCoefficient(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("degree {degree} is not invertible in characteristic {characteristic}")]
    DegreeNotInvertible { degree: u32, characteristic: u64 },

    #[error("resource limit exceeded: more than {limit} pair reductions")]
    ResourceLimitExceeded { limit: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("generator {index} is singular")]
    SingularGenerator { index: usize },
    #[error("group is not small: pseudo-reflection {witness}")]
    NotSmall { witness: String },
    #[error("characteristic {characteristic} divides the group order {order}")]
    CharacteristicDividesOrder { characteristic: u64, order: usize },
    #[error("Molien coefficient at degree {degree} is not a nonnegative integer: {value}")]
    NonIntegerCoefficient { degree: usize, value: String },

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("free-rank methods disagree: {0}")]
    DisagreementBetweenMethods(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
