use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The constant term of a series is not a unit of the integers.
    #[error("series is not invertible over the integers: {0}")]
    NotInvertible(String),

    /// A computation needs more known coefficients than the input carries.
    #[error("truncation insufficient: {0}")]
    TruncationInsufficient(String),

    /// An operation that needs a fully known Laurent polynomial received a
    /// truncated series.
    #[error("expected a Laurent polynomial, found a series truncated at order {order}")]
    NotPolynomial { order: i64 },

    /// A parameter is outside the domain of the operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A character/exponent pair violates the integrality condition of a
    /// partial theta function.
    #[error("(n^2 - {a})/{b} is not an integer at supported n = {n}")]
    NonIntegralExponent { a: i64, b: i64, n: i64 },

    /// A j-vector does not satisfy the congruence condition.
    #[error("j-vector {0:?} is not admissible")]
    Inadmissible(Vec<i64>),
}

pub type Result<T> = std::result::Result<T, Error>;
