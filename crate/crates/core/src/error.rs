use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative scalar {0} where a nonnegative one is required")]
    NegativeScalar(String),
    #[error("non-finite value {0}")]
    NonFinite(f64),
    #[error("malformed literal `{0}`")]
    MalformedLiteral(String),
}
