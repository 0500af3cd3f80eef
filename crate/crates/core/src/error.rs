use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u8, u8),

    #[error("unsupported cyclotomic order {0} (expected 1, 2 or 3)")]
    UnsupportedOrder(u8),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("elements belong to different algebras")]
    SpecMismatch,

    #[error("degree {degree} is not admissible for {generator}")]
    InadmissibleDegree { generator: String, degree: i64 },

    #[error("index out of range: {0}")]
    Index(String),

    #[error("element is not fixed by the twisted automorphism: {0}")]
    NotFixed(String),
}
