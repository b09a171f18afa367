use thiserror::Error;

/// Errors surfaced by sampling, series evaluation, and certificate
/// construction.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("length error: needed {needed} digits, path supplies {got}")]
    Length { needed: usize, got: usize },

    #[error("precision exhausted: produced {produced} certified digits of {requested} requested")]
    PrecisionExhausted { produced: usize, requested: usize },

    #[error("precision error: {0}")]
    Precision(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("series diverges: {0}")]
    Divergent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
