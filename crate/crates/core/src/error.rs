use thiserror::Error;

/// Crate-wide error type. Variants double as the diagnostic categories the
/// CLI maps to exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("morphism not applicable: {0}")]
    MorphismNotApplicable(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("training aborted, loss became NaN: {0}")]
    NanLoss(String),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("data error: {0}")]
    Data(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable diagnostic category, used in CLI output and exit codes.
    pub fn category(&self) -> &'static str {
        match self {
            Error::ShapeMismatch(_) => "shape",
            Error::InvalidGraph(_) => "graph",
            Error::MorphismNotApplicable(_) => "morphism",
            Error::NonFinite(_) => "numeric",
            Error::NanLoss(_) => "training",
            Error::Config(_) => "config",
            Error::Format(_) => "format",
            Error::Data(_) => "data",
            Error::Io(_) => "io",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Io(_) => 3,
            Error::Format(_) => 4,
            Error::Data(_) => 5,
            Error::ShapeMismatch(_) | Error::InvalidGraph(_) => 6,
            Error::MorphismNotApplicable(_) => 7,
            Error::NonFinite(_) | Error::NanLoss(_) => 8,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
