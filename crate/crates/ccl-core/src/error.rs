use thiserror::Error;

/// Errors surfaced by the pipeline.
///
/// `Dimension`, `Domain`, `Contract` and `State` come out of the tensor
/// engine; the rest map onto the data, noise, checkpoint and config layers.
#[derive(Debug, Error)]
pub enum CclError {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("domain error at index {index}: {message}")]
    Domain { message: String, index: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid state: {0}")]
    State(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("capacity error: {0}")]
    Capacity(String),

    #[error("calibration failed: {message} (best achieved WER {best_wer:.4})")]
    Calibration { message: String, best_wer: f64 },

    #[error("format error: {0}")]
    Format(String),

    #[error("training aborted: {0}")]
    Training(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = CclError> = std::result::Result<T, E>;
