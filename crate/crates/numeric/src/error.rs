#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision exhausted: {0}")]
    Precision(String),
    #[error("no convergence: {0}")]
    Convergence(String),
}
