use thiserror::Error;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("parse error at position {1}: {0}")]
    Parse(String, usize),
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(crate::laurent::Var, crate::laurent::Var),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("quadrature did not converge: achieved error {achieved:.3e} > tolerance {requested:.3e}")]
    QuadratureFailure { achieved: f64, requested: f64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
