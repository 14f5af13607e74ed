use thiserror::Error;

/// Errors raised by the scattering, quadrature and free-energy routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CasimirError {
    /// The left factor of a single-site transfer matrix is not invertible.
    #[error("singular transfer-matrix factor (|det| = {det:e})")]
    SingularFactor { det: f64 },
    /// A barrier amplitude hit a pole (|2 - Delta| or a denominator vanished).
    #[error("singular barrier: {0}")]
    SingularBarrier(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("quadrature did not reach tolerance: estimate {abs_error:e} after {subdivisions} subdivisions")]
    QuadratureFailure { abs_error: f64, subdivisions: usize },
    #[error("boundary integral does not converge: {0}")]
    NonConvergence(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl CasimirError {
    /// True for errors caused by invalid user input rather than numerics.
    pub fn is_config(&self) -> bool {
        matches!(self, CasimirError::Config(_) | CasimirError::Domain(_))
    }
}

pub type Result<T> = std::result::Result<T, CasimirError>;
