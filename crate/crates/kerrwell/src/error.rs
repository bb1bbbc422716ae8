use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("landscape is not bistable{}", match .eps1_critical {
        Some(c) => format!(" (bistability lost at eps1/K = {c:.6})"),
        None => String::new(),
    })]
    BistabilityLost { eps1_critical: Option<f64> },

    #[error("steady state is degenerate: null space dimension {0}")]
    DegenerateSteadyState(usize),

    #[error("trajectory does not decay (total change {0:.3e} < 1e-3)")]
    NoDecay(f64),

    #[error("spectral gap below resolution: {0}")]
    IndeterminateGap(String),

    #[error("insufficient support for detailed balance: {0} retained level pairs")]
    InsufficientSupport(usize),

    #[error("trajectory integration failed: {0}")]
    IntegrationFailure(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("unknown figure preset: {0}")]
    UnknownFigure(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 for usage/config errors, 3 for
    /// numerical or i/o failures at run time.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::UnknownFigure(_) | Error::InvalidParams(_) => 2,
            _ => 3,
        }
    }
}
