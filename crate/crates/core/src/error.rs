use thiserror::Error;

/// Errors surfaced by the decomposition pipeline.
#[derive(Debug, Clone, Error)]
pub enum CadError {
    /// A polynomial was nullified over a positive-dimensional cell, so the
    /// McCallum-style operators cannot certify the output.
    #[error("input is not well oriented: {poly} is nullified on cell {cell_index:?}")]
    NotWellOriented {
        poly: String,
        cell_index: Vec<u32>,
    },

    #[error("variable order mismatch")]
    OrderMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Parse failure with 1-based line/column position.
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
}

impl CadError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CadError::InvalidInput(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        CadError::Unsupported(msg.into())
    }
}
