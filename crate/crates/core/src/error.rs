use thiserror::Error;

/// Errors surfaced by the kernel.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a subdivisor: {0}")]
    NotASubdivisor(String),
    #[error("unsupported complement: {0}")]
    UnsupportedComplement(String),
    #[error("correspondence does not cover chart {0}")]
    Coverage(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("unknown variable: {0}")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unregistered check: {0}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
