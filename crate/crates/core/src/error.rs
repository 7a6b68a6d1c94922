use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for Cartan type {family}: {constraint}")]
    InvalidRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },
    #[error("unknown Cartan family '{0}' (expected one of A, B, C, D, E, F, G)")]
    UnknownFamily(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has nonzero trace {0}")]
    NotTraceless(String),
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("characteristic polynomial has non-rational roots")]
    IrrationalSpectrum,
    #[error("h is not in the fundamental domain: condition fails at simple root {root}")]
    NotInFundamentalDomain { root: usize },
    #[error("torus element has a nonzero imaginary part")]
    NonRealTorusElement,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("no nonzero nilpotent orbit exists for n = {0}")]
    NoMinimalOrbit(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
