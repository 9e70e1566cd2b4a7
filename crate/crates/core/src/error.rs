use thiserror::Error;

use crate::complex::Face;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("facet {index} is empty")]
    EmptyFacet { index: usize },

    #[error("vertex {vertex} is outside 1..={n_vertices}")]
    VertexOutOfRange { vertex: u32, n_vertices: u32 },

    #[error("vertex {vertex} is not covered by any facet")]
    UncoveredVertex { vertex: u32 },

    #[error("complex needs at least one vertex")]
    NoVertices,

    #[error("invalid parameters n={n}, k={k}: need n > k >= 1")]
    InvalidParams { n: u32, k: u32 },

    #[error("facet {facet} has {odd} odd and {even} even vertices, which matches no parity class")]
    ParityLemmaViolation { facet: Face, odd: usize, even: usize },

    #[error("dimension mismatch: expected length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("{what} is out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("certificate check failed: {0}")]
    CertificateFailed(String),

    #[error("power {power} is too large: {power}! does not fit in a 64-bit matrix entry")]
    PowerTooLarge { power: usize },

    #[error("{0} is not an odd prime")]
    NotPrime(u64),

    #[error("malformed matrix file: {0}")]
    MalformedMatrix(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
