use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("vector dimension {0} outside 1..={max}", max = crate::gf2::MAX_DIM)]
    InvalidDimension(usize),

    #[error("invalid bit string {0:?}")]
    InvalidBitString(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation of degree {actual} where degree {expected} is required")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("coordinate {k} out of range 1..={dim}")]
    CoordinateOutOfRange { k: usize, dim: usize },

    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("matrix is singular over GF(2)")]
    Singular,

    #[error("digraph contains a directed cycle")]
    Cyclic,

    #[error("vector matrix is not in M_omega: {0}")]
    NotInMOmega(String),

    #[error("invalid digraph: {0}")]
    InvalidGraph(String),

    #[error("vertex permutation does not preserve the dimension function")]
    OmegaNotPreserved,

    #[error("{what}: estimated size {estimate} exceeds budget {limit}")]
    BudgetExceeded {
        what: &'static str,
        estimate: String,
        limit: u64,
    },

    #[error("orbit exceeds budget {limit} (stopped after {partial} members)")]
    OrbitBudgetExceeded { partial: usize, limit: usize },

    #[error("{formula}: {numerator} is not divisible by {denominator}")]
    InexactDivision {
        formula: &'static str,
        numerator: i128,
        denominator: i128,
    },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
