use thiserror::Error;

/// Errors produced by graph construction, counting and bound checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: loop at vertex {vertex} is not allowed")]
    Loop { line: usize, vertex: usize },

    #[error("line {line}: vertex {vertex} is outside 1..={n}")]
    VertexRange {
        line: usize,
        vertex: usize,
        n: usize,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph has no edges, maximal multiplicity is undefined")]
    EmptyGraph,

    #[error("complement level {delta} is below the maximal multiplicity {max}")]
    DeltaTooSmall { delta: u32, max: u32 },

    #[error("operation requires a simple graph (all multiplicities at most 1)")]
    NotSimple,

    #[error("join requires at least two parts, got {0}")]
    TooFewParts(usize),

    #[error("brute-force enumeration limited to {limit} edge instances, graph has {edges}")]
    SizeLimit { edges: usize, limit: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| exceeds tolerance")]
    NotSymmetric { i: usize, j: usize },

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {off_diagonal:e})"
    )]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("sequence lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("first sequence does not majorize the second")]
    NotMajorizing,

    #[error("sequence entries must be strictly positive")]
    NonPositive,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
