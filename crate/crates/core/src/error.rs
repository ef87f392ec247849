use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    InvalidUniformity(usize),
    #[error("vertex count {vertices} is smaller than the uniformity {uniformity}")]
    TooFewVertices { vertices: usize, uniformity: usize },
    #[error("edge {edge} has {found} vertices, expected {expected}")]
    EdgeSize { edge: usize, expected: usize, found: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("edge {edge} contains vertex {vertex} outside [1, {vertex_count}]")]
    VertexOutOfRange { edge: usize, vertex: usize, vertex_count: usize },
    #[error("edge {edge} duplicates edge {first}")]
    DuplicateEdge { edge: usize, first: usize },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("entry {value} is not reduced modulo {modulus}")]
    UnreducedEntry { value: u64, modulus: u64 },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("hypergraph is not connected")]
    Disconnected,
    #[error("{ell} does not divide {modulus}")]
    NotDivisor { ell: u64, modulus: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration would produce {count} edges, budget is {budget}")]
    BudgetExceeded { count: u128, budget: u128 },

    #[error(
        "power iteration did not converge after {iterations} iterations \
         (bracket [{lower}, {upper}])"
    )]
    NonConvergence { iterations: usize, lower: f64, upper: f64 },

    /// A relation that the theory guarantees failed to hold.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
