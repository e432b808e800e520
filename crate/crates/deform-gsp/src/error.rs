use crate::graph::Mode;
use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed line {line}: {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("self-loop on node {node} at line {line}")]
    SelfLoop { line: usize, node: usize },
    #[error("negative weight at line {line} rejected in nonnegative mode")]
    NegativeWeightInNonnegativeMode { line: usize },
    #[error("node index {index} out of range for {n_nodes} nodes (line {line})")]
    IndexOutOfRange {
        line: usize,
        index: usize,
        n_nodes: usize,
    },
    #[error("operation requires {expected:?} mode, graph is {found:?}")]
    WrongMode { expected: Mode, found: Mode },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid sparsity K={k} for dimension {n}")]
    InvalidK { k: usize, n: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("reference signal has zero norm")]
    ZeroReference,
    #[error("eigensolver failed to converge")]
    ConvergenceFailure,
    #[error("no PSD point on the r grid")]
    NoFeasiblePoint,
    #[error("unstable Euler step: dt = {dt} exceeds stability limit 2/lambda_max = {limit}")]
    UnstableStepSize { dt: f64, limit: f64 },
    #[error("nonpositive price {value} at row {row}, column {col}")]
    NonpositivePrice { row: usize, col: usize, value: f64 },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
