use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {index} ({tail}, {head}): self-loops are not allowed")]
    SelfLoop {
        index: usize,
        tail: usize,
        head: usize,
    },

    #[error("edge {index} ({tail}, {head}): weight {weight} must be positive and finite")]
    BadWeight {
        index: usize,
        tail: usize,
        head: usize,
        weight: f64,
    },

    #[error("edge {index} ({tail}, {head}): vertex id out of range for n = {n}")]
    VertexOutOfRange {
        index: usize,
        tail: usize,
        head: usize,
        n: usize,
    },

    #[error("vertex id {id} out of range for n = {n}")]
    UnknownVertex { id: usize, n: usize },

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation requires unit edge weights")]
    NotUnweighted,

    #[error("n = {n} exceeds the {what} cap of {cap}; omit checks that depend on it")]
    OverCap {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("demand is not zero-sum: |sum| = {imbalance:.3e} exceeds tolerance {tolerance:.3e}")]
    NonZeroSum { imbalance: f64, tolerance: f64 },

    #[error("demand column {column}: {source}")]
    DemandColumn {
        column: usize,
        source: Box<Error>,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("flow is identically zero")]
    ZeroFlow,

    #[error("vertex {vertex} has no outgoing flow and no exit mass")]
    ModelInconsistency { vertex: usize },

    #[error("directed flow graph contains a cycle")]
    FlowCycle,

    #[error("walk exceeded the step cap of {cap}")]
    StepCap { cap: usize },

    #[error("residual flow {residual:.3e} remains after {extractions} path extractions")]
    ResidualFlow {
        residual: f64,
        extractions: usize,
    },

    #[error("cut {index}: {what}")]
    CutBound { index: usize, what: String },
}

pub type Result<T> = std::result::Result<T, Error>;
