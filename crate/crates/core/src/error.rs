use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("duplicate edge {from} -> {to} on layer {layer}")]
    DuplicateEdge {
        from: String,
        to: String,
        layer: String,
    },
    #[error("self-loop on node {node} (layer {layer})")]
    SelfLoop { node: String, layer: String },
    #[error("invalid weight {weight} on edge {from} -> {to}")]
    InvalidWeight {
        from: String,
        to: String,
        weight: f64,
    },
    #[error("unknown node {0}")]
    UnknownNode(String),
    #[error("unknown layer {0}")]
    UnknownLayer(String),
    #[error("event log is empty")]
    EmptyLog,
    #[error("invalid window: window {window}, overlap {overlap}")]
    InvalidWindow { window: i64, overlap: i64 },
    #[error("alpha {alpha} out of range 1..={layers}")]
    AlphaOutOfRange { alpha: usize, layers: usize },
    #[error("degenerate network: {0}")]
    DegenerateNetwork(String),
    #[error("expected a single-layer network, found {0} layers")]
    NotSingleLayer(usize),
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(String, String),
    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),
    #[error("social position did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("weight {weight} outside [0,1] on edge {from} -> {to}")]
    WeightOutOfRange {
        from: String,
        to: String,
        weight: f64,
    },
    #[error("parameter {name} = {value} out of range")]
    ParameterOutOfRange { name: &'static str, value: f64 },
    #[error("partitions cover different node sets")]
    UniverseMismatch,
    #[error("groups overlap on node {0}")]
    OverlappingGroups(String),
    #[error("configuration-model wiring failed after {0} attempts")]
    WiringFailure(usize),
    #[error("infeasible benchmark spec: {0}")]
    InfeasibleSpec(String),
    #[error("group is empty")]
    EmptyGroup,
    #[error("{frames} frames but {partitions} partitions")]
    FrameMismatch { frames: usize, partitions: usize },
    #[error("no rows to export")]
    EmptyDataset,
    #[error("length mismatch: {0} predictions vs {1} labels")]
    LengthMismatch(usize, usize),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
