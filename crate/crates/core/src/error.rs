use thiserror::Error;

/// Errors shared across the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: u32, order: u32 },

    #[error("{what}: order {order} outside supported range {min}..={max}")]
    OrderOutOfRange {
        what: &'static str,
        order: u32,
        min: u32,
        max: u32,
    },

    #[error("mayer and boltzmann edge sets overlap")]
    OverlappingEdgeSets,

    #[error("vertex {vertex} is not covered by any edge")]
    UncoveredVertex { vertex: u32 },

    #[error("operation requires a basic graph (connected mayer subgraph)")]
    NonBasicGraph,

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("coefficient vectors have mismatched lengths")]
    LengthMismatch,

    #[error("missing coefficient {family}_{index}")]
    MissingCoefficient { family: &'static str, index: usize },

    #[error("expected coefficient family {expected}, got {got}")]
    FamilyMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("partition vector has zero weighted total")]
    EmptyPartitionVector,

    #[error("term coefficient is not an exact integer")]
    NonIntegerCoefficient,

    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("unsupported potential model: {0}")]
    UnsupportedModel(String),

    #[error("frame record rejected: {0}")]
    InvalidFrameRecord(String),

    #[error("expansion budget exceeded: {edges} boltzmann edges")]
    ExpansionBudget { edges: u32 },

    #[error("normalization constant of |f| is zero")]
    ZeroNormalization,
}

impl Error {
    /// Budget and usage errors get a distinct process exit code in the CLI.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::OrderOutOfRange { .. } | Error::ExpansionBudget { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
