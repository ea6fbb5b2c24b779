use crate::algebra::ViolationReport;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong below the CLI layer.
///
/// Structural errors (bad carriers, malformed tables) are distinct from
/// semantic validation failures, which carry a [`ViolationReport`] naming the
/// first broken law and its witness. `TheoremViolation` marks internal
/// postconditions that are theorems of the underlying mathematics; if one
/// fires, the implementation (not the input) is wrong.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("carrier size mismatch: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("node {node} out of range for carrier of size {n}")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("not a partial order: {why}")]
    NotAPoset { why: String },

    #[error("not a forest: principal downset of node {node} is not a chain")]
    NotAForest { node: usize },

    #[error("malformed {table} table: {why}")]
    MalformedTable { table: &'static str, why: String },

    #[error("{what} exceeds supported size (limit {limit}, got {actual})")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("validation failed: {0}")]
    Algebra(ViolationReport),

    #[error("operator output is not a downset: node {node} is missing below a member")]
    NotADownset { node: usize },

    #[error("frame is not {required}: witness pair ({}, {})", witness.0, witness.1)]
    FrameClass {
        required: &'static str,
        witness: (usize, usize),
    },

    #[error("internal theorem violation in {theorem}: {detail}")]
    TheoremViolation { theorem: &'static str, detail: String },

    #[error("requested size {requested} exceeds budget {max} (raise the node budget to allow it)")]
    Budget { requested: usize, max: usize },

    #[error("wall-clock budget exhausted during enumeration")]
    Deadline,

    #[error("unknown theorem tag {tag:?}")]
    UnknownTheorem { tag: String },

    #[error("unknown property name {name:?}")]
    UnknownProperty { name: String },
}
