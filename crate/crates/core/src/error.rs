use thiserror::Error;

use crate::params::CaseKind;

/// Errors produced while validating parameters or computing indices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IscError {
    #[error("parameter {name} must be at least 1, got {value}")]
    NonPositiveParameter { name: &'static str, value: i64 },

    #[error("n - p and n - q must both be even, got p = {p}, q = {q}, n = {n}")]
    ParityViolation { p: i64, q: i64, n: i64 },

    #[error("max(p, q) = {max_pq} exceeds n = {n}")]
    OrderViolation { max_pq: i64, n: i64 },

    #[error("rows {lower} and {upper} share no column")]
    DisconnectedRows { lower: usize, upper: usize },

    #[error("row {row} has x_min {x_min} > x_max {x_max}")]
    EmptyRow { row: usize, x_min: i64, x_max: i64 },

    #[error("vertex ({x}, {y}) is not part of the graph")]
    VertexNotFound { x: i64, y: i64 },

    #[error("vertex ({x}, {y}) is unreachable from the BFS source")]
    UnreachableVertex { x: i64, y: i64 },

    #[error("removing edge class {class} leaves {components} components instead of 2")]
    NotTwoComponents { class: usize, components: usize },

    #[error("{context} polynomial is not divisible by {divisor} (remainder {remainder})")]
    InexactDivision {
        context: String,
        divisor: u32,
        remainder: String,
    },

    #[error("denominator vanishes")]
    ZeroDenominator,

    #[error("average distance needs at least 2 vertices, got {0}")]
    OrderTooSmall(String),

    #[error("cut table produced an invalid component size {value} in {family} k = {k} ({case})")]
    InvalidCutSize {
        family: String,
        k: u64,
        value: String,
        case: CaseKind,
    },

    #[error("unknown method {0:?}")]
    UnknownMethod(String),
}

pub type Result<T> = std::result::Result<T, IscError>;
