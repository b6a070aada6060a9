use thiserror::Error;

use crate::partition::BoxCoord;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part {index} is not positive")]
    NonPositivePart { index: usize },

    #[error("part {index} is larger than part {}", index - 1)]
    NotWeaklyDecreasing { index: usize },

    #[error("cannot parse part {index} from {text:?}")]
    ParsePart { index: usize, text: String },

    #[error("box ({}, {}) is outside the diagram", .0.row, .0.col)]
    OutsideDiagram(BoxCoord),

    #[error("cannot drop {requested} rows from a diagram with {available} rows")]
    TooManyRowsDropped { requested: usize, available: usize },

    #[error("path enumeration exceeded the limit of {limit} paths")]
    PathLimitExceeded { limit: usize },

    #[error("disjoint-system search exceeded the budget of {budget} visited states")]
    SystemBudgetExceeded { budget: u64 },

    #[error("invalid selection: {0}")]
    InvalidSelection(String),

    #[error("index {what} = {value} is out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("negative upper index {0} in binomial coefficient")]
    NegativeUpperIndex(i64),

    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
}
