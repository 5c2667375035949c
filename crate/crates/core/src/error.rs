use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a configuration needs at least one point")]
    NoPoints,
    #[error("pair ({i}, {j}) is not a valid pair for n = {n}")]
    InvalidPair { i: usize, j: usize, n: usize },
    #[error("missing pair ({0}, {1})")]
    MissingPair(usize, usize),
    #[error("duplicate pair ({0}, {1})")]
    DuplicatePair(usize, usize),
    #[error("color index {index} out of range ({count} colors)")]
    ColorOutOfRange { index: usize, count: usize },
    #[error("color `{0}` is listed but never used")]
    EmptyColorClass(String),
    #[error("duplicate color name `{0}`")]
    DuplicateColorName(String),
    #[error("unknown color `{0}`")]
    UnknownColor(String),
    #[error("no value supplied for color `{0}`")]
    MissingValue(String),
    #[error("distance for color `{0}` must be positive and finite")]
    NonPositive(String),
    #[error("colors `{0}` and `{1}` share the same distance value")]
    NotInjective(String, String),
    #[error("triangle inequality violated on points ({0}, {1}, {2})")]
    TriangleInequality(usize, usize, usize),
    #[error("points {0} and {1} coincide")]
    CoincidentPoints(usize, usize),
    #[error("point {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("invalid distance matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("empty subset")]
    EmptySubset,
    #[error("point {0} repeated in subset")]
    RepeatedPoint(usize),
    #[error("point {index} out of range for n = {n}")]
    PointOutOfRange { index: usize, n: usize },
    #[error("subset size {k} out of range 1..={max}")]
    SubsetSizeOutOfRange { k: usize, max: usize },
    #[error("empty color set")]
    EmptyColorSet,
    #[error("not euclidean: most negative eigenvalue {0}")]
    NotEuclidean(f64),
    #[error("distances across the two parts are not constant")]
    NonConstantCross,
    #[error("parts must be disjoint, nonempty and cover every point")]
    InvalidSplit,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("no checks requested")]
    NoChecks,
    #[error("({m}, {t}) is outside the covered table range")]
    TableOutOfRange { m: usize, t: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
