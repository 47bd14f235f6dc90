use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the library.
///
/// Every fallible operation states its preconditions; violating them yields
/// one of these variants rather than a panic, so callers (and the CLI) can
/// surface a precise diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal (the unit ideal was given)")]
    UnitIdeal,

    #[error("variable index {index} out of range for ring dimension {ring_dim}")]
    IndexOutOfRange { index: usize, ring_dim: usize },

    #[error("exponent arithmetic overflowed 64 bits")]
    ExponentOverflow,

    #[error("power exponent must be at least 1")]
    InvalidPower,

    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("set system must contain at least one basis")]
    EmptySystem,

    #[error("set system bases must all have the same cardinality")]
    NotEquicardinal,

    #[error("graph has no edges")]
    EdgelessGraph,

    #[error("invalid edge ({u}, {v})")]
    InvalidEdge { u: usize, v: usize },

    #[error("a partition needs at least two blocks, all nonempty")]
    InvalidPartition,

    #[error("path vertex count must be at least 2, got {0}")]
    PathTooShort(usize),

    #[error("graph has {vertices} vertices, exceeding the configured limit {limit}")]
    GraphTooLarge { vertices: usize, limit: usize },

    #[error("color counts must contain at least one positive entry")]
    EmptyColorCounts,

    #[error("veronese caps sum to {total}, below the requested degree {degree}")]
    CapsTooSmall { total: u64, degree: u64 },

    #[error("depth profile reached k_max = {k_max} without attaining depth {hint}")]
    KMaxExceeded { k_max: usize, hint: usize },

    #[error("depth sequence increased at power {k}: {prev} -> {next}")]
    DepthNotMonotone { k: usize, prev: usize, next: usize },

    #[error("computation budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
}
