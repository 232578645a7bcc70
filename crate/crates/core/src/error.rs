use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Failures reported by the counting, invariant and construction routines.
///
/// Budget and cap violations are kept apart from domain errors so that front
/// ends can map them to distinct exit codes (see [`Error::is_budget`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange { vertex: usize, n: usize },
    EmptyEdge,
    /// More vertices than fit in one bitmask word.
    Capacity { n: usize },
    /// A size cap (canonicalisation, expansion, partitions, treewidth) was exceeded.
    SizeCap { what: &'static str, size: usize, cap: usize },
    /// An enumeration would exceed its configured budget.
    Budget { what: &'static str, needed: u128, budget: u128 },
    InvalidPartition(String),
    InvalidParameter(String),
    InvalidColouring(String),
    InvalidDecomposition(String),
    Infeasible,
    Unbounded,
    /// Two independent routes to the same count disagreed.
    Mismatch(String),
    Underdetermined { unknowns: usize, rank: usize },
    Inconsistent(String),
    ProbeSearchExhausted { support: usize, rank: usize },
    ZeroCoefficient(String),
    EdgelessPattern,
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::Budget { .. } | Error::SizeCap { .. } | Error::ProbeSearchExhausted { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex index out of range: {vertex} (vertex count {n})")
            }
            Error::EmptyEdge => f.write_str("empty edge"),
            Error::Capacity { n } => {
                write!(f, "{n} vertices exceed the 64-vertex bitmask capacity")
            }
            Error::SizeCap { what, size, cap } => {
                write!(f, "size cap exceeded for {what}: {size} > {cap}")
            }
            Error::Budget { what, needed, budget } => {
                write!(f, "budget exceeded for {what}: needs {needed}, budget {budget}")
            }
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InvalidColouring(msg) => write!(f, "invalid colouring: {msg}"),
            Error::InvalidDecomposition(msg) => write!(f, "invalid tree decomposition: {msg}"),
            Error::Infeasible => f.write_str("linear program is infeasible"),
            Error::Unbounded => f.write_str("linear program is unbounded"),
            Error::Mismatch(msg) => write!(f, "cross-check mismatch: {msg}"),
            Error::Underdetermined { unknowns, rank } => write!(
                f,
                "linear system underdetermined: {unknowns} unknowns, rank {rank} after probe exhaustion"
            ),
            Error::Inconsistent(msg) => write!(f, "linear system inconsistent: {msg}"),
            Error::ProbeSearchExhausted { support, rank } => write!(
                f,
                "probe search exhausted: support size {support}, probe matrix rank {rank}"
            ),
            Error::ZeroCoefficient(msg) => write!(f, "zero coefficient: {msg}"),
            Error::EdgelessPattern => f.write_str("pattern hypergraph has no edges"),
        }
    }
}

impl core::error::Error for Error {}
