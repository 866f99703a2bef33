use thiserror::Error;

/// Errors raised by the topology, semigroup and semistar layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("point set belongs to a space of {found} points, expected {expected}")]
    ForeignPointSet { expected: usize, found: usize },
    #[error("relation is not antisymmetric: cycle {}", .0.join(" < "))]
    OrderCycle(Vec<String>),
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("set {{{}}} is not open", .0.join(","))]
    NotOpen(Vec<String>),
    #[error("invalid open family: {0}")]
    InvalidTopology(String),
    #[error("enumeration over {size} items exceeds the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),
    #[error("exponent {0} is not in the group generated by the semigroup")]
    NotInGroup(String),
    #[error("exponent {0} has the wrong dimension")]
    Dimension(String),
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("generator {0} is not in the semigroup")]
    NotInSemigroup(String),
    #[error("invalid prime set: {0}")]
    InvalidPrimeSet(String),
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
