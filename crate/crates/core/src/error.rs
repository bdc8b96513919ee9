use thiserror::Error;

/// Errors raised by the library. Each variant maps to one named diagnostic
/// in the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid prime {0}: must be a prime below 256")]
    InvalidPrime(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("malformed file (line {line}): {message}")]
    MalformedFile { line: usize, message: String },

    #[error("declared order {declared} but the generators produce a group of order {generated}")]
    OrderMismatch { declared: usize, generated: usize },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("group of order {order} is not a {prime}-group")]
    NotPGroup { order: usize, prime: u32 },

    #[error("no feasibility rule for target defect {0} (supported: 3, 4)")]
    UnsupportedTarget(u32),

    #[error("relation is not homogeneous: {0}")]
    InhomogeneousRelation(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("bad coefficient `{0}`")]
    BadCoefficient(String),

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("annihilator at level {level} is still nonzero in the closing window ending at degree {cap}")]
    UnboundedWithinCap { level: usize, cap: u32 },

    #[error("quotient by the parameters does not vanish on the closing window ending at degree {cap}")]
    NotSystemOfParameters { cap: u32 },

    #[error("a-invariant recursion still unusable after {cap} doublings")]
    PowerRaisingCapExceeded { cap: u32 },

    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),

    #[error("missing restriction data: {0}")]
    MissingRestrictionBlock(String),

    #[error("undetermined within degree cap: {0}")]
    UndeterminedWithinCap(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("no completing parameter found in degrees {0:?}")]
    SearchExhausted(Vec<u32>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
