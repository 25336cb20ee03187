use crate::ground::Subset;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ground set must have between 1 and {max} atoms, got {got}")]
    BadGroundSize { got: usize, max: usize },

    #[error("subset 0x{bits:x} does not fit a ground set of {n} atoms")]
    SubsetOutOfRange { bits: u32, n: usize },

    #[error("blocks do not form a partition of the carrier: {reason}")]
    BadPartition { reason: String },

    #[error("carrier must be nonempty")]
    EmptyCarrier,

    #[error("carrier with {got} atoms exceeds the enumeration cap of {max}")]
    TooManyAtoms { got: usize, max: usize },

    #[error("block score is not finite on subset 0x{subset:x}")]
    NonFiniteScore { subset: u32 },

    #[error("set-function table has {got} entries, expected {expected}")]
    BadTableSize { got: usize, expected: usize },

    #[error("set-function value at subset 0x{subset:x} is invalid: {reason}")]
    BadValue { subset: u32, reason: String },

    #[error("operation requires a monotone set-function; violated at ({a:?}, {b:?})")]
    NotMonotone { a: Subset, b: Subset },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    #[error("rejection budget of {budget} attempts exhausted for generator family {family}")]
    RejectionBudget { family: &'static str, budget: usize },

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("simplex iteration cap of {cap} reached")]
    IterationLimit { cap: u64 },

    #[error("sandwich violation at subset 0x{subset:x}: {detail}")]
    SandwichViolation { subset: u32, detail: String },

    #[error("wrong Lorentz regime: {detail}")]
    WrongRegime { detail: String },

    #[error("step function is invalid at index {index}: {reason}")]
    BadStepFunction { index: usize, reason: String },

    #[error("quasi-norm spec failed a required property check: {detail}")]
    NormCheckFailed { detail: String },

    #[error("classification of the derived set-function failed: {detail}")]
    ClassificationFailed { detail: String },

    #[error("measure extraction fell short of the guaranteed mass: {detail}")]
    MassShortfall { detail: String },

    #[error("exact mode supports at most {max} domain atoms, got {got}")]
    ExactModeTooLarge { got: usize, max: usize },

    #[error("grid of {got} cells is too small, need at least {min}")]
    GridTooSmall { got: usize, min: usize },

    #[error("operator spec is invalid: {reason}")]
    BadOperator { reason: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
