use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable index {0} out of range (variables are x1..x64)")]
    VariableIndex(u64),

    #[error("variable count {0} out of range 1..=64")]
    VariableCount(u32),

    #[error("mask {mask:#x} does not fit in {n} variables")]
    MaskOutOfRange { mask: u64, n: u32 },

    #[error("{what} is limited to n <= {limit}, got n = {n}")]
    TooLarge {
        what: &'static str,
        n: u32,
        limit: u32,
    },

    #[error("brute-force coefficient expansion is limited to {limit} monomials, got {p}")]
    TooManyMonomials { p: usize, limit: usize },

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("node budget of {budget} exceeded; best half-Walsh magnitude so far is {best}")]
    NodeBudget { budget: u64, best: i128 },

    #[error("sub-vector enumeration of a weight-{weight} mask exceeds the limit of {limit}")]
    EnumerationGuard { weight: u32, limit: u32 },

    #[error("row w = 0 carries the weight, not a Walsh row of the distance function")]
    ZeroRow,

    #[error("solver and exhaustive oracle disagree: {0}")]
    VerificationMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
