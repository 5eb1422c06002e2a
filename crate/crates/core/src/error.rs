use thiserror::Error;

/// Crate-wide error type. Every fallible engine operation reports one of
/// these variants; the CLI maps them onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input where a nonzero value is required")]
    ZeroInput,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("input exceeds the supported desk scale (must fit in 64 bits after reduction)")]
    TooLarge,
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("matrix is singular with radical of dimension {radical_dim}")]
    Singular { radical_dim: usize },
    #[error("filtration depth {0} is not supported (maximum 3)")]
    UnsupportedDepth(u32),
    #[error("element has reduced norm zero and is not invertible")]
    ZeroDivisor,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("entry has the wrong symmetry for the involution")]
    WrongSymmetry,
    #[error("signs of the two entries do not match")]
    SignMismatch,
    #[error("operands live over different ambient algebras")]
    AmbientMismatch,
    #[error("grading error: cannot add slot {left} to slot {right}")]
    Grading { left: &'static str, right: &'static str },
    #[error("type slots of the two entries differ")]
    SlotMismatch,
    #[error("unsupported ambient for this operation: {0}")]
    UnsupportedAmbient(&'static str),
    #[error("explicit splitting is only available for the (1,b) family")]
    UnsupportedSplitting,
    #[error("{0} must be a non-square")]
    NotANonSquare(String),
    #[error("cocycle constraint {equation} is violated")]
    Cocycle { equation: &'static str },
    #[error("element is not positive (not a sum of generators)")]
    NotPositive,
    #[error("reduced dimension {dim} does not admit the split {p} + {q}")]
    BadDualitySplit { dim: i64, p: u32, q: u32 },
    #[error("element is outside the requested ideal")]
    NotInIdeal,
    #[error("dimension {0} exceeds the bound for this identity check")]
    DimensionTooLarge(i64),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
