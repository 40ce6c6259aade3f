use alloc::string::String;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("undefined resultant: both polynomials are zero")]
    UndefinedResultant,
    #[error("zero polynomial not allowed in {0}")]
    ZeroPolynomial(&'static str),
    #[error("constant polynomial not allowed in {0}")]
    ConstantPolynomial(&'static str),
    #[error("degree {found} too small: {op} needs degree >= {required}")]
    DegreeTooSmall {
        op: &'static str,
        found: usize,
        required: usize,
    },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("level too large: d^n = {size} exceeds the size cap {cap}")]
    LevelTooLarge { size: u128, cap: usize },
    #[error("symbolic scale not evaluable")]
    SymbolicScale,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not enough good primes below the word bound")]
    PrimesExhausted,
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("ambiguous value class, refine factorization: {0}")]
    AmbiguousClass(String),
    #[error("needs factor refinement: {0}")]
    NeedsRefinement(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;
