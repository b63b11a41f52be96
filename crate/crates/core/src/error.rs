use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative integer {0} is not a natural number")]
    Negative(i64),

    #[error("infinite complement: generators have gcd {gcd}")]
    InfiniteComplement { gcd: u64 },

    #[error("not closed: {a}+{b}={sum} missing")]
    NotClosed { a: u32, b: u32, sum: u32 },

    #[error("not an a-core coordinate system: {a} is not in the atom monoid")]
    NotAperyCoordinate { a: u32 },

    #[error("Frobenius number undefined for the natural numbers")]
    FrobeniusUndefined,

    #[error("modulus must be at least {min}, got {got}")]
    BadModulus { min: u32, got: u32 },

    #[error("b divisible by a: {a} divides {b}")]
    DivisibleByModulus { a: u32, b: u32 },

    #[error("unbounded cone: gcd of moduli is {gcd}")]
    UnboundedCone { gcd: u32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("{what} exceeds exhaustive budget ({value} > {cap})")]
    BudgetExceeded { what: &'static str, value: u32, cap: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("tuple length {got} does not match modulus {a} (expected {expected})")]
    TupleLength { a: u32, got: usize, expected: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
