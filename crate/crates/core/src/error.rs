use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be a positive integer, got 0")]
    ZeroModulus,
    #[error("{a} is not a unit modulo {n}")]
    NotAUnit { a: u64, n: u64 },
    #[error("{d} does not divide {n}")]
    NotADivisor { d: u64, n: u64 },
    #[error("{p} is not an odd prime")]
    NotAnOddPrime { p: u64 },
    #[error("exponent must be at least {min}, got {m}")]
    ExponentTooSmall { m: u32, min: u32 },
    #[error("{a} listed more than once")]
    DuplicateElement { a: u64 },
    #[error("no value assigned to variable x{index}")]
    MissingVariable { index: u64 },
    #[error("{what} is too large ({value} > {limit})")]
    TooLarge { what: &'static str, value: u64, limit: u64 },
    #[error("subset size {k} exceeds n = {n}")]
    SubsetSizeTooLarge { k: u64, n: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
