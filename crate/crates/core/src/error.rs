use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent ({eq}, {et})")]
    InvalidExponent { eq: i64, et: i64 },
    #[error("coefficient overflow")]
    Overflow,
    #[error("m={m} and n={n} are not coprime positive integers")]
    NotCoprime { m: u32, n: u32 },
    #[error("diagram {0} does not fit below the diagonal")]
    NotBelowDiagonal(String),
    #[error("gap set is not a zero-normalized semimodule: {0}")]
    NotSemimodule(String),
    #[error("frame ({m},{n}) is not of the form (n+1, n)")]
    WrongShape { m: u32, n: u32 },
    #[error("m={m} is not of the form kn+1 or kn-1 for n={n}")]
    UnsupportedShape { m: u32, n: u32 },
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("vector is not in the image of G_m: {0}")]
    NotRealizable(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("point ({a}, {b}) lies outside the triangle T_{delta}")]
    OutsideTriangle { a: i64, b: i64, delta: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
