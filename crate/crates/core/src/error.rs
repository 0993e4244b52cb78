use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division is not exact over the integers")]
    NotDivisible,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("invalid standard parameter ({sign}, {m}, {n})")]
    InvalidParameter { sign: char, m: u64, n: u64 },
    #[error("surgery coefficient {0} does not yield a lens space with |p| >= 2")]
    DegenerateSurgery(i64),
    #[error("surgery coefficient {p} is not r*s +- 1 for (r, s) = ({r}, {s})")]
    InvalidCoefficient { r: u64, s: u64, p: u64 },
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("modulus {0} exceeds the cyclotomic oracle limit {1}")]
    ModulusTooLarge(u64, u64),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("({sign}, 1, {n}) is a torus knot parameter")]
    TrivialParameter { sign: char, n: u64 },
    #[error("operands live in different quadratic rings")]
    RingMismatch,
    #[error("element {0} + {1}w is not primitive")]
    NotPrimitive(i64, i64),
    #[error("element {0} + {1}w is a unit")]
    UnitElement(i64, i64),
    #[error("Saito parameter {k} must lie in 1..{p}")]
    InvalidSaitoParameter { p: u64, k: u64 },
}
