use alloc::string::String;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("argument must be positive")]
    Zero,
    #[error("{n} exceeds the factorization range of a sieve bounded by {bound}")]
    BeyondSieveBound { n: u64, bound: u64 },
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("({c}, {d}) does not define a point of P1(Z/{modulus}Z)")]
    NotAPoint { c: i64, d: i64, modulus: u64 },
    #[error("matrix is zero or has non-positive determinant")]
    NotInGl2Plus,
    #[error("lattice label lies at hyperdistance {got}, expected {expected}")]
    WrongHyperdistance { expected: u64, got: String },
    #[error("{divisor} does not divide {level}")]
    NotADivisor { divisor: u64, level: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("level {0} is not one of the genus-zero levels")]
    NotGenusZero(u64),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("embedded Belyi map for level {level} fails its checksum: stored {stored}, evaluated {evaluated}")]
    TranscriptionMismatch {
        level: u64,
        stored: String,
        evaluated: String,
    },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
