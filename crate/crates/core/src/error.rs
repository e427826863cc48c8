use thiserror::Error;

/// Errors raised by the arithmetic kernel and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("series is not invertible: constant term vanishes modulo {p}")]
    NotInvertible { p: u64 },
    #[error("prime {p} is out of the supported range (must be below 2^62)")]
    UnsupportedPrimeRange { p: u64 },
    #[error("prime bound {sigma} exceeds the supported range 2^62")]
    PrimeRangeExceeded { sigma: String },
    #[error("bad prime {p}: divides the leading coefficient or the discriminant")]
    BadPrime { p: u64 },
    #[error("no ordinary point in F_{p} for the reduced denominator")]
    NoOrdinaryPoint { p: u64 },
    #[error("denominator reduces to zero modulo {p}")]
    DegenerateDenominator { p: u64 },
    #[error("interpolated resultant is not integral")]
    InterpolationMismatch,
    #[error("Hermite-Pade identity violated: {0}")]
    IdentityViolation(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
