use crate::Natural;

/// Errors produced by the arithmetic kernels, the classifier and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(Natural),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("3^{exponent} is not 1 modulo {modulus}; the order bound does not hold")]
    OrderBoundViolated { modulus: Natural, exponent: Natural },
    #[error("{0} is divisible by 3")]
    DivisibleByThree(Natural),
    #[error("exponent n = {0} is out of scope here (requires n >= 2)")]
    ExponentOutOfScope(u32),
    #[error("{0} is not an odd prime")]
    NotOddPrime(Natural),
    #[error("{0} exceeds the oracle's exact range; primality must be attested")]
    AttestationRequired(Natural),
    #[error("{value} exceeds the oracle's exact bound {bound}")]
    OutOfOracleRange { value: Natural, bound: Natural },
    #[error("factorization of {0} is incomplete")]
    IncompleteFactorization(Natural),
    #[error("GF(3, {n}) index above the cap {cap}")]
    IndexAboveCap { n: u32, cap: u32 },
    #[error("contract violated: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
