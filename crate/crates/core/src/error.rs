use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: String, modulus: String },

    #[error("denominator of {value} is divisible by {p}")]
    DenominatorDivisible { value: String, p: u64 },

    #[error("valuation of zero is undefined")]
    ZeroInput,

    #[error("{p}-adic valuation {valuation} is below -1")]
    ValuationTooLow { p: u64, valuation: i64 },

    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),

    #[error("two routes disagree for {what}: {left} vs {right}")]
    FormulaMismatch {
        what: String,
        left: String,
        right: String,
    },

    #[error("{what} is not covered at modulus p^{e} (k = {k})")]
    Unsupported { what: &'static str, k: i64, e: u32 },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("check `{id}` needs p >= {min_prime}, got {p}")]
    PrimeTooSmall { id: String, p: u64, min_prime: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
