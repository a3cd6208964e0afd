use crate::exact_arith::{BigInt, BigRational};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected 2 or 3 generators, got {0}")]
    Arity(usize),

    #[error("generator {0} must be greater than 1")]
    GeneratorTooSmall(i64),

    #[error("generators have gcd {0}, expected 1")]
    NotCoprime(u64),

    #[error("generators {0:?} are not minimal: one of them is representable by the others")]
    NotMinimal(Vec<u64>),

    #[error("{operation} needs {expected} generators, got {got}")]
    WrongGeneratorCount {
        operation: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid higher-order Bernoulli query: {0}")]
    InvalidQuery(String),

    #[error("{0}")]
    Precondition(String),

    /// The minimal relations produced an inconsistent invariant.
    #[error("relations [{equation}]: {detail}")]
    Relations {
        equation: &'static str,
        detail: String,
    },

    #[error("[{equation}] closed form is not an integer at n={n}: {value}")]
    NonIntegral {
        equation: &'static str,
        n: usize,
        value: BigRational,
    },

    #[error("[{equation}] disagreement at n={n}: closed form {closed}, reference {reference}")]
    Disagreement {
        equation: &'static str,
        n: usize,
        closed: BigInt,
        reference: BigInt,
    },
}

impl Error {
    /// Input errors are the caller's fault; everything else is a failed
    /// verification or an internal inconsistency.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Arity(_)
                | Error::GeneratorTooSmall(_)
                | Error::NotCoprime(_)
                | Error::NotMinimal(_)
                | Error::WrongGeneratorCount { .. }
                | Error::InvalidQuery(_)
                | Error::Precondition(_)
        )
    }
}
