//! Error type shared by the exact-arithmetic and enumeration modules.

use alloc::string::String;
use core::fmt;

/// Errors reported by exact arithmetic, enumeration, and algebra operations.
///
/// Every operation in this crate is total on its documented domain; an `Err`
/// always means the *caller* left that domain (dividing by zero, evaluating a
/// Laurent polynomial at 0, exceeding an enumeration budget, ...), never that
/// an internal computation lost exactness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exact division was requested but the divisor does not divide the
    /// dividend in the ambient ring.
    NotDivisible,
    /// Division by the zero polynomial / rational function.
    DivisionByZero,
    /// A Laurent polynomial with negative exponents was evaluated at 0.
    ZeroPoint,
    /// The modulus passed to a prime-field constructor is not prime.
    NotPrime(u64),
    /// Two subspaces from different ambient spaces (or different fields) were
    /// combined.
    AmbientMismatch,
    /// An enumeration would touch more points than the configured budget.
    BudgetExceeded {
        /// Number of points the enumeration would have to visit.
        needed: u128,
        /// Configured ceiling.
        budget: u128,
    },
    /// A documented precondition of the operation was violated.
    Precondition(String),
    /// Text input did not conform to the element or word grammar.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotDivisible => write!(f, "exact division failed: not divisible"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroPoint => write!(f, "cannot evaluate at 0: negative exponents present"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::AmbientMismatch => write!(f, "subspaces live in different ambient spaces"),
            Error::BudgetExceeded { needed, budget } => {
                write!(
                    f,
                    "enumeration budget exceeded: needs {needed} points, budget {budget}"
                )
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}

/// Shorthand for `Result<T, Error>`.
pub type Result<T> = core::result::Result<T, Error>;
