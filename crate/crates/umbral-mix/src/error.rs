//! Error type shared by the series, umbral and family layers.

use std::fmt;

/// Errors raised by exact series and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division `a / b` where the numerator vanishes to a lower order
    /// than the denominator, so the quotient is not a power series.
    DivisionOrder {
        numerator_order: Option<usize>,
        denominator_order: usize,
    },
    /// Division by a series that is zero up to its cap.
    ZeroDivisor,
    /// Composition with an inner series that has a nonzero constant term.
    NotDelta,
    /// A series was asked for more coefficients than its cap retains.
    CapExhausted { cap: usize, needed: usize },
    /// A family parameter violates its domain (zero Barnes parameter,
    /// lambda = 1, empty parameter list, ...).
    InvalidParams(String),
    /// An operation was invoked outside its index domain.
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionOrder {
                numerator_order,
                denominator_order,
            } => match numerator_order {
                Some(n) => write!(
                    f,
                    "division order mismatch: numerator has order {n}, denominator has order {denominator_order}"
                ),
                None => write!(
                    f,
                    "division order mismatch: numerator is zero to cap, denominator has order {denominator_order}"
                ),
            },
            Error::ZeroDivisor => write!(f, "division by a series that is zero to its cap"),
            Error::NotDelta => write!(f, "composition requires an inner series of order >= 1"),
            Error::CapExhausted { cap, needed } => {
                write!(f, "series cap {cap} is too small: need coefficients up to degree {needed}")
            }
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
