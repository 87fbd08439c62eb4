//! Exact umbral-calculus toolkit for Barnes multiple Bernoulli and
//! poly-Bernoulli mixed-type polynomials.
//!
//! Everything is computed over arbitrary-precision rationals: truncated
//! formal power series carry the generating functions, polynomials carry the
//! families, and the identity suite compares left and right sides
//! coefficient by coefficient with zero tolerance.
//!
//! The narrative guide lives in `book/`; its code samples are compiled and
//! run as part of `cargo test` (see [`guide`]).

pub mod cli;
pub mod error;
pub mod families;
pub mod guide;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod series;
pub mod umbral;

pub use error::{Error, Result};
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::Series;
