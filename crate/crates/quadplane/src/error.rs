//! Crate-wide error type.

use std::fmt;

/// Errors surfaced by the exact-arithmetic kernel and the map-analysis layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division of rationals by zero.
    DivisionByZero,
    /// A rational was constructed or parsed with denominator zero.
    ZeroDenominator,
    /// A string did not parse as `n` or `n/d`.
    ParseRational(String),
    /// An operation that needs a nonzero polynomial received the zero polynomial.
    ZeroPolynomial,
    /// gcd(0, 0) is undefined.
    GcdOfZeroPolynomials,
    /// The fiber of the requested target contains a positive-dimensional
    /// component (eliminant resultant vanishes identically).
    DegenerateFiber(String),
    /// `invert` was called on a verdict without an inverse.
    NotInvertible(String),
    /// A documented precondition was violated.
    Precondition(String),
    /// Malformed user input (JSON schema, flags, out-of-range values).
    MalformedInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroDenominator => write!(f, "denominator is zero"),
            Error::ParseRational(s) => write!(f, "cannot parse rational from {s:?}"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::GcdOfZeroPolynomials => write!(f, "gcd(0, 0) is undefined"),
            Error::DegenerateFiber(why) => write!(f, "degenerate fiber: {why}"),
            Error::NotInvertible(why) => write!(f, "map is not invertible: {why}"),
            Error::Precondition(why) => write!(f, "precondition violated: {why}"),
            Error::MalformedInput(why) => write!(f, "malformed input: {why}"),
        }
    }
}

impl std::error::Error for Error {}
