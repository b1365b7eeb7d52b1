use std::fmt;

/// Errors raised by series, Riordan-array, and identity-harness operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Reciprocal (or a construction needing an invertible series) was asked
    /// of a series whose constant term is zero.
    ZeroConstantTerm,
    /// A compositional inverse was asked of a series that is not of order
    /// exactly one (c0 = 0, c1 != 0).
    NotOrderOne,
    /// Composition f(g) requires g(0) = 0.
    InnerSeriesHasConstantTerm,
    /// An entry beyond the truncation order of a Riordan array was requested.
    OutOfTruncation { n: usize, order: usize },
    /// The denominator series of the pseudo-involution criterion is
    /// identically zero up to the truncation order.
    DegenerateDenominator,
    /// Binomial coefficients require a non-negative lower index.
    NegativeLowerIndex(i64),
    /// A sequence-family parameter is out of range (e.g. m < 1).
    BadParameter(String),
    /// A division of power series would have a pole at t = 0.
    SeriesNotDivisible,
    /// shift_transform needs at least two terms.
    TooShort,
    /// The evaluation grid is too small to certify the identity at its
    /// degree bounds.
    GridTooSmall { needed_x: usize, needed_y: usize, got_x: usize, got_y: usize },
    /// Unknown sequence, array, or identity name.
    UnknownName(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroConstantTerm => write!(f, "series has zero constant term"),
            Error::NotOrderOne => write!(f, "series is not of order one"),
            Error::InnerSeriesHasConstantTerm => {
                write!(f, "inner series of a composition must have zero constant term")
            }
            Error::OutOfTruncation { n, order } => {
                write!(f, "row {} is beyond the truncation order {}", n, order)
            }
            Error::DegenerateDenominator => {
                write!(f, "criterion denominator is identically zero up to the truncation order")
            }
            Error::NegativeLowerIndex(k) => {
                write!(f, "binomial lower index must be non-negative, got {}", k)
            }
            Error::BadParameter(msg) => write!(f, "bad parameter: {}", msg),
            Error::SeriesNotDivisible => {
                write!(f, "series quotient would have a pole at t = 0")
            }
            Error::TooShort => write!(f, "sequence has too few terms"),
            Error::GridTooSmall { needed_x, needed_y, got_x, got_y } => write!(
                f,
                "grid of {}x{} distinct values cannot certify the identity; need at least {}x{}",
                got_x, got_y, needed_x, needed_y
            ),
            Error::UnknownName(name) => write!(f, "unknown name: {}", name),
        }
    }
}

impl std::error::Error for Error {}
