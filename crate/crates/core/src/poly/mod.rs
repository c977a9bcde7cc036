//! Exact polynomial arithmetic over the rationals, in two representations.
//!
//! [`FactoredPoly`] is a monic polynomial stored as the multiset of its
//! rational roots; multiplication, cancellation and argument shifts are
//! multiset operations and never lose the factorization. [`DensePoly`] is a
//! coefficient vector and supports the additive operations (subtraction,
//! division with remainder, gcd) that factored form cannot express.
//!
//! Conversion factored -> dense always succeeds; dense -> factored succeeds
//! exactly when the polynomial splits over the rationals.

mod dense;
mod factored;

pub use dense::DensePoly;
pub use factored::FactoredPoly;

use std::fmt;

/// Errors from polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Multiset division requested but the divisor's roots are not contained
    /// in the dividend's.
    NotDivisible,
    /// Division with remainder by the zero polynomial.
    DivideByZero,
    /// Root extraction was requested for the zero polynomial.
    ZeroPolynomial,
    /// An irreducible factor of degree >= 2 remains after exhausting all
    /// rational-root candidates.
    NotSplitOverRationals,
}

impl PolyError {
    pub fn name(&self) -> &'static str {
        match self {
            PolyError::NotDivisible => "NotDivisible",
            PolyError::DivideByZero => "DivideByZero",
            PolyError::ZeroPolynomial => "ZeroPolynomial",
            PolyError::NotSplitOverRationals => "NotSplitOverRationals",
        }
    }
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NotDivisible => write!(f, "root multiset is not contained in the dividend"),
            PolyError::DivideByZero => write!(f, "division by the zero polynomial"),
            PolyError::ZeroPolynomial => write!(f, "the zero polynomial has no factorization"),
            PolyError::NotSplitOverRationals => {
                write!(f, "polynomial does not split into rational linear factors")
            }
        }
    }
}

impl std::error::Error for PolyError {}
