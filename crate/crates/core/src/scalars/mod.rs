//! Exact scalar arithmetic: arbitrary-precision rationals, univariate
//! polynomials and rational functions in one parameter `t`, and rational
//! function reconstruction from point samples.

mod rat;
mod ratfun;
mod reconstruct;
mod unipoly;

pub use rat::Rat;
pub use ratfun::RatFun;
pub use reconstruct::{reconstruct_ratfun, ReconstructError};
pub use unipoly::UniPoly;

use alloc::string::String;
use core::fmt;
use num_bigint::BigInt;

/// Errors from scalar arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    ZeroDenominator,
    /// gcd of two zero polynomials is undefined.
    GcdOfZeros,
    /// Squarefree decomposition of the zero polynomial is undefined.
    SquarefreeOfZero,
    /// Evaluation of a rational function at a pole.
    EvalAtPole,
    /// Valuation with respect to a constant (or zero) factor.
    InvalidFactor,
    /// Malformed textual rational.
    Parse(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::ZeroDenominator => write!(f, "zero denominator"),
            ScalarError::GcdOfZeros => write!(f, "gcd of two zero polynomials"),
            ScalarError::SquarefreeOfZero => {
                write!(f, "squarefree decomposition of the zero polynomial")
            }
            ScalarError::EvalAtPole => write!(f, "evaluation at a pole"),
            ScalarError::InvalidFactor => write!(f, "valuation factor must be nonconstant"),
            ScalarError::Parse(s) => write!(f, "malformed rational: {s}"),
        }
    }
}

impl core::error::Error for ScalarError {}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
