//! Coefficient-field abstraction shared by the polynomial and linear
//! algebra modules.
//!
//! The whole engine is generic over one exact field: plain rationals for
//! ordinary computations, rational functions in the pencil parameter for
//! one-parameter families. Mixing fields is a type error, not a runtime
//! condition.

use crate::scalars::Rat;
use core::fmt;

/// An exact field of coefficients.
///
/// Implementations must be canonical: structural equality has to coincide
/// with mathematical equality.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division. Panics on a zero divisor; callers check first.
    fn div(&self, rhs: &Self) -> Self;
    /// Embed a rational constant.
    fn from_rat(r: &Rat) -> Self;
}
