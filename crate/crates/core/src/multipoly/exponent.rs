//! Monomial exponent vectors.

use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;

/// The exponent vector of a monomial in `n` variables.
///
/// Ordering is lexicographic on the entries, so descending iteration gives
/// the canonical monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn from_slice(entries: &[u32]) -> Self {
        Exponent(entries.to_vec())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Entrywise sum; panics on length mismatch.
    pub fn add(&self, other: &Exponent) -> Exponent {
        assert_eq!(self.0.len(), other.0.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Entrywise difference, or `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Exponent)
    }

    /// Decrement entry `i`, or `None` if it is already zero.
    pub fn step_down(&self, i: usize) -> Option<Exponent> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Exponent(e))
    }

    /// The product of the factorials of the entries.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for &e in &self.0 {
            acc *= crate::scalars::factorial(e as u64);
        }
        acc
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
