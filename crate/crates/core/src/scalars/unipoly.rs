//! Exact univariate polynomials in the parameter `t`.

use super::{Rat, ScalarError};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// A polynomial in `t` with rational coefficients.
///
/// Coefficients are indexed by power of `t`; trailing zeros are trimmed, so
/// the zero polynomial has an empty coefficient sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn term(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The parameter `t` itself.
    pub fn var() -> Self {
        UniPoly::term(Rat::one(), 1)
    }

    /// Convenience constructor from machine integers, index = power of `t`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rat::is_one)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rat::from_int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly), ScalarError> {
        let dd = div.degree().ok_or(ScalarError::DivisionByZero)?;
        let lead = div.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().expect("nonempty").checked_div(&lead)?;
            for (j, dc) in div.coeffs.iter().enumerate() {
                let delta = &c * dc;
                rem[k + j] = &rem[k + j] - &delta;
            }
            debug_assert!(rem.last().is_some_and(Rat::is_zero));
            rem.pop();
            while rem.last().is_some_and(Rat::is_zero) {
                rem.pop();
            }
            quot[k] = c;
            if rem.len() <= dd {
                break;
            }
        }
        Ok((UniPoly::new(quot), UniPoly { coeffs: rem }))
    }

    /// Monic greatest common divisor. Errors if both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly, ScalarError> {
        if self.is_zero() && other.is_zero() {
            return Err(ScalarError::GcdOfZeros);
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// Squarefree decomposition (Yun): pairwise-coprime monic squarefree
    /// factors with multiplicities whose weighted product recovers the
    /// input up to a nonzero constant. A nonzero constant decomposes into
    /// the empty list; zero is an error.
    pub fn squarefree_decompose(&self) -> Result<Vec<(UniPoly, u32)>, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::SquarefreeOfZero);
        }
        let a = self.monic();
        if a.is_constant() {
            return Ok(Vec::new());
        }
        let da = a.derivative();
        let g = a.gcd(&da)?;
        let mut out = Vec::new();
        let mut b = a.div_rem(&g)?.0.monic();
        let mut c = da.div_rem(&g)?.0;
        let mut d = &c - &b.derivative();
        let mut mult = 1u32;
        while !b.is_constant() {
            let p = b.gcd(&d)?;
            if !p.is_constant() {
                out.push((p.clone(), mult));
            }
            b = b.div_rem(&p)?.0.monic();
            c = d.div_rem(&p)?.0;
            d = &c - &b.derivative();
            mult += 1;
        }
        Ok(out)
    }

    /// The largest `v` with `factor^v` dividing `self` exactly.
    ///
    /// Errors on a zero polynomial or a constant factor.
    pub fn valuation(&self, factor: &UniPoly) -> Result<u32, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::SquarefreeOfZero);
        }
        if factor.is_constant() {
            return Err(ScalarError::InvalidFactor);
        }
        let mut v = 0u32;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(factor)?;
            if !r.is_zero() {
                return Ok(v);
            }
            v += 1;
            cur = q;
        }
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
