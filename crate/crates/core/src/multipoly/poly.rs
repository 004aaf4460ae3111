//! The polynomial carrier type and its arithmetic.

use super::{Exponent, MultiPolyError};
use crate::field::Field;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

/// Homogeneity classification of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u32),
    Mixed,
}

/// An exact multivariate polynomial over the coefficient field `F`.
///
/// Terms map exponents to nonzero coefficients. Iterating the map in
/// reverse gives the canonical (lexicographic descending) term order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<F> {
    nvars: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 2, "polynomials need at least two variables");
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Exponent::new(alloc::vec![0; nvars]), c);
        }
        p
    }

    pub fn monomial(nvars: usize, e: Exponent, c: F) -> Result<Self, MultiPolyError> {
        Poly::from_terms(nvars, [(e, c)])
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponent, F)>,
    ) -> Result<Self, MultiPolyError> {
        if nvars < 2 {
            return Err(MultiPolyError::NVarsTooSmall);
        }
        let mut p = Poly {
            nvars,
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(MultiPolyError::WrongExponentLength);
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, F> {
        &self.terms
    }

    /// Terms in canonical (descending) monomial order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exponent) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    /// Leading term in the canonical order.
    pub fn lead(&self) -> Option<(&Exponent, &F)> {
        self.terms.last_key_value()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::degree).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut deg = None;
        for e in self.terms.keys() {
            match deg {
                None => deg = Some(e.degree()),
                Some(d) if d == e.degree() => {}
                Some(_) => return Homogeneity::Mixed,
            }
        }
        match deg {
            None => Homogeneity::Zero,
            Some(d) => Homogeneity::Homogeneous(d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32, MultiPolyError> {
        match self.homogeneity() {
            Homogeneity::Zero => Err(MultiPolyError::ZeroPolynomial),
            Homogeneity::Homogeneous(d) => Ok(d),
            Homogeneity::Mixed => Err(MultiPolyError::NotHomogeneous),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.mul(c)))
                .collect(),
        }
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> Poly<G> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<G: Field, E>(
        &self,
        mut f: impl FnMut(&F) -> Result<G, E>,
    ) -> Result<Poly<G>, E> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Partial derivative with respect to variable `j` (0-based).
    pub fn partial(&self, j: usize) -> Poly<F> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let Some(down) = e.step_down(j) else {
                continue;
            };
            let mult = F::from_rat(&crate::scalars::Rat::from_int(e.get(j) as i64));
            out.add_term(down, c.mul(&mult));
        }
        out
    }

    /// All `n` partial derivatives of a homogeneous form of degree `d >= 1`;
    /// each is homogeneous of degree `d - 1`.
    pub fn partials(&self) -> Result<Vec<Poly<F>>, MultiPolyError> {
        let d = self.homogeneous_degree()?;
        if d < 1 {
            return Err(MultiPolyError::DegreeTooSmall { min: 1 });
        }
        Ok((0..self.nvars).map(|j| self.partial(j)).collect())
    }

    pub fn pow(&self, e: u32) -> Poly<F> {
        let mut acc = Poly::constant(self.nvars, F::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by a nonzero divisor; errors if the division leaves a
    /// remainder.
    pub fn exact_div(&self, div: &Poly<F>) -> Result<Poly<F>, MultiPolyError> {
        if self.nvars != div.nvars {
            return Err(MultiPolyError::NVarsMismatch);
        }
        if div.is_zero() {
            return Err(MultiPolyError::NotDivisible);
        }
        let (dlead_e, dlead_c) = div.lead().expect("nonzero divisor");
        let dlead_e = dlead_e.clone();
        let dlead_c = dlead_c.clone();
        let mut quot = Poly::zero(self.nvars);
        let mut rem = self.clone();
        while let Some((rlead_e, rlead_c)) = rem.lead() {
            let Some(qe) = rlead_e.checked_sub(&dlead_e) else {
                return Err(MultiPolyError::NotDivisible);
            };
            let qc = rlead_c.div(&dlead_c);
            let t = Poly::monomial(self.nvars, qe, qc)?;
            rem = &rem - &(&t * div);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    fn add_term(&mut self, e: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }
}

impl<F: Field> Add<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Sub<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }
}

impl<F: Field> Mul<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca.mul(cb));
            }
        }
        out
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }
}

/// A form on the dual space: same carrier as [`Poly`], variables read as
/// dual coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualPoly<F> {
    poly: Poly<F>,
}

impl<F: Field> DualPoly<F> {
    pub fn new(poly: Poly<F>) -> Self {
        DualPoly { poly }
    }

    pub fn zero(nvars: usize) -> Self {
        DualPoly {
            poly: Poly::zero(nvars),
        }
    }

    pub fn as_poly(&self) -> &Poly<F> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<F> {
        self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &F) -> Self {
        DualPoly {
            poly: self.poly.scale(c),
        }
    }
}
