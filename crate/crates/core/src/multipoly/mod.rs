//! Exact multivariate homogeneous polynomials: arithmetic, differentiation,
//! Hessian determinants, graded monomial bases, the linear group action on
//! forms and on dual forms, and the polar pairing.

mod action;
mod exponent;
mod hessian;
mod poly;

pub use action::{gl_act, gl_act_dual, GroupElement};
pub use exponent::Exponent;
pub use hessian::hessian;
pub use poly::{DualPoly, Homogeneity, Poly};

use crate::field::Field;
use crate::scalars::Rat;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultiPolyError {
    /// Operands live in different variable counts.
    NVarsMismatch,
    /// An exponent vector has the wrong length for its polynomial.
    WrongExponentLength,
    /// Polynomials need at least two variables.
    NVarsTooSmall,
    ZeroPolynomial,
    NotHomogeneous,
    /// Homogeneous degree below the operation's minimum.
    DegreeTooSmall { min: u32 },
    /// Polar pairing of forms of different degrees.
    DegreeMismatch,
    /// A group element must be invertible.
    Singular,
    /// Internal: exact polynomial division left a remainder.
    NotDivisible,
}

impl fmt::Display for MultiPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiPolyError::NVarsMismatch => write!(f, "variable counts differ"),
            MultiPolyError::WrongExponentLength => write!(f, "exponent length mismatch"),
            MultiPolyError::NVarsTooSmall => write!(f, "need at least two variables"),
            MultiPolyError::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            MultiPolyError::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            MultiPolyError::DegreeTooSmall { min } => {
                write!(f, "homogeneous degree must be at least {min}")
            }
            MultiPolyError::DegreeMismatch => write!(f, "degrees differ"),
            MultiPolyError::Singular => write!(f, "matrix is singular"),
            MultiPolyError::NotDivisible => write!(f, "polynomial division is not exact"),
        }
    }
}

impl core::error::Error for MultiPolyError {}

/// The ordered monomial basis of the degree-`k` forms in `n` variables.
///
/// Monomials are listed in the canonical order: lexicographic descending on
/// exponent sequences. The count equals `C(k + n - 1, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceBasis {
    nvars: usize,
    degree: u32,
    monomials: Vec<Exponent>,
}

impl SliceBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[Exponent] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Position of an exponent in the canonical order.
    pub fn index_of(&self, e: &Exponent) -> Option<usize> {
        // monomials are sorted descending
        self.monomials.binary_search_by(|probe| e.cmp(probe)).ok()
    }

    /// Coordinate vector of a polynomial in this basis; `None` if any term
    /// falls outside the slice.
    pub fn coordinates<F: Field>(&self, p: &Poly<F>) -> Option<Vec<F>> {
        let mut out = alloc::vec![F::zero(); self.len()];
        for (e, c) in p.terms() {
            let idx = self.index_of(e)?;
            out[idx] = c.clone();
        }
        Some(out)
    }
}

/// Enumerates all degree-`k` exponents in `n` variables in canonical order.
pub fn slice_basis(n: usize, k: u32) -> SliceBasis {
    assert!(n >= 1, "need at least one variable");
    let mut monomials = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    descend(&mut monomials, &mut prefix, n, k);
    debug_assert_eq!(
        num_traits::ToPrimitive::to_usize(&crate::scalars::binomial(
            k as u64 + n as u64 - 1,
            k as u64
        ))
        .expect("basis size fits usize"),
        monomials.len()
    );
    SliceBasis {
        nvars: n,
        degree: k,
        monomials,
    }
}

fn descend(out: &mut Vec<Exponent>, prefix: &mut Vec<u32>, slots: usize, rem: u32) {
    if slots == 1 {
        prefix.push(rem);
        out.push(Exponent::new(prefix.clone()));
        prefix.pop();
        return;
    }
    for e in (0..=rem).rev() {
        prefix.push(e);
        descend(out, prefix, slots - 1, rem - e);
        prefix.pop();
    }
}

/// Applies a dual form as a constant-coefficient differential operator to a
/// form of the same degree; the result is the scalar polar pairing.
///
/// On monomials the pairing is diagonal: `<w^a, z^b> = a! * [a == b]`.
pub fn polar_pair<F: Field>(p: &DualPoly<F>, q: &Poly<F>) -> Result<F, MultiPolyError> {
    if p.nvars() != q.nvars() {
        return Err(MultiPolyError::NVarsMismatch);
    }
    match (p.as_poly().homogeneity(), q.homogeneity()) {
        (Homogeneity::Zero, _) | (_, Homogeneity::Zero) => return Ok(F::zero()),
        (Homogeneity::Homogeneous(a), Homogeneity::Homogeneous(b)) if a == b => {}
        (Homogeneity::Mixed, _) | (_, Homogeneity::Mixed) => {
            return Err(MultiPolyError::NotHomogeneous)
        }
        _ => return Err(MultiPolyError::DegreeMismatch),
    }
    let mut acc = F::zero();
    for (e, c) in p.as_poly().terms() {
        let Some(qc) = q.terms().get(e) else {
            continue;
        };
        let weight = Rat::from_bigint(e.factorial());
        acc = acc.add(&c.mul(qc).mul(&F::from_rat(&weight)));
    }
    Ok(acc)
}
