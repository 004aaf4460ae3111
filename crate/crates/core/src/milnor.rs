//! Graded Jacobian-ideal slices, the nondegeneracy test, socle
//! verification, the socle-coefficient solver, and assembly of the
//! associated form.
//!
//! For a nondegenerate form `f` of degree `d` in `n` variables the top
//! degree of the Milnor algebra is `nu = n(d-2)`. The degree-`nu` slice of
//! the Jacobian ideal has codimension one, with the Hessian spanning a
//! complement; writing each degree-`nu` monomial as an ideal element plus a
//! multiple of the Hessian yields the socle coefficients `mu`, and the
//! associated form is their multinomially weighted generating form on the
//! dual space.

use crate::exactla::ExactMatrix;
use crate::field::Field;
use crate::multipoly::{
    hessian, slice_basis, DualPoly, Exponent, MultiPolyError, Poly, SliceBasis,
};
use crate::scalars::Rat;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MilnorError {
    Poly(MultiPolyError),
    /// Slice degree below `d - 1`, where no multiplier space exists.
    SliceDegreeTooSmall { min: u32 },
    /// Operation requires a nondegenerate form.
    Degenerate,
    /// An internal contract failed; indicates a bug, never bad input.
    Internal(&'static str),
}

impl fmt::Display for MilnorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MilnorError::Poly(e) => write!(f, "{e}"),
            MilnorError::SliceDegreeTooSmall { min } => {
                write!(f, "slice degree must be at least {min}")
            }
            MilnorError::Degenerate => write!(f, "form is degenerate"),
            MilnorError::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for MilnorError {}

impl From<MultiPolyError> for MilnorError {
    fn from(e: MultiPolyError) -> Self {
        MilnorError::Poly(e)
    }
}

/// The degree-`k` slice of the Jacobian ideal of a form.
///
/// Columns of the generator matrix are the coordinate vectors of all
/// products `f_r * m_s` in the degree-`k` monomial basis, with `m_s`
/// running over the degree-`k-(d-1)` basis; column order is `(r, s)` with
/// monomials in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianSlice<F> {
    degree: u32,
    basis: SliceBasis,
    multipliers: SliceBasis,
    generators: ExactMatrix<F>,
}

impl<F: Field> JacobianSlice<F> {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Monomial basis of the ambient degree-`k` slice (the rows).
    pub fn basis(&self) -> &SliceBasis {
        &self.basis
    }

    /// Monomial basis of the multiplier space (columns come in `n` blocks).
    pub fn multipliers(&self) -> &SliceBasis {
        &self.multipliers
    }

    pub fn generators(&self) -> &ExactMatrix<F> {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.rank()
    }
}

/// Builds the degree-`k` Jacobian slice of a homogeneous form.
pub fn jacobian_slice<F: Field>(f: &Poly<F>, k: u32) -> Result<JacobianSlice<F>, MilnorError> {
    let d = f.homogeneous_degree()?;
    if d < 1 {
        return Err(MilnorError::Poly(MultiPolyError::DegreeTooSmall { min: 1 }));
    }
    if k < d - 1 {
        return Err(MilnorError::SliceDegreeTooSmall { min: d - 1 });
    }
    let n = f.nvars();
    let basis = slice_basis(n, k);
    let multipliers = slice_basis(n, k - (d - 1));
    let parts = f.partials()?;
    let mut cols: Vec<Vec<F>> = Vec::with_capacity(n * multipliers.len());
    for part in &parts {
        for m in multipliers.monomials() {
            let prod = part_times_monomial(part, m);
            let coords = basis
                .coordinates(&prod)
                .ok_or(MilnorError::Internal("product escapes the slice"))?;
            cols.push(coords);
        }
    }
    let generators = ExactMatrix::from_fn(basis.len(), cols.len(), |i, j| cols[j][i].clone());
    Ok(JacobianSlice {
        degree: k,
        basis,
        multipliers,
        generators,
    })
}

fn part_times_monomial<F: Field>(p: &Poly<F>, m: &Exponent) -> Poly<F> {
    let mono = Poly::monomial(p.nvars(), m.clone(), F::one()).expect("valid monomial");
    p * &mono
}

/// Decides nondegeneracy: the partials have no common zero away from the
/// origin exactly when the Jacobian ideal contains the whole slice one
/// degree above the socle.
pub fn is_nondegenerate<F: Field>(f: &Poly<F>) -> Result<bool, MilnorError> {
    let d = f.homogeneous_degree()?;
    if d < 3 {
        return Err(MilnorError::Poly(MultiPolyError::DegreeTooSmall { min: 3 }));
    }
    let n = f.nvars();
    let nu = n as u32 * (d - 2);
    let slice = jacobian_slice(f, nu + 1)?;
    Ok(slice.rank() == slice.basis().len())
}

/// Outcome of the socle verification at the top degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleReport {
    /// Codimension of the ideal slice in the full degree-`nu` space.
    pub codim: usize,
    /// Whether the Hessian lies in the ideal slice; contractually false for
    /// nondegenerate forms.
    pub hessian_in_w: bool,
}

/// Verifies the codimension-one contract of the top-degree ideal slice and
/// the complementarity of the Hessian.
pub fn socle_check<F: Field>(f: &Poly<F>) -> Result<SocleReport, MilnorError> {
    if !is_nondegenerate(f)? {
        return Err(MilnorError::Degenerate);
    }
    let d = f.homogeneous_degree()?;
    let n = f.nvars();
    let nu = n as u32 * (d - 2);
    let slice = jacobian_slice(f, nu)?;
    let h = hessian(f)?;
    let hcol = slice
        .basis()
        .coordinates(&h)
        .ok_or(MilnorError::Internal("hessian escapes the slice"))?;
    let hmat = ExactMatrix::from_fn(hcol.len(), 1, |i, _| hcol[i].clone());
    let rank_w = slice.generators().rank();
    let rank_wh = slice
        .generators()
        .hconcat(&hmat)
        .expect("matching rows")
        .rank();
    Ok(SocleReport {
        codim: slice.basis().len() - rank_w,
        hessian_in_w: rank_wh == rank_w,
    })
}

/// The socle coefficients: for every degree-`nu` exponent, the unique
/// scalar `mu` with `monomial = w + mu * H(f)` modulo the ideal slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuTable<F> {
    nvars: usize,
    degree: u32,
    socle_degree: u32,
    values: BTreeMap<Exponent, F>,
}

impl<F: Field> MuTable<F> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    pub fn get(&self, e: &Exponent) -> Option<&F> {
        self.values.get(e)
    }

    pub fn values(&self) -> &BTreeMap<Exponent, F> {
        &self.values
    }

    /// Entries in canonical (descending) monomial order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.values.iter().rev()
    }
}

/// Solves for all socle coefficients of `f` with one elimination.
///
/// The augmented matrix is `[generators | H(f) | I]`: one reduction
/// simultaneously expresses every degree-`nu` monomial over the generators
/// and the Hessian. The Hessian coordinate of each solution is unique even
/// though the generator part is not, and is read off the pivot row of the
/// Hessian column.
pub fn mu_coeffs<F: Field>(f: &Poly<F>) -> Result<MuTable<F>, MilnorError> {
    if !is_nondegenerate(f)? {
        return Err(MilnorError::Degenerate);
    }
    let d = f.homogeneous_degree()?;
    let n = f.nvars();
    let nu = n as u32 * (d - 2);
    let slice = jacobian_slice(f, nu)?;
    let h = hessian(f)?;
    let hcol = slice
        .basis()
        .coordinates(&h)
        .ok_or(MilnorError::Internal("hessian escapes the slice"))?;
    let size = slice.basis().len();
    let gcols = slice.generators().cols();
    let hmat = ExactMatrix::from_fn(size, 1, |i, _| hcol[i].clone());
    let aug = slice
        .generators()
        .hconcat(&hmat)
        .expect("matching rows")
        .hconcat(&ExactMatrix::identity(size))
        .expect("matching rows");
    let red = aug.rref();
    // the hessian column must be the unique pivot outside the generators
    let hrow = red
        .pivots
        .iter()
        .position(|&c| c == gcols)
        .ok_or(MilnorError::Internal("hessian column is not a pivot"))?;
    if red.pivots.iter().any(|&c| c > gcols && c < gcols + 1 + size) {
        return Err(MilnorError::Internal("monomial column became a pivot"));
    }
    let mut values = BTreeMap::new();
    for (s, e) in slice.basis().monomials().iter().enumerate() {
        values.insert(e.clone(), red.matrix.get(hrow, gcols + 1 + s).clone());
    }
    Ok(MuTable {
        nvars: n,
        degree: d,
        socle_degree: nu,
        values,
    })
}

/// The associated form of a nondegenerate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedForm<F> {
    pub nvars: usize,
    pub degree: u32,
    pub socle_degree: u32,
    pub mu: MuTable<F>,
    pub form: DualPoly<F>,
}

/// Assembles the associated form: the dual-space form whose coefficient on
/// `w^i` is the multinomial weight `nu!/(i_1! ... i_n!)` times `mu_i`.
pub fn associated_form<F: Field>(f: &Poly<F>) -> Result<AssociatedForm<F>, MilnorError> {
    let mu = mu_coeffs(f)?;
    let nu = mu.socle_degree();
    let nu_fact = crate::scalars::factorial(nu as u64);
    let mut form = Poly::zero(mu.nvars());
    let mut terms = Vec::new();
    for (e, v) in mu.values() {
        if v.is_zero() {
            continue;
        }
        let weight = Rat::from_ratio(nu_fact.clone(), e.factorial())
            .expect("factorials are nonzero");
        terms.push((e.clone(), v.mul(&F::from_rat(&weight))));
    }
    for (e, c) in terms {
        form = &form + &Poly::monomial(mu.nvars(), e, c).expect("valid monomial");
    }
    Ok(AssociatedForm {
        nvars: mu.nvars(),
        degree: mu.degree(),
        socle_degree: nu,
        mu,
        form: DualPoly::new(form),
    })
}
