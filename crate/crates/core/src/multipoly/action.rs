//! The linear group action on forms and on dual forms.
//!
//! A group element `C` acts on a form by `(Cf)(z) = f(z * C^{-t})` and on a
//! dual form by `(Cg)(w) = g(w * C)`, with `z`, `w` row vectors. The dual
//! convention is pinned by requiring the equivariance of the associated
//! form to hold on diagonal matrices (see the milnor module tests).

use super::{DualPoly, Exponent, MultiPolyError, Poly};
use crate::exactla::ExactMatrix;
use crate::field::Field;
use crate::scalars::Rat;
use alloc::vec::Vec;

/// An invertible rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    n: usize,
    entries: ExactMatrix<Rat>,
    det: Rat,
}

impl GroupElement {
    /// Builds a group element from rows, rejecting singular matrices.
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self, MultiPolyError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(MultiPolyError::NVarsMismatch);
        }
        let entries = ExactMatrix::from_rows(rows).map_err(|_| MultiPolyError::NVarsMismatch)?;
        let det = entries.det().expect("square by construction");
        if det.is_zero() {
            return Err(MultiPolyError::Singular);
        }
        Ok(GroupElement { n, entries, det })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, MultiPolyError> {
        GroupElement::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            n,
            entries: ExactMatrix::identity(n),
            det: Rat::one(),
        }
    }

    pub fn diagonal(entries: Vec<Rat>) -> Result<Self, MultiPolyError> {
        let n = entries.len();
        let mut det = Rat::one();
        let mut m = ExactMatrix::zeroed(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            if e.is_zero() {
                return Err(MultiPolyError::Singular);
            }
            det = &det * &e;
            *m.get_mut(i, i) = e;
        }
        Ok(GroupElement { n, entries: m, det })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn det(&self) -> &Rat {
        &self.det
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        self.entries.get(i, j)
    }

    pub fn mul(&self, other: &GroupElement) -> Result<Self, MultiPolyError> {
        if self.n != other.n {
            return Err(MultiPolyError::NVarsMismatch);
        }
        Ok(GroupElement {
            n: self.n,
            entries: self
                .entries
                .matmul(&other.entries)
                .expect("matching sizes"),
            det: &self.det * &other.det,
        })
    }

    pub fn transpose(&self) -> Self {
        GroupElement {
            n: self.n,
            entries: self.entries.transpose(),
            det: self.det.clone(),
        }
    }

    pub fn inverse(&self) -> Self {
        let aug = self
            .entries
            .hconcat(&ExactMatrix::identity(self.n))
            .expect("matching rows");
        let red = aug.rref();
        debug_assert_eq!(red.pivots.len(), self.n);
        let inv = ExactMatrix::from_fn(self.n, self.n, |i, j| {
            red.matrix.get(i, self.n + j).clone()
        });
        GroupElement {
            n: self.n,
            entries: inv,
            det: self.det.recip().expect("nonzero determinant"),
        }
    }
}

/// Substitute variable `j` by the linear form `subs[j]` throughout `f`.
fn substitute<F: Field>(f: &Poly<F>, subs: &[Poly<F>]) -> Poly<F> {
    let n = f.nvars();
    debug_assert_eq!(subs.len(), n);
    // cache powers of each substituted form up to the largest exponent used
    let mut max_pow = alloc::vec![0u32; n];
    for e in f.terms().keys() {
        for (j, slot) in max_pow.iter_mut().enumerate() {
            *slot = (*slot).max(e.get(j));
        }
    }
    let powers: Vec<Vec<Poly<F>>> = (0..n)
        .map(|j| {
            let mut acc = Vec::with_capacity(max_pow[j] as usize + 1);
            acc.push(Poly::constant(n, F::one()));
            for k in 1..=max_pow[j] {
                let prev = &acc[(k - 1) as usize];
                acc.push(prev * &subs[j]);
            }
            acc
        })
        .collect();
    let mut out = Poly::zero(n);
    for (e, c) in f.terms() {
        let mut term = Poly::constant(n, c.clone());
        for (j, var_powers) in powers.iter().enumerate() {
            let k = e.get(j);
            if k > 0 {
                term = &term * &var_powers[k as usize];
            }
        }
        out = &out + &term;
    }
    out
}

fn var<F: Field>(n: usize, i: usize) -> Poly<F> {
    let mut e = alloc::vec![0u32; n];
    e[i] = 1;
    Poly::monomial(n, Exponent::new(e), F::one()).expect("valid monomial")
}

/// The action on forms: `(Cf)(z) = f(z * C^{-t})`. Degrees are preserved.
pub fn gl_act<F: Field>(c: &GroupElement, f: &Poly<F>) -> Result<Poly<F>, MultiPolyError> {
    let n = f.nvars();
    if c.size() != n {
        return Err(MultiPolyError::NVarsMismatch);
    }
    let b = c.inverse().transpose();
    // variable j goes to (z * B)_j = sum_i B[i][j] z_i
    let subs: Vec<Poly<F>> = (0..n)
        .map(|j| {
            let mut l = Poly::zero(n);
            for i in 0..n {
                let coeff = F::from_rat(b.get(i, j));
                l = &l + &var::<F>(n, i).scale(&coeff);
            }
            l
        })
        .collect();
    Ok(substitute(f, &subs))
}

/// The action on dual forms: `(Cg)(w) = g(w * C)`.
pub fn gl_act_dual<F: Field>(
    c: &GroupElement,
    g: &DualPoly<F>,
) -> Result<DualPoly<F>, MultiPolyError> {
    let n = g.nvars();
    if c.size() != n {
        return Err(MultiPolyError::NVarsMismatch);
    }
    let subs: Vec<Poly<F>> = (0..n)
        .map(|j| {
            let mut l = Poly::zero(n);
            for i in 0..n {
                let coeff = F::from_rat(c.get(i, j));
                l = &l + &var::<F>(n, i).scale(&coeff);
            }
            l
        })
        .collect();
    Ok(DualPoly::new(substitute(g.as_poly(), &subs)))
}
