//! Dense exact linear algebra over a coefficient field.
//!
//! Rank, determinant, linear solve and nullspace via exact elimination.
//! Determinants use fraction-free (Bareiss) elimination; reduction paths use
//! plain Gauss-Jordan with exact division, which keeps entries in canonical
//! reduced form after every pivot. Pivoting always takes the first nonzero
//! entry in column order, so eliminations are deterministic.

use crate::field::Field;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinAlgError {
    NotSquare,
    DimensionMismatch,
    /// The linear system has no solution.
    Inconsistent,
    /// Rows of unequal length.
    Ragged,
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinAlgError::NotSquare => write!(f, "matrix is not square"),
            LinAlgError::DimensionMismatch => write!(f, "dimension mismatch"),
            LinAlgError::Inconsistent => write!(f, "inconsistent linear system"),
            LinAlgError::Ragged => write!(f, "rows of unequal length"),
        }
    }
}

impl core::error::Error for LinAlgError {}

/// A dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of a Gauss-Jordan reduction: the reduced matrix and the pivot
/// column indices in row order.
pub struct Rref<F> {
    pub matrix: ExactMatrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeroed(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeroed(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinAlgError::Ragged);
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut F {
        &mut self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &ExactMatrix<F>) -> Result<Self, LinAlgError> {
        if self.rows != other.rows {
            return Err(LinAlgError::DimensionMismatch);
        }
        Ok(ExactMatrix::from_fn(
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// The submatrix keeping the given columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        ExactMatrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn mul_vec(&self, x: &[F]) -> Result<Vec<F>, LinAlgError> {
        if x.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch);
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (j, xj) in x.iter().enumerate() {
                    acc = acc.add(&self.get(i, j).mul(xj));
                }
                acc
            })
            .collect())
    }

    pub fn matmul(&self, other: &ExactMatrix<F>) -> Result<Self, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch);
        }
        Ok(ExactMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        }))
    }

    /// Reduced row echelon form with the deterministic first-nonzero pivot
    /// rule.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = F::one().div(m.get(r, c));
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                *m.get_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&factor.mul(m.get(r, j)));
                    *m.get_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<F, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(F::one());
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = F::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(pr) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return Ok(F::zero());
                };
                m.swap_rows(k, pr);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m
                        .get(k, k)
                        .mul(m.get(i, j))
                        .sub(&m.get(i, k).mul(m.get(k, j)));
                    // division is exact by the Bareiss identity
                    *m.get_mut(i, j) = num.div(&prev);
                }
                *m.get_mut(i, k) = F::zero();
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if sign_flip { d.neg() } else { d })
    }

    /// One exact solution of `self * x = b`, verified by substitution.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch);
        }
        let rhs = ExactMatrix {
            rows: self.rows,
            cols: 1,
            data: b.to_vec(),
        };
        let aug = self.hconcat(&rhs)?;
        let red = aug.rref();
        if red.pivots.last() == Some(&self.cols) {
            return Err(LinAlgError::Inconsistent);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &col) in red.pivots.iter().enumerate() {
            x[col] = red.matrix.get(row, self.cols).clone();
        }
        // postcondition: exact substitution check
        let check = self.mul_vec(&x)?;
        assert!(
            check.iter().zip(b).all(|(u, v)| u == v),
            "solve postcondition violated"
        );
        Ok(x)
    }

    /// A basis of the right nullspace, one vector per free column, in
    /// column order.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let red = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in red.pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec_ = vec![F::zero(); self.cols];
            vec_[free] = F::one();
            for (row, &col) in red.pivots.iter().enumerate() {
                vec_[col] = red.matrix.get(row, free).neg();
            }
            basis.push(vec_);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rat;

    fn m(rows: &[&[i64]]) -> ExactMatrix<Rat> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(m(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(ExactMatrix::<Rat>::zeroed(3, 4).rank(), 0);
        // coefficients of {3 z1^2, 3 z2^2} in the degree-2 basis
        assert_eq!(m(&[&[3, 0], &[0, 0], &[0, 3]]).rank(), 2);
    }

    #[test]
    fn det_examples() {
        assert_eq!(ExactMatrix::<Rat>::identity(3).det().unwrap(), Rat::one());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), Rat::from_int(-1));
        assert!(m(&[&[1, 2, 3], &[4, 5, 6]]).det().is_err());
        assert_eq!(
            m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]).det().unwrap(),
            Rat::from_int(4)
        );
        // singular
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), Rat::zero());
    }

    #[test]
    fn solve_and_nullspace() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let b = [Rat::from_int(5), Rat::from_int(-7)];
        assert_eq!(a.solve(&b).unwrap(), b.to_vec());

        // inconsistent: x + y = 1, x + y = 2
        let a = m(&[&[1, 1], &[1, 1]]);
        let b = [Rat::from_int(1), Rat::from_int(2)];
        assert_eq!(a.solve(&b), Err(LinAlgError::Inconsistent));

        // nullspace of [1 1] is spanned by (-1, 1)
        let ns = m(&[&[1, 1]]).nullspace();
        assert_eq!(ns, vec![vec![Rat::from_int(-1), Rat::from_int(1)]]);
        for v in m(&[&[2, 3, 5], &[7, 11, 13]]).nullspace() {
            let prod = m(&[&[2, 3, 5], &[7, 11, 13]]).mul_vec(&v).unwrap();
            assert!(prod.iter().all(Rat::is_zero));
        }
    }
}
