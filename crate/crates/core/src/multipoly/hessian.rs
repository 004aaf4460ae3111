//! Hessian determinants of homogeneous forms.

use super::{MultiPolyError, Poly};
use crate::field::Field;
use alloc::vec::Vec;

/// Determinant of the matrix of second partials of a homogeneous form of
/// degree `d >= 2`; homogeneous of degree `n(d-2)`.
///
/// Cofactor expansion for up to three variables, fraction-free elimination
/// over the polynomial ring beyond that.
pub fn hessian<F: Field>(f: &Poly<F>) -> Result<Poly<F>, MultiPolyError> {
    let d = f.homogeneous_degree()?;
    if d < 2 {
        return Err(MultiPolyError::DegreeTooSmall { min: 2 });
    }
    let n = f.nvars();
    let parts: Vec<Poly<F>> = (0..n).map(|j| f.partial(j)).collect();
    let second: Vec<Vec<Poly<F>>> = (0..n)
        .map(|i| (0..n).map(|j| parts[i].partial(j)).collect())
        .collect();
    if n <= 3 {
        Ok(cofactor_det(&second))
    } else {
        bareiss_poly_det(second)
    }
}

fn cofactor_det<F: Field>(m: &[Vec<Poly<F>>]) -> Poly<F> {
    let size = m.len();
    let nvars = m[0][0].nvars();
    if size == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero(nvars);
    for i in 0..size {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<F>>> = m
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = &m[i][0] * &cofactor_det(&minor);
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Fraction-free determinant over the polynomial ring: every division is by
/// an earlier pivot and is exact.
fn bareiss_poly_det<F: Field>(mut m: Vec<Vec<Poly<F>>>) -> Result<Poly<F>, MultiPolyError> {
    let n = m.len();
    let nvars = m[0][0].nvars();
    let mut sign_flip = false;
    let mut prev = Poly::constant(nvars, F::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pr) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Poly::zero(nvars));
            };
            m.swap(k, pr);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = Poly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip { det.scale(&F::one().neg()) } else { det })
}
