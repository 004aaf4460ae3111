//! Rational function reconstruction from exact point samples.

use super::{Rat, RatFun, ScalarError, UniPoly};
use crate::exactla::ExactMatrix;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReconstructError {
    /// Fewer samples than `num_bound + den_bound + 2`.
    TooFewSamples { needed: usize, got: usize },
    DuplicateSamplePoint,
    /// No rational function within the degree bounds fits the samples.
    Inconsistent,
    /// The nullspace produced more than one normalized candidate.
    NonUnique,
    Scalar(ScalarError),
}

impl fmt::Display for ReconstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconstructError::TooFewSamples { needed, got } => {
                write!(f, "need at least {needed} samples, got {got}")
            }
            ReconstructError::DuplicateSamplePoint => write!(f, "duplicate sample point"),
            ReconstructError::Inconsistent => {
                write!(f, "no rational function within the degree bounds fits the samples")
            }
            ReconstructError::NonUnique => write!(f, "reconstruction is not unique"),
            ReconstructError::Scalar(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ReconstructError {}

impl From<ScalarError> for ReconstructError {
    fn from(e: ScalarError) -> Self {
        ReconstructError::Scalar(e)
    }
}

/// Reconstructs the unique rational function with `deg num <= num_bound`
/// and `deg den <= den_bound` through the given samples.
///
/// The samples are turned into the homogeneous linear system
/// `num(t_i) - v_i * den(t_i) = 0` in the unknown coefficients; any nonzero
/// kernel vector reduces to the same canonical rational function, which is
/// then validated against every sample. Sample points must be pairwise
/// distinct and none may be a pole of the target function.
pub fn reconstruct_ratfun(
    samples: &[(Rat, Rat)],
    num_bound: usize,
    den_bound: usize,
) -> Result<RatFun, ReconstructError> {
    let needed = num_bound + den_bound + 2;
    if samples.len() < needed {
        return Err(ReconstructError::TooFewSamples {
            needed,
            got: samples.len(),
        });
    }
    for (i, (t, _)) in samples.iter().enumerate() {
        if samples[i + 1..].iter().any(|(u, _)| u == t) {
            return Err(ReconstructError::DuplicateSamplePoint);
        }
    }

    let ncols = num_bound + 1 + den_bound + 1;
    let rows: Vec<Vec<Rat>> = samples
        .iter()
        .map(|(t, v)| {
            let mut row = Vec::with_capacity(ncols);
            let mut p = Rat::one();
            for _ in 0..=num_bound {
                row.push(p.clone());
                p = &p * t;
            }
            let mut p = -v;
            for _ in 0..=den_bound {
                row.push(p.clone());
                p = &p * t;
            }
            row
        })
        .collect();
    let matrix = ExactMatrix::from_rows(rows).expect("rows have equal length");

    let kernel = matrix.nullspace();
    if kernel.is_empty() {
        return Err(ReconstructError::Inconsistent);
    }

    let mut candidate: Option<RatFun> = None;
    for vec_ in &kernel {
        let num = UniPoly::new(vec_[..=num_bound].to_vec());
        let den = UniPoly::new(vec_[num_bound + 1..].to_vec());
        if den.is_zero() {
            // num interpolates zero at more points than its degree, so the
            // whole vector is zero; a basis never contains it
            return Err(ReconstructError::Inconsistent);
        }
        let f = RatFun::new(num, den)?;
        match &candidate {
            None => candidate = Some(f),
            Some(c) if *c != f => return Err(ReconstructError::NonUnique),
            Some(_) => {}
        }
    }
    let f = candidate.expect("nonempty kernel");

    // validate against every input sample
    for (t, v) in samples {
        match f.eval(t) {
            Ok(val) if &val == v => {}
            _ => return Err(ReconstructError::Inconsistent),
        }
    }
    Ok(f)
}
