//! Contravariant profile arithmetic, binary discriminants via Sylvester
//! resultants, degree-bound calculators for the minimal discriminant
//! exponent, explicit breakpoint polynomials for four and five variables,
//! and the pencil pole probe certifying lower bounds on that exponent.

use crate::exactla::{ExactMatrix, LinAlgError};
use crate::field::Field;
use crate::milnor::{is_nondegenerate, jacobian_slice, mu_coeffs, MilnorError, MuTable};
use crate::multipoly::{hessian, slice_basis, DualPoly, Exponent, MultiPolyError, Poly};
use crate::scalars::{
    binomial, factorial, reconstruct_ratfun, Rat, RatFun, ReconstructError, ScalarError, UniPoly,
};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContraError {
    Poly(MultiPolyError),
    Milnor(MilnorError),
    Scalar(ScalarError),
    LinAlg(LinAlgError),
    Reconstruct(ReconstructError),
    /// Operation requires a nondegenerate form.
    Degenerate,
    /// Operation is defined for binary forms only.
    NotBinary,
    /// The exponent `p` must be positive.
    InvalidExponent,
    /// Needs `n >= 2` and `d >= 3`.
    DomainTooSmall,
    /// Explicit breakpoint polynomials exist only for `n` in `{4, 5}`.
    UnsupportedDimension(u32),
    /// A requested probe exponent is not a socle-degree monomial.
    BadProbeExponent,
    /// Too few nondegenerate sample points within the scan budget.
    SampleBudgetExhausted,
    /// Degree bounds too large for pointwise sampling.
    TooLargeForSampling,
    /// A reconstructed function failed held-out validation.
    HoldoutValidationFailed,
    Internal(&'static str),
}

impl fmt::Display for ContraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContraError::Poly(e) => write!(f, "{e}"),
            ContraError::Milnor(e) => write!(f, "{e}"),
            ContraError::Scalar(e) => write!(f, "{e}"),
            ContraError::LinAlg(e) => write!(f, "{e}"),
            ContraError::Reconstruct(e) => write!(f, "{e}"),
            ContraError::Degenerate => write!(f, "form is degenerate"),
            ContraError::NotBinary => write!(f, "operation requires a binary form"),
            ContraError::InvalidExponent => write!(f, "exponent p must be positive"),
            ContraError::DomainTooSmall => write!(f, "need n >= 2 and d >= 3"),
            ContraError::UnsupportedDimension(n) => {
                write!(f, "no explicit breakpoint polynomials for n = {n}")
            }
            ContraError::BadProbeExponent => {
                write!(f, "probe exponent is not a socle-degree monomial")
            }
            ContraError::SampleBudgetExhausted => {
                write!(f, "not enough nondegenerate sample points in the scan budget")
            }
            ContraError::TooLargeForSampling => {
                write!(f, "degree bounds too large for pointwise sampling")
            }
            ContraError::HoldoutValidationFailed => {
                write!(f, "reconstruction failed held-out validation")
            }
            ContraError::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for ContraError {}

impl From<MultiPolyError> for ContraError {
    fn from(e: MultiPolyError) -> Self {
        ContraError::Poly(e)
    }
}

impl From<MilnorError> for ContraError {
    fn from(e: MilnorError) -> Self {
        match e {
            MilnorError::Degenerate => ContraError::Degenerate,
            other => ContraError::Milnor(other),
        }
    }
}

impl From<ScalarError> for ContraError {
    fn from(e: ScalarError) -> Self {
        ContraError::Scalar(e)
    }
}

impl From<LinAlgError> for ContraError {
    fn from(e: LinAlgError) -> Self {
        ContraError::LinAlg(e)
    }
}

impl From<ReconstructError> for ContraError {
    fn from(e: ReconstructError) -> Self {
        ContraError::Reconstruct(e)
    }
}

/// Degree, class and weight of the contravariant obtained by clearing the
/// `p`-th discriminant power from the associated-form morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContravariantProfile {
    pub n: u32,
    pub d: u32,
    pub p: u32,
    /// Degree in the form's coefficients: `n p (d-1)^(n-1) - n`.
    pub degree: BigInt,
    /// Class, the degree in the dual variables: `n (d-2)`.
    pub class: BigInt,
    /// Weight of the determinant power: `p d (d-1)^(n-1) - 2`.
    pub weight: BigInt,
}

pub fn contravariant_profile(n: u32, d: u32, p: u32) -> Result<ContravariantProfile, ContraError> {
    if n < 2 || d < 3 {
        return Err(ContraError::DomainTooSmall);
    }
    if p == 0 {
        return Err(ContraError::InvalidExponent);
    }
    let pow = BigInt::from(d - 1).pow(n - 1);
    let degree = BigInt::from(n) * BigInt::from(p) * &pow - BigInt::from(n);
    let class = BigInt::from(n) * BigInt::from(d - 2);
    let weight = BigInt::from(p) * BigInt::from(d) * &pow - BigInt::from(2);
    Ok(ContravariantProfile {
        n,
        d,
        p,
        degree,
        class,
        weight,
    })
}

/// The two degree invariants controlling the minimal discriminant exponent,
/// with the dimension-only and per-degree upper bounds derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: u32,
    pub d: u32,
    /// Degree of the socle solve's square-system determinant:
    /// `C(n(d-1)-1, n-1) + n - 1`.
    pub delta1: BigInt,
    /// Degree of the discriminant: `n (d-1)^(n-1)`.
    pub delta2: BigInt,
    /// Dimension-only bound `floor(n^(n-2) / (n-1)!)`.
    pub universal: BigInt,
    /// Per-degree bound `max(1, floor(delta1 / delta2))`.
    pub refined: BigInt,
}

pub fn bounds(n: u32, d: u32) -> Result<BoundsReport, ContraError> {
    if n < 2 || d < 3 {
        return Err(ContraError::DomainTooSmall);
    }
    let delta1 = binomial((n as u64) * (d as u64 - 1) - 1, n as u64 - 1) + BigInt::from(n - 1);
    let delta2 = BigInt::from(n) * BigInt::from(d - 1).pow(n - 1);
    let universal = universal_bound(n)?;
    let quotient = &delta1 / &delta2;
    let refined = if quotient < BigInt::from(1) {
        BigInt::from(1)
    } else {
        quotient
    };
    Ok(BoundsReport {
        n,
        d,
        delta1,
        delta2,
        universal,
        refined,
    })
}

/// The dimension-only bound `floor(n^(n-2) / (n-1)!)` in exact integer
/// arithmetic.
pub fn universal_bound(n: u32) -> Result<BigInt, ContraError> {
    if n < 2 {
        return Err(ContraError::DomainTooSmall);
    }
    Ok(BigInt::from(n).pow(n - 2) / factorial(n as u64 - 1))
}

/// One explicit breakpoint polynomial: `poly(d) < 0` exactly when
/// `delta1 < multiplier * delta2`, i.e. when the refined bound is below
/// `multiplier`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropPolynomial {
    pub name: &'static str,
    pub multiplier: u32,
    pub poly: UniPoly,
}

impl PropPolynomial {
    /// Sign of the polynomial at an integer point: -1, 0 or 1.
    pub fn sign_at(&self, d: u32) -> i8 {
        let v = self.poly.eval(&Rat::from_int(d as i64));
        if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        }
    }
}

/// The explicit breakpoint polynomials for four and five variables, listed
/// with decreasing multiplier.
pub fn prop_polynomials(n: u32) -> Result<Vec<PropPolynomial>, ContraError> {
    match n {
        4 => Ok(alloc::vec![PropPolynomial {
            name: "F",
            multiplier: 2,
            poly: UniPoly::from_ints(&[-36, 71, -36, 4]),
        }]),
        5 => Ok(alloc::vec![
            PropPolynomial {
                name: "F1",
                multiplier: 5,
                poly: UniPoly::from_ints(&[504, -1170, 955, -270, 5]),
            },
            PropPolynomial {
                name: "F2",
                multiplier: 4,
                poly: UniPoly::from_ints(&[528, -1266, 1099, -366, 29]),
            },
            PropPolynomial {
                name: "F3",
                multiplier: 3,
                poly: UniPoly::from_ints(&[552, -1362, 1243, -462, 53]),
            },
            PropPolynomial {
                name: "F4",
                multiplier: 2,
                poly: UniPoly::from_ints(&[576, -1458, 1387, -558, 77]),
            },
        ]),
        other => Err(ContraError::UnsupportedDimension(other)),
    }
}

/// Discriminant of a binary form as the Sylvester resultant of its two
/// partials; vanishes exactly on degenerate forms and is homogeneous of
/// degree `2(d-1)` in the coefficients. The normalization constant relating
/// it to the abstract discriminant is never relied upon.
pub fn discriminant_binary<F: Field>(f: &Poly<F>) -> Result<F, ContraError> {
    if f.nvars() != 2 {
        return Err(ContraError::NotBinary);
    }
    let d = f.homogeneous_degree()?;
    if d < 3 {
        return Err(ContraError::Poly(MultiPolyError::DegreeTooSmall { min: 3 }));
    }
    let parts = f.partials()?;
    let m = (d - 1) as usize;
    let a = binary_coeff_vector(&parts[0], m);
    let b = binary_coeff_vector(&parts[1], m);
    let size = 2 * m;
    let mut s = ExactMatrix::zeroed(size, size);
    for i in 0..m {
        for (j, c) in a.iter().enumerate() {
            *s.get_mut(i, i + j) = c.clone();
        }
        for (j, c) in b.iter().enumerate() {
            *s.get_mut(m + i, i + j) = c.clone();
        }
    }
    Ok(s.det()?)
}

/// Coefficients of a degree-`m` binary form, index `i` holding the
/// coefficient of `z1^(m-i) z2^i`.
fn binary_coeff_vector<F: Field>(p: &Poly<F>, m: usize) -> Vec<F> {
    let mut out = alloc::vec![F::zero(); m + 1];
    for (e, c) in p.terms() {
        out[e.get(1) as usize] = c.clone();
    }
    out
}

/// The contravariant evaluated on a binary form: the `p`-th discriminant
/// power times the associated form.
pub fn delta_p_phi<F: Field>(f: &Poly<F>, p: u32) -> Result<DualPoly<F>, ContraError> {
    if p == 0 {
        return Err(ContraError::InvalidExponent);
    }
    if f.nvars() != 2 {
        return Err(ContraError::NotBinary);
    }
    let disc = discriminant_binary(f)?;
    let af = crate::milnor::associated_form(f)?;
    let mut scale = F::one();
    for _ in 0..p {
        scale = scale.mul(&disc);
    }
    Ok(af.form.scale(&scale))
}

/// Pole bookkeeping for one squarefree factor of the degeneracy polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleDatum {
    pub factor: UniPoly,
    /// Vanishing order of the degeneracy polynomial at the factor.
    pub vanishing_order: u32,
    /// Largest pole order over all reconstructed socle coefficients.
    pub max_pole_order: u32,
}

/// Result of probing the socle coefficients along a pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilReport {
    pub nvars: usize,
    pub degree: u32,
    pub base: Poly<Rat>,
    pub direction: Poly<Rat>,
    /// Reconstructed socle coefficients as functions of the parameter.
    pub mu_funs: BTreeMap<Exponent, RatFun>,
    /// For binary forms the discriminant along the pencil; otherwise the
    /// determinant of the socle solve's square subsystem, a multiple of the
    /// degenerate locus with an unknown cofactor.
    pub degeneracy: UniPoly,
    pub degeneracy_is_discriminant: bool,
    pub pole_data: Vec<PoleDatum>,
    /// Certified lower bound on the minimal discriminant exponent; zero
    /// means no pole was witnessed. Absent unless the degeneracy polynomial
    /// is a genuine discriminant (binary forms only).
    pub p_lower: Option<u32>,
}

/// Deterministic sample sequence 1, -1, 2, -2, 3, ...
fn sample_point(k: usize) -> Rat {
    let magnitude = (k / 2 + 1) as i64;
    Rat::from_int(if k.is_multiple_of(2) { magnitude } else { -magnitude })
}

/// Lifts the pencil `f0 + t g` to polynomial coefficients in `t`.
fn pencil_poly(f0: &Poly<Rat>, g: &Poly<Rat>) -> Poly<RatFun> {
    let lift0 = f0.map_coeffs(|c| RatFun::from_rat(c.clone()));
    let liftg = g.map_coeffs(|c| RatFun::from_unipoly(UniPoly::term(c.clone(), 1)));
    &lift0 + &liftg
}

/// Samples the socle coefficients of `f0 + t g` at deterministic rational
/// points, skipping degenerate members, reconstructs each requested
/// coefficient as a rational function with both degrees bounded by
/// `delta1`, validates on held-out samples, and reads pole orders off the
/// squarefree factors of the degeneracy polynomial along the pencil.
pub fn pencil_probe(
    f0: &Poly<Rat>,
    g: &Poly<Rat>,
    exponents: Option<&[Exponent]>,
) -> Result<PencilReport, ContraError> {
    let n = f0.nvars();
    if g.nvars() != n {
        return Err(ContraError::Poly(MultiPolyError::NVarsMismatch));
    }
    let d = f0.homogeneous_degree()?;
    if !g.is_zero() && g.homogeneous_degree()? != d {
        return Err(ContraError::Poly(MultiPolyError::DegreeMismatch));
    }
    if !is_nondegenerate(f0)? {
        return Err(ContraError::Degenerate);
    }
    let nu = n as u32 * (d - 2);
    let basis = slice_basis(n, nu);
    let requested: Vec<Exponent> = match exponents {
        Some(list) => {
            for e in list {
                if basis.index_of(e).is_none() {
                    return Err(ContraError::BadProbeExponent);
                }
            }
            list.to_vec()
        }
        None => basis.monomials().to_vec(),
    };

    let delta1 = bounds(n as u32, d)?
        .delta1
        .to_usize()
        .ok_or(ContraError::TooLargeForSampling)?;
    let n_sys = 2 * delta1 + 2;
    let n_total = n_sys + 2;
    let scan_cap = 2 * n_total + 64;

    let mut samples: Vec<(Rat, MuTable<Rat>)> = Vec::with_capacity(n_total);
    let mut k = 0;
    while samples.len() < n_total && k < scan_cap {
        let t = sample_point(k);
        k += 1;
        let ft = f0 + &g.scale(&t);
        match mu_coeffs(&ft) {
            Ok(mu) => samples.push((t, mu)),
            Err(MilnorError::Degenerate) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    if samples.len() < n_total {
        return Err(ContraError::SampleBudgetExhausted);
    }

    let mut mu_funs = BTreeMap::new();
    for e in &requested {
        let pts: Vec<(Rat, Rat)> = samples
            .iter()
            .map(|(t, mu)| {
                let v = mu.get(e).expect("exponent validated against the basis");
                (t.clone(), v.clone())
            })
            .collect();
        let fun = reconstruct_ratfun(&pts[..n_sys], delta1, delta1)?;
        for (t, v) in &pts[n_sys..] {
            match fun.eval(t) {
                Ok(val) if &val == v => {}
                _ => return Err(ContraError::HoldoutValidationFailed),
            }
        }
        mu_funs.insert(e.clone(), fun);
    }

    let pencil = pencil_poly(f0, g);
    let (degeneracy, degeneracy_is_discriminant) = if n == 2 {
        let disc = discriminant_binary(&pencil)?;
        if !disc.is_polynomial() {
            return Err(ContraError::Internal("pencil discriminant has a denominator"));
        }
        (disc.num().clone(), true)
    } else {
        (pencil_slice_determinant(&pencil, nu)?, false)
    };

    let mut pole_data = Vec::new();
    for (factor, vanishing_order) in degeneracy.squarefree_decompose()? {
        let mut max_pole_order = 0;
        for fun in mu_funs.values() {
            max_pole_order = max_pole_order.max(fun.pole_order_at(&factor)?);
        }
        pole_data.push(PoleDatum {
            factor,
            vanishing_order,
            max_pole_order,
        });
    }
    let p_lower = if degeneracy_is_discriminant {
        Some(
            pole_data
                .iter()
                .map(|pd| pd.max_pole_order.div_ceil(pd.vanishing_order))
                .max()
                .unwrap_or(0),
        )
    } else {
        None
    };

    Ok(PencilReport {
        nvars: n,
        degree: d,
        base: f0.clone(),
        direction: g.clone(),
        mu_funs,
        degeneracy,
        degeneracy_is_discriminant,
        pole_data,
        p_lower,
    })
}

/// Determinant of the square subsystem used by the socle solve along the
/// pencil: the pivot columns of `[generators | hessian]` at the top degree.
/// Vanishes at every degenerate parameter value, possibly with extra
/// cofactor zeros, so it supports pole-order reports but never a lower
/// bound on the discriminant exponent.
fn pencil_slice_determinant(pencil: &Poly<RatFun>, nu: u32) -> Result<UniPoly, ContraError> {
    let slice = jacobian_slice(pencil, nu)?;
    let h = hessian(pencil)?;
    let hcol = slice
        .basis()
        .coordinates(&h)
        .ok_or(ContraError::Internal("hessian escapes the slice"))?;
    let size = slice.basis().len();
    let hmat = ExactMatrix::from_fn(size, 1, |i, _| hcol[i].clone());
    let aug = slice.generators().hconcat(&hmat)?;
    let red = aug.rref();
    if red.pivots.len() != size {
        return Err(ContraError::Internal("pencil slice lost rank generically"));
    }
    let square = aug.select_cols(&red.pivots);
    let det = square.det()?;
    if !det.is_polynomial() {
        return Err(ContraError::Internal("slice determinant has a denominator"));
    }
    Ok(det.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exponent {
        Exponent::from_slice(v)
    }

    fn binary_cubic() -> Poly<Rat> {
        Poly::from_terms(2, [(e(&[3, 0]), Rat::one()), (e(&[0, 3]), Rat::one())]).unwrap()
    }

    #[test]
    fn profile_examples() {
        let p = contravariant_profile(2, 3, 1).unwrap();
        assert_eq!(
            (p.degree, p.class, p.weight),
            (BigInt::from(2), BigInt::from(2), BigInt::from(4))
        );
        let p = contravariant_profile(3, 3, 1).unwrap();
        assert_eq!(
            (p.degree, p.class, p.weight),
            (BigInt::from(9), BigInt::from(3), BigInt::from(10))
        );
        let p = contravariant_profile(2, 4, 1).unwrap();
        assert_eq!(
            (p.degree, p.class, p.weight),
            (BigInt::from(4), BigInt::from(4), BigInt::from(10))
        );
        assert_eq!(
            contravariant_profile(2, 3, 0),
            Err(ContraError::InvalidExponent)
        );
    }

    #[test]
    fn bounds_examples() {
        let b = bounds(4, 3).unwrap();
        assert_eq!(b.delta1, BigInt::from(38));
        assert_eq!(b.delta2, BigInt::from(32));
        assert_eq!(b.universal, BigInt::from(2));
        assert_eq!(b.refined, BigInt::from(1));

        let b = bounds(5, 51).unwrap();
        assert_eq!(b.delta1, BigInt::from(156340630u64));
        assert_eq!(b.delta2, BigInt::from(31250000u64));
        assert_eq!(b.refined, BigInt::from(5));

        let b = bounds(6, 3).unwrap();
        assert_eq!(b.refined, BigInt::from(2));

        assert_eq!(bounds(1, 3), Err(ContraError::DomainTooSmall));
        assert_eq!(bounds(2, 2), Err(ContraError::DomainTooSmall));
    }

    #[test]
    fn universal_examples() {
        let got: Vec<BigInt> = (2..=6).map(|n| universal_bound(n).unwrap()).collect();
        let want: Vec<BigInt> = [1, 1, 2, 5, 10].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn prop_polynomial_spot_values() {
        let f = &prop_polynomials(4).unwrap()[0];
        assert_eq!(f.poly.eval(&Rat::from_int(6)), Rat::from_int(-42));
        assert_eq!(f.poly.eval(&Rat::from_int(7)), Rat::from_int(69));
        assert_eq!(f.sign_at(6), -1);
        assert_eq!(f.sign_at(7), 1);
        let f1 = &prop_polynomials(5).unwrap()[0];
        assert_eq!(f1.poly.eval(&Rat::from_int(3)), Rat::from_int(-1296));
        assert_eq!(
            prop_polynomials(6),
            Err(ContraError::UnsupportedDimension(6))
        );
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(
            discriminant_binary(&binary_cubic()).unwrap(),
            Rat::from_int(81)
        );
        let g = Poly::monomial(2, e(&[2, 1]), Rat::one()).unwrap();
        assert_eq!(discriminant_binary(&g).unwrap(), Rat::zero());
        let ternary = Poly::monomial(3, e(&[3, 0, 0]), Rat::one()).unwrap();
        assert_eq!(discriminant_binary(&ternary), Err(ContraError::NotBinary));
    }

    #[test]
    fn discriminant_along_pencil() {
        // z1^3 + z2^3 + t z1^2 z2 has resultant 12 t^3 + 81
        let t = RatFun::var();
        let one = RatFun::one();
        let f = Poly::from_terms(
            2,
            [
                (e(&[3, 0]), one.clone()),
                (e(&[0, 3]), one),
                (e(&[2, 1]), t),
            ],
        )
        .unwrap();
        let disc = discriminant_binary(&f).unwrap();
        assert_eq!(disc, RatFun::from_unipoly(UniPoly::from_ints(&[81, 0, 0, 12])));
    }

    #[test]
    fn delta_p_phi_examples() {
        // 81 * (1/18) w1 w2 = (9/2) w1 w2
        let got = delta_p_phi(&binary_cubic(), 1).unwrap();
        assert_eq!(
            got,
            DualPoly::new(Poly::monomial(2, e(&[1, 1]), Rat::new(9, 2)).unwrap())
        );
        // scaling by lambda multiplies by lambda^2 for binary cubics
        let lam = Rat::from_int(5);
        let scaled = delta_p_phi(&binary_cubic().scale(&lam), 1).unwrap();
        assert_eq!(
            scaled,
            got.scale(&(&lam * &lam))
        );
        assert_eq!(delta_p_phi(&binary_cubic(), 0), Err(ContraError::InvalidExponent));
        let g = Poly::monomial(2, e(&[2, 1]), Rat::one()).unwrap();
        assert_eq!(delta_p_phi(&g, 1), Err(ContraError::Degenerate));
    }

    #[test]
    fn sample_sequence() {
        let got: Vec<Rat> = (0..6).map(sample_point).collect();
        let want: Vec<Rat> = [1, -1, 2, -2, 3, -3]
            .iter()
            .map(|&x| Rat::from_int(x))
            .collect();
        assert_eq!(got, want);
    }
}
