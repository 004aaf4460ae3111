//! JSON builders. Coefficients are canonical rational strings, never
//! floats; exponents are integer arrays; integers that fit a 64-bit value
//! are numbers and fall back to strings beyond that. Output is byte-stable
//! across runs.

use assocform_core::contra::PencilReport;
use assocform_core::milnor::MuTable;
use assocform_core::multipoly::{DualPoly, Poly};
use assocform_core::scalars::{Rat, RatFun, UniPoly};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn bigint_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn exp_value(e: &assocform_core::multipoly::Exponent) -> Value {
    json!(e.entries())
}

/// `[{"exp": [...], "coeff": "..."}]` in canonical term order.
pub fn poly_value(p: &Poly<Rat>) -> Value {
    let entries: Vec<Value> = p
        .terms_desc()
        .map(|(e, c)| json!({"exp": exp_value(e), "coeff": c.to_string()}))
        .collect();
    json!(entries)
}

pub fn dual_value(p: &DualPoly<Rat>) -> Value {
    poly_value(p.as_poly())
}

/// The full socle-coefficient table, zeros included, in canonical order.
pub fn mu_value(mu: &MuTable<Rat>) -> Value {
    let entries: Vec<Value> = mu
        .iter_desc()
        .map(|(e, c)| json!({"exp": exp_value(e), "coeff": c.to_string()}))
        .collect();
    json!(entries)
}

pub fn unipoly_value(p: &UniPoly) -> Value {
    json!(p.to_string())
}

pub fn ratfun_value(f: &RatFun) -> Value {
    json!({"num": f.num().to_string(), "den": f.den().to_string()})
}

pub fn pencil_report_value(r: &PencilReport) -> Value {
    let mu: Vec<Value> = r
        .mu_funs
        .iter()
        .rev()
        .map(|(e, f)| {
            json!({
                "exp": exp_value(e),
                "num": f.num().to_string(),
                "den": f.den().to_string(),
            })
        })
        .collect();
    let factors: Vec<Value> = r
        .pole_data
        .iter()
        .map(|pd| {
            json!({
                "factor": pd.factor.to_string(),
                "vanishing_order": pd.vanishing_order,
                "max_pole_order": pd.max_pole_order,
            })
        })
        .collect();
    json!({
        "n": r.nvars,
        "d": r.degree,
        "f0": crate::print::form_string(&r.base),
        "g": crate::print::form_string(&r.direction),
        "mu": mu,
        "degeneracy": r.degeneracy.to_string(),
        "degeneracy_is_discriminant": r.degeneracy_is_discriminant,
        "factors": factors,
        "p_lower": r.p_lower,
    })
}
