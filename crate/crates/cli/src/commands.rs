//! One function per subcommand, each returning machine-readable JSON plus
//! a one-line human summary for the diagnostic stream.

use crate::error::CliError;
use crate::json::{
    bigint_value, dual_value, mu_value, pencil_report_value, poly_value,
};
use crate::parse::parse_poly;
use crate::print::{dual_string, form_string};
use crate::threads::{par_map_ordered, thread_cap};
use assocform_core::contra::{
    bounds, contravariant_profile, delta_p_phi, discriminant_binary, pencil_probe,
};
use assocform_core::milnor::{associated_form, is_nondegenerate, mu_coeffs, socle_check};
use assocform_core::multipoly::{gl_act, gl_act_dual, hessian, Exponent, Homogeneity, Poly};
use assocform_core::scalars::Rat;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub struct CmdOutput {
    pub json: Value,
    pub summary: String,
}

/// Parses a form and reconciles it with the declared variable count and
/// optional declared degree.
fn parse_form(text: &str, n: usize, declared_d: Option<u32>) -> Result<Poly<Rat>, CliError> {
    let f = parse_poly(text, n)?;
    if let Some(d) = declared_d {
        match f.homogeneity() {
            Homogeneity::Homogeneous(actual) if actual == d => {}
            Homogeneity::Homogeneous(actual) => {
                return Err(CliError::Usage(format!(
                    "declared degree {d} but the form has degree {actual}"
                )))
            }
            Homogeneity::Zero => {
                return Err(CliError::Usage(format!(
                    "declared degree {d} but the form is zero"
                )))
            }
            Homogeneity::Mixed => {
                return Err(CliError::Usage(
                    "declared a degree but the form is not homogeneous".into(),
                ))
            }
        }
    }
    Ok(f)
}

fn degree_of(f: &Poly<Rat>) -> Result<u32, CliError> {
    Ok(f.homogeneous_degree()?)
}

pub fn assoc(n: usize, d: Option<u32>, form: &str) -> Result<CmdOutput, CliError> {
    let f = parse_form(form, n, d)?;
    let d = degree_of(&f)?;
    let af = associated_form(&f)?;
    Ok(CmdOutput {
        json: json!({
            "n": n,
            "d": d,
            "form": dual_value(&af.form),
            "mu": mu_value(&af.mu),
        }),
        summary: format!("associated form: {}", dual_string(&af.form)),
    })
}

pub fn mu(n: usize, d: Option<u32>, form: &str) -> Result<CmdOutput, CliError> {
    let f = parse_form(form, n, d)?;
    let d = degree_of(&f)?;
    let table = mu_coeffs(&f)?;
    Ok(CmdOutput {
        json: json!({
            "n": n,
            "d": d,
            "socle_degree": table.socle_degree(),
            "mu": mu_value(&table),
        }),
        summary: format!(
            "{} socle coefficients at degree {}",
            table.values().len(),
            table.socle_degree()
        ),
    })
}

pub fn hessian_cmd(n: usize, d: Option<u32>, form: &str) -> Result<CmdOutput, CliError> {
    let f = parse_form(form, n, d)?;
    let d = degree_of(&f)?;
    let h = hessian(&f)?;
    Ok(CmdOutput {
        json: json!({
            "n": n,
            "d": d,
            "hessian": poly_value(&h),
        }),
        summary: format!("hessian: {}", form_string(&h)),
    })
}

pub fn nondegenerate(n: usize, d: Option<u32>, form: &str) -> Result<CmdOutput, CliError> {
    let f = parse_form(form, n, d)?;
    let d = degree_of(&f)?;
    let answer = is_nondegenerate(&f)?;
    Ok(CmdOutput {
        json: json!({
            "n": n,
            "d": d,
            "nondegenerate": answer,
        }),
        summary: format!("form is {}", if answer { "nondegenerate" } else { "degenerate" }),
    })
}

pub fn socle(n: usize, d: Option<u32>, form: &str) -> Result<CmdOutput, CliError> {
    let f = parse_form(form, n, d)?;
    let d = degree_of(&f)?;
    let report = socle_check(&f)?;
    Ok(CmdOutput {
        json: json!({
            "n": n,
            "d": d,
            "codim": report.codim,
            "hessian_in_w": report.hessian_in_w,
        }),
        summary: format!(
            "ideal slice codimension {}, hessian complementary: {}",
            report.codim, !report.hessian_in_w
        ),
    })
}

pub fn discriminant(n: usize, d: Option<u32>, form: &str) -> Result<CmdOutput, CliError> {
    let f = parse_form(form, n, d)?;
    let d = degree_of(&f)?;
    let disc = discriminant_binary(&f)?;
    Ok(CmdOutput {
        json: json!({
            "n": n,
            "d": d,
            "discriminant": disc.to_string(),
        }),
        summary: format!("discriminant (resultant normalization): {disc}"),
    })
}

pub fn contravariant(
    n: u32,
    d: u32,
    p: u32,
    form: Option<&str>,
) -> Result<CmdOutput, CliError> {
    let profile = contravariant_profile(n, d, p)?;
    let mut out = json!({
        "n": n,
        "d": d,
        "p": p,
        "degree": bigint_value(&profile.degree),
        "class": bigint_value(&profile.class),
        "weight": bigint_value(&profile.weight),
    });
    let mut summary = format!(
        "contravariant profile: degree {}, class {}, weight {}",
        profile.degree, profile.class, profile.weight
    );
    if let Some(text) = form {
        let f = parse_form(text, n as usize, Some(d))?;
        let value = delta_p_phi(&f, p)?;
        out.as_object_mut()
            .expect("object")
            .insert("form".into(), dual_value(&value));
        summary = format!("contravariant value: {}", dual_string(&value));
    }
    Ok(CmdOutput { json: out, summary })
}

pub fn bounds_cmd(n: u32, d: u32) -> Result<CmdOutput, CliError> {
    let b = bounds(n, d)?;
    Ok(CmdOutput {
        json: json!({
            "n": n,
            "d": d,
            "delta1": bigint_value(&b.delta1),
            "delta2": bigint_value(&b.delta2),
            "universal": bigint_value(&b.universal),
            "refined": bigint_value(&b.refined),
        }),
        summary: format!(
            "delta1 = {}, delta2 = {}, universal bound {}, refined bound {}",
            b.delta1, b.delta2, b.universal, b.refined
        ),
    })
}

pub fn bounds_table(n: u32, dmin: u32, dmax: u32) -> Result<CmdOutput, CliError> {
    if dmin < 3 || dmax < dmin {
        return Err(CliError::Usage(format!(
            "need 3 <= dmin <= dmax, got dmin = {dmin}, dmax = {dmax}"
        )));
    }
    let cap = thread_cap()?;
    let degrees: Vec<u32> = (dmin..=dmax).collect();
    let rows = par_map_ordered(degrees, cap, |d| bounds(n, d).map(|b| (d, b)));
    let mut out_rows = Vec::with_capacity(rows.len());
    for row in rows {
        let (d, b) = row?;
        out_rows.push(json!({
            "d": d,
            "delta1": bigint_value(&b.delta1),
            "delta2": bigint_value(&b.delta2),
            "universal": bigint_value(&b.universal),
            "refined": bigint_value(&b.refined),
        }));
    }
    Ok(CmdOutput {
        json: json!({
            "n": n,
            "dmin": dmin,
            "dmax": dmax,
            "rows": out_rows,
        }),
        summary: format!("{} rows for n = {n}", dmax - dmin + 1),
    })
}

fn parse_probe_exponent(raw: &str, n: usize) -> Result<Exponent, CliError> {
    let entries: Result<Vec<u32>, _> = raw
        .split(',')
        .map(|part| part.trim().parse::<u32>())
        .collect();
    let entries =
        entries.map_err(|_| CliError::Usage(format!("bad exponent {raw:?}; expected like 1,1")))?;
    if entries.len() != n {
        return Err(CliError::Usage(format!(
            "exponent {raw:?} has {} entries, expected {n}",
            entries.len()
        )));
    }
    Ok(Exponent::new(entries))
}

pub fn probe(
    n: usize,
    d: Option<u32>,
    f0: &str,
    g: &str,
    exponents: &[String],
) -> Result<CmdOutput, CliError> {
    let f0 = parse_form(f0, n, d)?;
    let g = parse_poly(g, n)?;
    let subset: Option<Vec<Exponent>> = if exponents.is_empty() {
        None
    } else {
        Some(
            exponents
                .iter()
                .map(|raw| parse_probe_exponent(raw, n))
                .collect::<Result<_, _>>()?,
        )
    };
    let report = pencil_probe(&f0, &g, subset.as_deref())?;
    let summary = match report.p_lower {
        Some(0) => "no pole witnessed along the pencil".to_string(),
        Some(p) => format!("witnessed exponent lower bound p >= {p}"),
        None => "pole orders reported against a non-discriminant denominator".to_string(),
    };
    Ok(CmdOutput {
        json: pencil_report_value(&report),
        summary,
    })
}

pub fn equivariance_check(
    n: usize,
    d: u32,
    trials: u32,
    seed: u64,
) -> Result<CmdOutput, CliError> {
    if n < 2 || d < 3 {
        return Err(CliError::Domain("need n >= 2 and d >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let c = random_group_element(n, &mut rng);
        let f = random_nondegenerate_form(n, d, &mut rng);
        let lhs = associated_form(&gl_act(&c, &f)?)?.form;
        let det_sq = c.det() * c.det();
        let rhs = gl_act_dual(&c, &associated_form(&f)?.form)?.scale(&det_sq);
        if lhs != rhs {
            return Err(CliError::Domain(format!(
                "equivariance failed on trial {trial} for {}",
                form_string(&f)
            )));
        }
    }
    Ok(CmdOutput {
        json: json!({
            "n": n,
            "d": d,
            "trials": trials,
            "seed": seed,
            "equivariant": true,
        }),
        summary: format!("equivariance holds on {trials} random trials"),
    })
}

fn random_group_element(n: usize, rng: &mut ChaCha8Rng) -> assocform_core::multipoly::GroupElement {
    loop {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Rat::new(rng.gen_range(-3..=3), rng.gen_range(1..=2)))
                    .collect()
            })
            .collect();
        if let Ok(c) = assocform_core::multipoly::GroupElement::new(rows) {
            return c;
        }
    }
}

fn random_nondegenerate_form(n: usize, d: u32, rng: &mut ChaCha8Rng) -> Poly<Rat> {
    use assocform_core::multipoly::slice_basis;
    loop {
        let terms: Vec<(Exponent, Rat)> = slice_basis(n, d)
            .monomials()
            .iter()
            .map(|e| (e.clone(), Rat::from_int(rng.gen_range(-3..=3))))
            .collect();
        let f = Poly::from_terms(n, terms).expect("valid terms");
        if f.is_zero() {
            continue;
        }
        if is_nondegenerate(&f).expect("homogeneous by construction") {
            return f;
        }
    }
}
