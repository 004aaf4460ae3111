//! Canonical textual form of polynomials: terms in descending monomial
//! order, rational coefficients, `*` between coefficient and variables.
//! Parsing the printed form reproduces the polynomial.

use assocform_core::multipoly::{DualPoly, Poly};
use assocform_core::scalars::Rat;
use std::fmt::Write;

/// Renders a polynomial using the given variable letter.
pub fn poly_string(p: &Poly<Rat>, letter: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms_desc().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        let mut mono = String::new();
        for (j, &exp) in e.entries().iter().enumerate() {
            if exp == 0 {
                continue;
            }
            if !mono.is_empty() {
                mono.push('*');
            }
            write!(mono, "{letter}{}", j + 1).expect("write to string");
            if exp > 1 {
                write!(mono, "^{exp}").expect("write to string");
            }
        }
        if mono.is_empty() {
            write!(out, "{mag}").expect("write to string");
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            write!(out, "{mag}*{mono}").expect("write to string");
        }
    }
    out
}

/// Forms print with `z` variables.
pub fn form_string(p: &Poly<Rat>) -> String {
    poly_string(p, 'z')
}

/// Dual forms print with `w` variables to keep the two spaces apart.
pub fn dual_string(p: &DualPoly<Rat>) -> String {
    poly_string(p.as_poly(), 'w')
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use assocform_core::multipoly::Exponent;

    fn e(v: &[u32]) -> Exponent {
        Exponent::from_slice(v)
    }

    #[test]
    fn spec_examples() {
        let p = Poly::monomial(2, e(&[1, 1]), Rat::new(1, 18)).unwrap();
        assert_eq!(form_string(&p), "1/18*z1*z2");
        assert_eq!(form_string(&Poly::zero(2)), "0");
        let p =
            Poly::from_terms(2, [(e(&[3, 0]), Rat::one()), (e(&[0, 3]), Rat::one())]).unwrap();
        assert_eq!(form_string(&p), "z1^3 + z2^3");
    }

    #[test]
    fn signs_and_constants() {
        let p = Poly::from_terms(
            2,
            [
                (e(&[3, 0]), Rat::from_int(-1)),
                (e(&[1, 2]), Rat::new(1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(form_string(&p), "-z1^3 + 1/2*z1*z2^2");
        let c = Poly::constant(2, Rat::new(-7, 3));
        assert_eq!(form_string(&c), "-7/3");
    }

    #[test]
    fn print_parse_round_trip() {
        let p = Poly::from_terms(
            3,
            [
                (e(&[2, 0, 1]), Rat::new(-5, 4)),
                (e(&[0, 3, 0]), Rat::one()),
                (e(&[1, 1, 1]), Rat::from_int(-2)),
            ],
        )
        .unwrap();
        let text = form_string(&p);
        assert_eq!(parse_poly(&text, 3).unwrap(), p);
    }
}
