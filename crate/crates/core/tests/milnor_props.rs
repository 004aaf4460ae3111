//! Property suites for the socle solver: equivariance, socle contract,
//! scaling, the weight round trip and regularity along pencils.

mod common;

use assocform_core::field::Field;
use assocform_core::milnor::{associated_form, mu_coeffs, socle_check};
use assocform_core::multipoly::{gl_act, gl_act_dual, Poly};
use assocform_core::scalars::{Rat, RatFun, UniPoly};
use common::{exp, random_group_element, random_nondegenerate_form, rng};

#[test]
fn equivariance_on_random_forms() {
    let mut rng = rng(0x5eed_0101);
    for &(n, d) in &[(2usize, 3u32), (2, 4), (3, 3)] {
        for _ in 0..4 {
            let c = random_group_element(n, &mut rng);
            let f = random_nondegenerate_form(n, d, &mut rng);
            let lhs = associated_form(&gl_act(&c, &f).unwrap()).unwrap().form;
            let det_sq = c.det() * c.det();
            let rhs = gl_act_dual(&c, &associated_form(&f).unwrap().form)
                .unwrap()
                .scale(&det_sq);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn socle_contract_on_random_forms() {
    let mut rng = rng(0x5eed_0102);
    for &(n, d) in &[(2usize, 3u32), (2, 4), (2, 5), (3, 3)] {
        for _ in 0..5 {
            let f = random_nondegenerate_form(n, d, &mut rng);
            let report = socle_check(&f).unwrap();
            assert_eq!(report.codim, 1);
            assert!(!report.hessian_in_w);
        }
    }
}

#[test]
fn scaling_law() {
    // associated_form(lambda f) = lambda^-n associated_form(f)
    let mut rng = rng(0x5eed_0103);
    for &(n, d) in &[(2usize, 3u32), (2, 4), (3, 3)] {
        let f = random_nondegenerate_form(n, d, &mut rng);
        for lam in [Rat::from_int(2), Rat::new(-3, 2), Rat::from_int(7)] {
            let lhs = associated_form(&f.scale(&lam)).unwrap().form;
            let rhs = associated_form(&f)
                .unwrap()
                .form
                .scale(&lam.pow(-(n as i32)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn mu_round_trip_through_weights() {
    // dividing each form coefficient by its multinomial weight recovers mu
    let mut rng = rng(0x5eed_0104);
    for &(n, d) in &[(2usize, 3u32), (2, 4), (3, 3)] {
        for _ in 0..3 {
            let f = random_nondegenerate_form(n, d, &mut rng);
            let af = associated_form(&f).unwrap();
            let nu_fact = assocform_core::scalars::factorial(af.socle_degree as u64);
            for (e, mu) in af.mu.values() {
                let weight =
                    Rat::from_ratio(nu_fact.clone(), e.factorial()).unwrap();
                let coeff = af.form.as_poly().coeff(e);
                assert_eq!(&coeff.div(&weight), mu);
            }
        }
    }
}

#[test]
fn regularity_along_pencil() {
    // symbolic socle coefficients specialize to the pointwise ones at every
    // nondegenerate parameter value
    let f0 = Poly::from_terms(2, [(exp(&[3, 0]), Rat::one()), (exp(&[0, 3]), Rat::one())]).unwrap();
    let g = Poly::monomial(2, exp(&[2, 1]), Rat::one()).unwrap();
    let t = RatFun::var();
    let pencil = &f0.map_coeffs(|c| RatFun::from_rat(c.clone()))
        + &g.map_coeffs(|c| RatFun::from_rat(c.clone())).scale(&t);
    let symbolic = mu_coeffs(&pencil).unwrap();
    for tv in [1i64, -1, 2, -2, 3, 5] {
        let tval = Rat::from_int(tv);
        let ft = &f0 + &g.scale(&tval);
        let pointwise = mu_coeffs(&ft).unwrap();
        for (e, fun) in symbolic.values() {
            let want = pointwise.get(e).unwrap();
            assert_eq!(&fun.eval(&tval).unwrap(), want, "exponent {e:?} at t = {tv}");
        }
    }
}

#[test]
fn pencil_symbolic_solve_matches_closed_forms() {
    // frozen closed forms for the cubic pencil, derived by hand elimination
    let f0 = Poly::from_terms(2, [(exp(&[3, 0]), Rat::one()), (exp(&[0, 3]), Rat::one())]).unwrap();
    let g = Poly::monomial(2, exp(&[2, 1]), Rat::one()).unwrap();
    let t = RatFun::var();
    let pencil = &f0.map_coeffs(|c| RatFun::from_rat(c.clone()))
        + &g.map_coeffs(|c| RatFun::from_rat(c.clone())).scale(&t);
    let mu = mu_coeffs(&pencil).unwrap();
    let mu11 = RatFun::new(
        UniPoly::constant(Rat::from_int(3)),
        UniPoly::from_ints(&[108, 0, 0, 16]),
    )
    .unwrap();
    let mu20 = RatFun::new(
        UniPoly::from_ints(&[0, -1]),
        UniPoly::from_ints(&[54, 0, 0, 8]),
    )
    .unwrap();
    assert_eq!(mu.get(&exp(&[1, 1])), Some(&mu11));
    assert_eq!(mu.get(&exp(&[2, 0])), Some(&mu20));
}
