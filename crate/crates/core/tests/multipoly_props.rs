//! Property suites for the polynomial layer: action laws, Hessian chain
//! rule, polar-pairing diagonality and the Euler identity.

mod common;

use assocform_core::multipoly::{
    gl_act, gl_act_dual, hessian, polar_pair, slice_basis, DualPoly, Exponent, Poly,
};
use assocform_core::scalars::Rat;
use common::{exp, random_form, random_group_element, rng};

#[test]
fn action_is_a_left_action() {
    let mut rng = rng(0x5eed_0001);
    for &(n, d) in &[(2u32, 3u32), (2, 4), (3, 3)] {
        for _ in 0..8 {
            let c1 = random_group_element(n as usize, &mut rng);
            let c2 = random_group_element(n as usize, &mut rng);
            let f = random_form(n as usize, d, &mut rng);
            let lhs = gl_act(&c1.mul(&c2).unwrap(), &f).unwrap();
            let rhs = gl_act(&c1, &gl_act(&c2, &f).unwrap()).unwrap();
            assert_eq!(lhs, rhs);

            let g = DualPoly::new(random_form(n as usize, d, &mut rng));
            let lhs = gl_act_dual(&c1.mul(&c2).unwrap(), &g).unwrap();
            let rhs = gl_act_dual(&c1, &gl_act_dual(&c2, &g).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn hessian_chain_rule() {
    // H(Cf) = (det C)^-2 * C . H(f) on degree-3 binary and ternary samples
    let mut rng = rng(0x5eed_0002);
    for &n in &[2usize, 3] {
        for _ in 0..8 {
            let c = random_group_element(n, &mut rng);
            let f = random_form(n, 3, &mut rng);
            let lhs = hessian(&gl_act(&c, &f).unwrap()).unwrap();
            let det_inv_sq = c.det().pow(-2);
            let rhs = gl_act(&c, &hessian(&f).unwrap()).unwrap().scale(&det_inv_sq);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn polar_pairing_is_diagonal() {
    // <w^a, z^b> = a! [a = b]: the pairing matrix on the canonical basis is
    // diagonal with invertible entries
    for &(n, k) in &[(2usize, 3u32), (3, 2)] {
        let basis = slice_basis(n, k);
        for a in basis.monomials() {
            for b in basis.monomials() {
                let p = DualPoly::new(
                    Poly::monomial(n, a.clone(), Rat::one()).unwrap(),
                );
                let q = Poly::monomial(n, b.clone(), Rat::one()).unwrap();
                let got = polar_pair(&p, &q).unwrap();
                if a == b {
                    assert_eq!(got, Rat::from_bigint(a.factorial()));
                    assert!(!got.is_zero());
                } else {
                    assert_eq!(got, Rat::zero());
                }
            }
        }
    }
}

#[test]
fn euler_identity_on_random_forms() {
    let mut rng = rng(0x5eed_0003);
    for &(n, d) in &[(2usize, 3u32), (2, 5), (3, 3), (4, 3)] {
        for _ in 0..6 {
            let f = random_form(n, d, &mut rng);
            let parts = f.partials().unwrap();
            let mut acc = Poly::zero(n);
            for (j, fj) in parts.iter().enumerate() {
                let mut e = vec![0u32; n];
                e[j] = 1;
                let zj = Poly::monomial(n, Exponent::new(e), Rat::one()).unwrap();
                acc = &acc + &(&zj * fj);
            }
            assert_eq!(acc, f.scale(&Rat::from_int(d as i64)));
        }
    }
}

#[test]
fn dual_action_convention_worked_check() {
    // the pinned convention: f = z1^3 + z2^3, C = diag(2,1) makes both
    // sides of the equivariance identity equal (4/9) w1 w2
    use assocform_core::milnor::associated_form;
    use assocform_core::multipoly::GroupElement;

    let f = Poly::from_terms(2, [(exp(&[3, 0]), Rat::one()), (exp(&[0, 3]), Rat::one())]).unwrap();
    let c = GroupElement::diagonal(vec![Rat::from_int(2), Rat::one()]).unwrap();
    let lhs = associated_form(&gl_act(&c, &f).unwrap()).unwrap().form;
    let det_sq = &(c.det() * c.det());
    let rhs = gl_act_dual(&c, &associated_form(&f).unwrap().form)
        .unwrap()
        .scale(det_sq);
    let expect = DualPoly::new(Poly::monomial(2, exp(&[1, 1]), Rat::new(4, 9)).unwrap());
    assert_eq!(lhs, expect);
    assert_eq!(rhs, expect);
}
