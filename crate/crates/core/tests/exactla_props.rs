//! Property suites for the exact linear algebra: multiplicativity of the
//! determinant, rank symmetry, solve self-checking, and the dual-route
//! determinant check over rational functions.

mod common;

use assocform_core::exactla::ExactMatrix;
use assocform_core::field::Field;
use assocform_core::scalars::{Rat, RatFun, UniPoly};
use common::{rng, small_rat};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> ExactMatrix<Rat> {
    ExactMatrix::from_fn(rows, cols, |_, _| small_rat(rng))
}

#[test]
fn det_is_multiplicative() {
    let mut rng = rng(0x5eed_0201);
    for n in 1..=5 {
        for _ in 0..6 {
            let a = random_matrix(n, n, &mut rng);
            let b = random_matrix(n, n, &mut rng);
            let lhs = a.matmul(&b).unwrap().det().unwrap();
            let rhs = &a.det().unwrap() * &b.det().unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn rank_equals_transpose_rank() {
    let mut rng = rng(0x5eed_0202);
    for _ in 0..10 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=6);
        let m = random_matrix(rows, cols, &mut rng);
        assert_eq!(m.rank(), m.transpose().rank());
    }
}

#[test]
fn solve_on_constructed_systems() {
    // build b = M x so the system is consistent, then check the solution
    // reproduces b exactly (solve itself asserts the substitution)
    let mut rng = rng(0x5eed_0203);
    for _ in 0..10 {
        let rows = rng.gen_range(2..=5);
        let cols = rng.gen_range(2..=5);
        let m = random_matrix(rows, cols, &mut rng);
        let x: Vec<Rat> = (0..cols).map(|_| small_rat(&mut rng)).collect();
        let b = m.mul_vec(&x).unwrap();
        let got = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&got).unwrap(), b);
    }
}

/// Independent cofactor-expansion determinant, the oracle for the Bareiss
/// route.
fn cofactor_det<F: Field>(m: &ExactMatrix<F>) -> F {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = F::zero();
    for i in 0..n {
        if m.get(i, 0).is_zero() {
            continue;
        }
        let minor = ExactMatrix::from_fn(n - 1, n - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            m.get(rr, c + 1).clone()
        });
        let term = m.get(i, 0).mul(&cofactor_det(&minor));
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[test]
fn sylvester_determinant_over_ratfun() {
    // the 4x4 Sylvester matrix of (3z1^2 + 2t z1 z2, t z1^2 + 3 z2^2) has
    // determinant 12 t^3 + 81; the Bareiss route must agree with the
    // independent cofactor expansion and the frozen value
    let t = RatFun::from_unipoly(UniPoly::var());
    let two_t = RatFun::from_unipoly(UniPoly::from_ints(&[0, 2]));
    let three = RatFun::from_rat(Rat::from_int(3));
    let zero = RatFun::zero();
    let rows = vec![
        vec![three.clone(), two_t.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), three.clone(), two_t.clone(), zero.clone()],
        vec![t.clone(), zero.clone(), three.clone(), zero.clone()],
        vec![zero.clone(), t.clone(), zero.clone(), three.clone()],
    ];
    let m = ExactMatrix::from_rows(rows).unwrap();
    let want = RatFun::from_unipoly(UniPoly::from_ints(&[81, 0, 0, 12]));
    assert_eq!(m.det().unwrap(), want);
    assert_eq!(cofactor_det(&m), want);
}

#[test]
fn solve_socle_system_for_the_binary_cubic() {
    // columns are the coordinate vectors of f1 = 3z1^2, f2 = 3z2^2 and
    // H = 36 z1 z2 in the degree-2 basis; the target is z1 z2
    let m = ExactMatrix::from_rows(vec![
        vec![Rat::from_int(3), Rat::zero(), Rat::zero()],
        vec![Rat::zero(), Rat::zero(), Rat::from_int(36)],
        vec![Rat::zero(), Rat::from_int(3), Rat::zero()],
    ])
    .unwrap();
    let b = [Rat::zero(), Rat::one(), Rat::zero()];
    let x = m.solve(&b).unwrap();
    assert_eq!(x, vec![Rat::zero(), Rat::zero(), Rat::new(1, 36)]);
}

#[test]
fn solve_socle_system_along_the_pencil() {
    // same system with f1 = 3z1^2 + 2t z1 z2, f2 = t z1^2 + 3 z2^2 and
    // H = -4t^2 z1^2 + 36 z1 z2 + 12t z2^2; the hessian coordinate is
    // 3/(16 t^3 + 108)
    let t = RatFun::from_unipoly(UniPoly::var());
    let rows = vec![
        vec![
            RatFun::from_rat(Rat::from_int(3)),
            t.clone(),
            RatFun::from_unipoly(UniPoly::from_ints(&[0, 0, -4])),
        ],
        vec![
            RatFun::from_unipoly(UniPoly::from_ints(&[0, 2])),
            RatFun::zero(),
            RatFun::from_rat(Rat::from_int(36)),
        ],
        vec![
            RatFun::zero(),
            RatFun::from_rat(Rat::from_int(3)),
            RatFun::from_unipoly(UniPoly::from_ints(&[0, 12])),
        ],
    ];
    let m = ExactMatrix::from_rows(rows).unwrap();
    let b = [RatFun::zero(), RatFun::one(), RatFun::zero()];
    let x = m.solve(&b).unwrap();
    let want = RatFun::new(
        UniPoly::constant(Rat::from_int(3)),
        UniPoly::from_ints(&[108, 0, 0, 16]),
    )
    .unwrap();
    assert_eq!(x[2], want);
}

#[test]
fn bareiss_agrees_with_cofactor_on_random_ratfun_matrices() {
    let mut rng = rng(0x5eed_0204);
    for n in 2..=4 {
        for _ in 0..4 {
            let m = ExactMatrix::from_fn(n, n, |_, _| {
                RatFun::from_unipoly(UniPoly::new(vec![
                    small_rat(&mut rng),
                    small_rat(&mut rng),
                ]))
            });
            assert_eq!(m.det().unwrap(), cofactor_det(&m));
        }
    }
}
