//! Shared helpers for the randomized property suites. Every suite seeds its
//! own generator, so runs are deterministic.

// each test binary uses its own subset of these helpers
#![allow(dead_code)]

use assocform_core::multipoly::{slice_basis, Exponent, GroupElement, Poly};
use assocform_core::milnor::is_nondegenerate;
use assocform_core::scalars::Rat;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn exp(v: &[u32]) -> Exponent {
    Exponent::from_slice(v)
}

/// A rational with numerator in `-3..=3` and denominator in `{1, 2}`.
pub fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

/// A random invertible matrix with small rational entries.
pub fn random_group_element(n: usize, rng: &mut ChaCha8Rng) -> GroupElement {
    loop {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|_| (0..n).map(|_| small_rat(rng)).collect())
            .collect();
        if let Ok(c) = GroupElement::new(rows) {
            return c;
        }
    }
}

/// A random nonzero homogeneous form with small integer coefficients.
pub fn random_form(n: usize, d: u32, rng: &mut ChaCha8Rng) -> Poly<Rat> {
    loop {
        let terms: Vec<(Exponent, Rat)> = slice_basis(n, d)
            .monomials()
            .iter()
            .map(|e| (e.clone(), Rat::from_int(rng.gen_range(-3..=3))))
            .collect();
        let f = Poly::from_terms(n, terms).expect("valid terms");
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random nondegenerate homogeneous form.
pub fn random_nondegenerate_form(n: usize, d: u32, rng: &mut ChaCha8Rng) -> Poly<Rat> {
    loop {
        let f = random_form(n, d, rng);
        if is_nondegenerate(&f).expect("homogeneous by construction") {
            return f;
        }
    }
}
