//! Printing followed by parsing is the identity on canonical polynomials.

use assocform_cli::parse::parse_poly;
use assocform_cli::print::form_string;
use assocform_core::multipoly::{slice_basis, Exponent, Poly};
use assocform_core::scalars::Rat;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_sparse_poly(n: usize, maxdeg: u32, rng: &mut ChaCha8Rng) -> Poly<Rat> {
    let mut terms: Vec<(Exponent, Rat)> = Vec::new();
    for d in 0..=maxdeg {
        for e in slice_basis(n, d).monomials() {
            if rng.gen_bool(0.25) {
                let c = Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                terms.push((e.clone(), c));
            }
        }
    }
    Poly::from_terms(n, terms).expect("valid terms")
}

#[test]
fn print_then_parse_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0401);
    for _ in 0..200 {
        let n = rng.gen_range(2..=4);
        let maxdeg = rng.gen_range(0..=5);
        let p = random_sparse_poly(n, maxdeg, &mut rng);
        let text = form_string(&p);
        let back = parse_poly(&text, n).unwrap_or_else(|e| panic!("reparse {text:?}: {e}"));
        assert_eq!(back, p, "round trip failed for {text:?}");
    }
}

#[test]
fn parse_accepts_spec_surface_forms() {
    // whitespace, implicit multiplication, parenthesized powers
    let a = parse_poly("z1^3 + z2^3", 2).unwrap();
    let b = parse_poly("z1^3+z2^3", 2).unwrap();
    assert_eq!(a, b);
    let c = parse_poly("(z1 + z2)^2 - 2z1z2", 2).unwrap();
    let d = parse_poly("z1^2 + z2^2", 2).unwrap();
    assert_eq!(c, d);
}
