//! Exact-arithmetic engine for associated forms of nondegenerate
//! homogeneous polynomials.
//!
//! The engine computes graded slices of the Jacobian ideal of a homogeneous
//! form, decides nondegeneracy, solves for the socle coefficients of every
//! top-degree monomial against the Hessian, and assembles the associated
//! form on the dual space. On top of that sit the classical-invariant-theory
//! utilities: contravariant profile arithmetic, binary discriminants via
//! Sylvester resultants, degree-bound calculators for the minimal exponent
//! of the discriminant factor, and a pencil probe that reconstructs the
//! socle coefficients as rational functions of the pencil parameter and
//! certifies lower bounds on that exponent from pole orders.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals, or
//! rational functions in one parameter for pencil computations. There is no
//! floating point anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, parsing and serialization live
//! in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod contra;
pub mod exactla;
pub mod field;
pub mod milnor;
pub mod multipoly;
pub mod scalars;

pub use field::Field;
pub use scalars::{Rat, RatFun, UniPoly};
