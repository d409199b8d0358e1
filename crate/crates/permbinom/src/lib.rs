//! Permutation tests and certificates for the binomials
//! `f(x) = x^r (x^{q-1} + a)` over finite fields `F_{q^e}`.
//!
//! The crate builds extension fields in the polynomial basis
//! ([`ext_field`]), decides whether a given binomial permutes the field by
//! four independent routes (exhaustive image scan, power sums, the
//! subgroup criterion on the (q-1)-st power residues, and closed-form
//! certificates in [`perm_criteria`] / [`closed_form`]), sweeps whole
//! `(r, a)` grids against the exhaustive oracle ([`theorems`]), and
//! evaluates the exact-integer point-count bound that rules out
//! permutations over large extensions ([`hasse_weil`]).
//!
//! Everything is exact: integer arithmetic is checked 128-bit, square
//! roots are certified by squaring, and every "not a permutation" verdict
//! carries a witness that can be re-checked independently.
//!
//! The crate is `no_std` (with `alloc`); IO, parallel sweeps and file
//! formats live in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod closed_form;
mod error;
pub mod ext_field;
pub mod hasse_weil;
pub mod perm_criteria;
pub mod prime_field;
pub mod sampling;
pub mod theorems;

pub use error::{Error, Result};
pub use ext_field::{FieldCtx, FieldElem};
pub use perm_criteria::{Binomial, Method, PermVerdict, Witness};
