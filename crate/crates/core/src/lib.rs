//! Subalgebras of finite codimension in `K[x]`.
//!
//! A subalgebra is given either by generators or by linear conditions such as
//! `f(a) = f(b)` or `f'(a) = 0`. The crate computes SAGBI bases, degree
//! semigroups, characteristic polynomials and spectra, derivation spaces, and
//! classifies everything of codimension at most three.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod conditions;
pub mod derivations;
pub mod error;
pub mod oracle;
pub mod resultants;
pub mod roots;
pub mod sagbi;
pub mod semigroup;
pub mod spectrum;

pub use error::{Error, Result};
