//! Exact coefficient fields and the polynomial rings built over them.
//!
//! Two coefficient fields are supported: the rationals ([`Rat`]) and simple
//! number fields `Q[t]/(m(t))` ([`FieldElem`]). Everything above this module
//! is generic over the [`Scalar`] trait.

mod field;
pub mod linalg;
mod mpoly;
mod poly;
mod rat;

pub use field::{FieldElem, NumberField};
pub use mpoly::MPoly;
pub use poly::Poly;
pub use rat::{rat, rat_frac, Rat};
pub(crate) use rat::rat_to_f64;

use crate::error::Result;
use num_complex::Complex64;
use std::fmt;

/// An exact field element together with the context needed to build
/// constants of the same field.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_rat(ctx: &Self::Ctx, r: &Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Result<Self>;
    /// The value as a rational number, when it is one.
    fn to_rat(&self) -> Option<Rat>;
    /// Complex value under the field's chosen embedding.
    fn to_complex(&self) -> Complex64;
    /// Display form that can be parsed back as a factor.
    fn atom(&self) -> String;
    /// Roots of `p` in the coefficient field beyond any supplied candidates.
    fn search_roots(_p: &Poly<Self>) -> Vec<Self> {
        Vec::new()
    }

    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_rat(ctx, &rat(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }
    fn divide(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inverse()?))
    }
    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx());
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }
}
