use super::Scalar;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics when `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar for Rat {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        <Rat as Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <Rat as One>::one()
    }
    fn from_rat(_: &(), r: &Rat) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::NonInvertible("0".into()));
        }
        Ok(self.recip())
    }
    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(rat_to_f64(self), 0.0)
    }
    fn atom(&self) -> String {
        if self.is_negative() {
            format!("({})", self)
        } else {
            self.to_string()
        }
    }
    fn search_roots(p: &crate::arith::Poly<Self>) -> Vec<Self> {
        crate::roots::rational_roots(p)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Nearest double, robust to numerators and denominators beyond f64 range.
pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let shift = r.numer().bits().max(r.denom().bits()) as i64 - 60;
    let n = (r.numer() >> shift.max(0) as usize).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift.max(0) as usize).to_f64().unwrap_or(1.0);
    if d == 0.0 {
        if n >= 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    } else {
        n / d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = rat_frac(6, -4);
        assert_eq!(a, rat_frac(-3, 2));
        assert_eq!(a.denom(), &BigInt::from(2));
        assert_eq!(rat_frac(0, 7), rat(0));
    }

    #[test]
    fn huge_values_convert() {
        let big = Rat::from_integer(BigInt::from(10).pow(400));
        let r = big.clone() / (big * rat(4));
        assert!((rat_to_f64(&r) - 0.25).abs() < 1e-15);
    }
}
