use super::{FieldElem, NumberField, Rat, Scalar};
use crate::error::{Error, Result};
use num_complex::Complex64;
use num_traits::Signed;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Dense univariate polynomial in `x`, coefficients stored ascending.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, Debug)]
pub struct Poly<F: Scalar> {
    coeffs: Vec<F>,
    ctx: F::Ctx,
}

impl<F: Scalar> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.coeffs.is_empty() || self.ctx == other.ctx)
    }
}

impl<F: Scalar> Poly<F> {
    pub fn new(mut coeffs: Vec<F>, ctx: F::Ctx) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, ctx }
    }

    /// Builds from a nonempty coefficient list, taking the context from it.
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        let ctx = coeffs.first().expect("nonempty coefficient list").ctx();
        Poly::new(coeffs, ctx)
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly { coeffs: vec![], ctx: ctx.clone() }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Poly::constant(F::one(ctx))
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        Poly::new(vec![c], ctx)
    }

    pub fn x(ctx: &F::Ctx) -> Self {
        Poly::monomial(F::one(ctx), 1)
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut v = vec![F::zero(&ctx); k];
        v.push(c);
        Poly::new(v, ctx)
    }

    /// The linear polynomial `x - a`.
    pub fn x_minus(a: &F) -> Self {
        let ctx = a.ctx();
        Poly::new(vec![a.negated(), F::one(&ctx)], ctx)
    }

    /// Integer coefficients, ascending.
    pub fn from_i64s(ctx: &F::Ctx, cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| F::from_i64(ctx, c)).collect(), ctx.clone())
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly::new(self.coeffs.iter().map(|a| a.times(c)).collect(), self.ctx.clone())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![F::zero(&self.ctx); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v, ctx: self.ctx.clone() }
    }

    fn check_ctx(&self, other: &Self) {
        assert!(
            self.coeffs.is_empty() || other.coeffs.is_empty() || self.ctx == other.ctx,
            "polynomials over different fields"
        );
    }

    fn pick_ctx(&self, other: &Self) -> F::Ctx {
        if self.coeffs.is_empty() {
            other.ctx.clone()
        } else {
            self.ctx.clone()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ctx(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let ctx = self.pick_ctx(other);
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(v, ctx)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.negated()).collect(), ctx: self.ctx.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.pick_ctx(other));
        }
        let mut v = vec![F::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].plus(&a.times(b));
                }
            }
        }
        Poly::new(v, self.ctx.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::one(&self.ctx);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if !self.is_zero() && self.ctx != d.ctx {
            return Err(Error::FieldMismatch);
        }
        let dd = d.deg();
        let inv = d.lc().unwrap().inverse()?;
        let mut r = self.coeffs.clone();
        if r.len() < d.coeffs.len() {
            return Ok((Poly::zero(&d.ctx), self.clone()));
        }
        let mut q = vec![F::zero(&d.ctx); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].times(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].minus(&c.times(dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q, d.ctx.clone()), Poly::new(r, d.ctx.clone())))
    }

    /// Quotient of an exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Invalid(format!("{} does not divide {}", d, self)))
        }
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g` monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let ctx = self.pick_ctx(other);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(&ctx), Poly::zero(&ctx));
        let (mut t0, mut t1) = (Poly::zero(&ctx), Poly::one(&ctx));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.lc().unwrap().inverse()?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.ctx);
        }
        let v = (1..self.coeffs.len())
            .map(|i| self.coeffs[i].times(&F::from_i64(&self.ctx, i as i64)))
            .collect();
        Poly::new(v, self.ctx.clone())
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derivative();
        }
        p
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &F) -> F {
        let mut acc = F::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.times(a).plus(c);
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex();
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// `self(x + a)`.
    pub fn shift(&self, a: &F) -> Self {
        self.compose(&Poly::x_minus(&a.negated()))
    }

    /// Coefficients mapped into another field.
    pub fn map<G: Scalar>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect(), ctx.clone())
    }

    /// Complex coefficients, ascending.
    pub fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.to_complex()).collect()
    }

    /// The polynomial over `Q`, when every coefficient is rational.
    pub fn to_rational(&self) -> Option<Poly<Rat>> {
        let v: Option<Vec<Rat>> = self.coeffs.iter().map(|c| c.to_rat()).collect();
        v.map(|v| Poly::new(v, ()))
    }
}

impl Poly<Rat> {
    /// Integer coefficients over `Q`, ascending.
    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::from_i64s(&(), cs)
    }

    /// Same polynomial viewed over a number field.
    pub fn lift(&self, field: &Arc<NumberField>) -> Poly<FieldElem> {
        self.map(field, |c| FieldElem::from_rat(field, c))
    }
}

impl<F: Scalar> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{}", i),
            };
            let (neg, body) = match c.to_rat() {
                Some(r) => {
                    let a = r.abs();
                    let body = if i > 0 && a == Rat::from_integer(1.into()) {
                        mono.clone()
                    } else if i > 0 {
                        format!("{}*{}", a, mono)
                    } else {
                        a.to_string()
                    };
                    (r.is_negative(), body)
                }
                None => {
                    let a = c.atom();
                    (false, if i > 0 { format!("{}*{}", a, mono) } else { a })
                }
            };
            match (first, neg) {
                (true, true) => write!(f, "-{}", body)?,
                (true, false) => write!(f, "{}", body)?,
                (false, true) => write!(f, " - {}", body)?,
                (false, false) => write!(f, " + {}", body)?,
            }
            first = false;
        }
        Ok(())
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident) => {
        impl<F: Scalar> $tr<&Poly<F>> for &Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: &Poly<F>) -> Poly<F> {
                Poly::$m(self, rhs)
            }
        }
    };
}
forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);

impl<F: Scalar> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac};

    fn q(cs: &[i64]) -> Poly<Rat> {
        Poly::from_ints(cs)
    }

    #[test]
    fn derivative_power_rule() {
        assert_eq!(q(&[0, -1, 0, 1]).derivative(), q(&[-1, 0, 3]));
    }

    #[test]
    fn evaluation_at_plus_minus_one() {
        let p = q(&[0, -1, 0, 1]);
        assert_eq!(p.eval(&rat(1)), rat(0));
        assert_eq!(p.eval(&rat(-1)), rat(0));
    }

    #[test]
    fn long_division() {
        let (qq, r) = q(&[0, 0, 0, 0, 0, 1]).div_rem(&q(&[-1, 0, 1])).unwrap();
        assert_eq!(qq, q(&[0, 1, 0, 1]));
        assert_eq!(r, q(&[0, 1]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[0, -1, 0, 1])).unwrap(), q(&[-1, 0, 1]));
        assert_eq!(q(&[0, 0, 1]).gcd(&q(&[0, -1, 0, 1])).unwrap(), q(&[0, 1]));
        assert_eq!(q(&[1, 0, 1]).gcd(&q(&[-1, 0, 1])).unwrap(), q(&[1]));
        assert_eq!(Poly::<Rat>::zero(&()).gcd(&Poly::zero(&())), Err(Error::BothZero));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(q(&[1, 1]).div_rem(&Poly::zero(&())), Err(Error::DivisionByZeroPoly));
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(&[0, -1, 0, 1]).to_string(), "x^3 - x");
        let p = Poly::new(vec![rat(3), rat(0), rat_frac(1, 2)], ());
        assert_eq!(p.to_string(), "1/2*x^2 + 3");
        assert_eq!(q(&[-1]).to_string(), "-1");
        assert_eq!(Poly::<Rat>::zero(&()).to_string(), "0");
    }

    #[test]
    fn shift_and_compose() {
        let p = q(&[0, 0, 1]);
        assert_eq!(p.shift(&rat(1)), q(&[1, 2, 1]));
        assert_eq!(p.compose(&q(&[1, 1])), q(&[1, 2, 1]));
    }

    #[test]
    fn xgcd_bezout() {
        let a = q(&[1, 0, 1]);
        let b = q(&[-1, 1]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(g, q(&[1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }
}
