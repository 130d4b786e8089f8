use super::rat::rat_to_f64;
use super::{rat, Poly, Rat, Scalar};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::fmt;
use std::sync::Arc;

/// The field `Q[t]/(m(t))` for a monic square-free modulus `m`.
///
/// Irreducibility is not checked; a zero divisor shows up as
/// [`Error::NonInvertible`] when it is inverted.
#[derive(Debug)]
pub struct NumberField {
    modulus: Poly<Rat>,
    label: String,
    embedding: Complex64,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self.modulus == other.modulus
    }
}

impl NumberField {
    /// Validates the modulus and picks the complex root with the largest real
    /// part (ties broken towards positive imaginary part) as embedding of `t`.
    pub fn new(modulus: Poly<Rat>, label: impl Into<String>) -> Result<Arc<Self>> {
        if modulus.deg() < 1 || !modulus.is_monic() {
            return Err(Error::BadModulus);
        }
        if !modulus.gcd(&modulus.derivative())?.is_constant() {
            return Err(Error::NotSquareFree(modulus.to_string()));
        }
        let roots = crate::roots::complex_roots(&modulus)?;
        let embedding = roots
            .into_iter()
            .max_by(|a, b| {
                let ka = ((a.re * 1e9).round(), a.im);
                let kb = ((b.re * 1e9).round(), b.im);
                ka.partial_cmp(&kb).unwrap()
            })
            .unwrap();
        Ok(Arc::new(NumberField { modulus, label: label.into(), embedding }))
    }

    /// Like [`NumberField::new`] with an explicit embedding of `t`.
    pub fn with_embedding(modulus: Poly<Rat>, label: impl Into<String>, embedding: Complex64) -> Result<Arc<Self>> {
        let f = NumberField::new(modulus, label)?;
        Ok(Arc::new(NumberField { modulus: f.modulus.clone(), label: f.label.clone(), embedding }))
    }

    /// The `n`-th cyclotomic field, with `t` embedded as `exp(2 pi i / n)`.
    pub fn cyclotomic(n: usize) -> Arc<Self> {
        let m = cyclotomic_poly(n);
        let ang = 2.0 * std::f64::consts::PI / n as f64;
        Arc::new(NumberField {
            modulus: m,
            label: format!("Phi{}", n),
            embedding: Complex64::new(ang.cos(), ang.sin()),
        })
    }

    /// The trivial extension `Q[t]/(t)`, useful to run field-generic code over `Q`.
    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField {
            modulus: Poly::from_ints(&[0, 1]),
            label: "Q".into(),
            embedding: Complex64::new(0.0, 0.0),
        })
    }

    pub fn modulus(&self) -> &Poly<Rat> {
        &self.modulus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn embedding(&self) -> Complex64 {
        self.embedding
    }
}

/// `Phi_n(x)` by dividing `x^n - 1` by the cyclotomic factors of proper divisors.
pub fn cyclotomic_poly(n: usize) -> Poly<Rat> {
    assert!(n >= 1);
    let mut p = Poly::monomial(rat(1), n).sub(&Poly::from_ints(&[1]));
    for d in 1..n {
        if n % d == 0 {
            p = p.div_exact(&cyclotomic_poly(d)).expect("cyclotomic factor divides");
        }
    }
    p
}

/// Element of a [`NumberField`], stored as its reduced representative of
/// degree below the field degree.
#[derive(Clone, Debug)]
pub struct FieldElem {
    coeffs: Vec<Rat>,
    field: Arc<NumberField>,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }
}

impl FieldElem {
    /// Reduces an arbitrary representative modulo the field modulus.
    pub fn from_rep(field: &Arc<NumberField>, rep: &Poly<Rat>) -> Self {
        let r = rep.rem(&field.modulus).expect("nonzero modulus");
        let mut coeffs = r.into_coeffs();
        coeffs.resize(field.degree(), Rat::zero(&()));
        FieldElem { coeffs, field: field.clone() }
    }

    /// The class of `t`.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        FieldElem::from_rep(field, &Poly::from_ints(&[0, 1]))
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn rep(&self) -> Poly<Rat> {
        Poly::new(self.coeffs.clone(), ())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn same_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "field elements from different fields"
        );
    }
}

impl Scalar for FieldElem {
    type Ctx = Arc<NumberField>;

    fn ctx(&self) -> Arc<NumberField> {
        self.field.clone()
    }
    fn zero(ctx: &Arc<NumberField>) -> Self {
        FieldElem { coeffs: vec![Rat::zero(&()); ctx.degree()], field: ctx.clone() }
    }
    fn one(ctx: &Arc<NumberField>) -> Self {
        FieldElem::from_rat(ctx, &Rat::one(&()))
    }
    fn from_rat(ctx: &Arc<NumberField>, r: &Rat) -> Self {
        let mut coeffs = vec![Rat::zero(&()); ctx.degree()];
        coeffs[0] = r.clone();
        FieldElem { coeffs, field: ctx.clone() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn plus(&self, other: &Self) -> Self {
        self.same_field(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        FieldElem { coeffs, field: self.field.clone() }
    }
    fn minus(&self, other: &Self) -> Self {
        self.same_field(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        FieldElem { coeffs, field: self.field.clone() }
    }
    fn times(&self, other: &Self) -> Self {
        self.same_field(other);
        let d = self.field.degree();
        let mut prod = vec![Rat::zero(&()); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let m = self.field.modulus.coeffs();
        for k in (d..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (j, mc) in m.iter().enumerate().take(d) {
                prod[k - d + j] -= &c * mc;
            }
        }
        prod.truncate(d);
        FieldElem { coeffs: prod, field: self.field.clone() }
    }
    fn negated(&self) -> Self {
        FieldElem { coeffs: self.coeffs.iter().map(|c| -c).collect(), field: self.field.clone() }
    }
    fn inverse(&self) -> Result<Self> {
        let rep = self.rep();
        if rep.is_zero() {
            return Err(Error::NonInvertible(format!("0 in {}", self.field.label)));
        }
        let (g, s, _) = rep.xgcd(&self.field.modulus)?;
        if g.deg() > 0 {
            return Err(Error::NonInvertible(format!(
                "{} shares factor {} with the modulus of {}",
                self, g, self.field.label
            )));
        }
        Ok(FieldElem::from_rep(&self.field, &s))
    }
    fn to_rat(&self) -> Option<Rat> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
    fn to_complex(&self) -> Complex64 {
        let t = self.field.embedding;
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t + rat_to_f64(c);
        }
        acc
    }
    fn atom(&self) -> String {
        match self.to_rat() {
            Some(r) => r.atom(),
            None => format!("({})", self),
        }
    }
    fn search_roots(p: &Poly<Self>) -> Vec<Self> {
        crate::roots::field_roots(p).unwrap_or_default()
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep().to_string().replace('x', "t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_frac;

    #[test]
    fn gaussian_unit() {
        let k = NumberField::new(Poly::from_ints(&[1, 0, 1]), "Q(i)").unwrap();
        let t = FieldElem::generator(&k);
        assert_eq!(t.times(&t), FieldElem::from_i64(&k, -1));
    }

    #[test]
    fn eighth_roots() {
        let k = NumberField::new(Poly::from_ints(&[1, 0, 0, 0, 1]), "Phi8").unwrap();
        let t = FieldElem::generator(&k);
        assert_eq!(t.pow(4), FieldElem::from_i64(&k, -1));
        assert_eq!(t.pow(8), FieldElem::one(&k));
    }

    #[test]
    fn invert_sqrt2() {
        let k = NumberField::new(Poly::from_ints(&[-2, 0, 1]), "Q(sqrt2)").unwrap();
        let t = FieldElem::generator(&k);
        let inv = t.inverse().unwrap();
        assert_eq!(inv, t.times(&FieldElem::from_rat(&k, &rat_frac(1, 2))));
    }

    #[test]
    fn zero_divisor_reported() {
        let k = NumberField::new(Poly::from_ints(&[-1, 0, 1]), "split").unwrap();
        let e = FieldElem::from_rep(&k, &Poly::from_ints(&[-1, 1]));
        assert!(matches!(e.inverse(), Err(Error::NonInvertible(_))));
    }

    #[test]
    fn square_full_modulus_rejected() {
        assert!(matches!(
            NumberField::new(Poly::from_ints(&[1, 2, 1]), "bad"),
            Err(Error::NotSquareFree(_))
        ));
    }

    #[test]
    fn cyclotomic_moduli() {
        assert_eq!(cyclotomic_poly(8), Poly::from_ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(12), Poly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(3), Poly::from_ints(&[1, 1, 1]));
        let k = NumberField::cyclotomic(8);
        let e = FieldElem::generator(&k).to_complex();
        assert!((e - Complex64::new(0.5f64.sqrt(), 0.5f64.sqrt())).norm() < 1e-12);
    }

    #[test]
    fn default_embedding_matches_cyclotomic_choice() {
        let k = NumberField::new(cyclotomic_poly(12), "Phi12").unwrap();
        let e = k.embedding();
        let ang = std::f64::consts::PI / 6.0;
        assert!((e - Complex64::new(ang.cos(), ang.sin())).norm() < 1e-10);
    }
}
