//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace ignored, multiplication always explicit):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' uint)?
//! base   := rational | 'x' | 't' | '(' expr ')'
//! ```
//!
//! Template mode, used by the case tables, adds division, named symbols,
//! calls `name(expr)` and derivative evaluations `f(p)`, `f'(p)`, `f''(p)`,
//! `f^(k)(p)`:
//!
//! ```text
//! term   := factor (('*' | '/') factor)*
//! base   := ... | ident | ident '(' expr ')' | 'f' primes '(' expr ')'
//! ```

use crate::arith::{FieldElem, NumberField, Poly, Rat, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::sync::Arc;

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rat),
    X,
    T,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Div(Box<Expr>, Box<Expr>),
    Ident(String),
    Call(String, Box<Expr>),
    /// `f^(k)(point)`.
    Deriv(usize, Box<Expr>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    template: bool,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(b'/') if self.template => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = match self.digits() {
                Some(e) => e,
                None => return self.err("expected a nonnegative integer exponent"),
            };
            let e: u32 = match e.try_into() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn paren_arg(&mut self) -> Result<Expr> {
        if self.peek() != Some(b'(') {
            return self.err("expected '('");
        }
        self.pos += 1;
        let e = self.expr()?;
        if self.peek() != Some(b')') {
            return self.err("expected ')'");
        }
        self.pos += 1;
        Ok(e)
    }

    fn template_symbol(&mut self) -> Result<Expr> {
        let name = self.ident();
        if name == "f" {
            let mut order = 0;
            while self.src.get(self.pos) == Some(&b'\'') {
                order += 1;
                self.pos += 1;
            }
            if order == 0 && self.src.get(self.pos) == Some(&b'^') {
                self.pos += 1;
                if self.peek() != Some(b'(') {
                    return self.err("expected '(' after f^");
                }
                self.pos += 1;
                order = match self.digits().and_then(|d| usize::try_from(d).ok()) {
                    Some(k) => k,
                    None => return self.err("expected derivative order"),
                };
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
            }
            return Ok(Expr::Deriv(order, Box::new(self.paren_arg()?)));
        }
        if self.src.get(self.pos) == Some(&b'(') {
            return Ok(Expr::Call(name, Box::new(self.paren_arg()?)));
        }
        Ok(match name.as_str() {
            "x" => Expr::X,
            "t" => Expr::T,
            _ => Expr::Ident(name),
        })
    }

    fn base(&mut self) -> Result<Expr> {
        if self.template && self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return self.template_symbol();
        }
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Expr::X)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Expr::T)
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits().unwrap();
                if self.peek() == Some(b'/') {
                    let save = self.pos;
                    self.pos += 1;
                    match self.digits() {
                        Some(d) if d != BigInt::from(0) => return Ok(Expr::Num(Rat::new(n, d))),
                        Some(_) => return self.err("zero denominator"),
                        None => self.pos = save,
                    }
                }
                Ok(Expr::Num(Rat::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => Err(Error::UnknownSymbol(c as char)),
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_with(src: &str, template: bool) -> Result<Expr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, template };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses `src` into an expression tree.
pub fn parse_expr(src: &str) -> Result<Expr> {
    parse_with(src, false)
}

/// Parses a case-table template (see the module docs).
pub fn parse_template(src: &str) -> Result<Expr> {
    parse_with(src, true)
}

impl Expr {
    /// Evaluates with the given values for `x` and `t`; a missing value makes
    /// that symbol an error.
    pub fn eval<F: Scalar>(&self, ctx: &F::Ctx, x: Option<&Poly<F>>, t: Option<&Poly<F>>) -> Result<Poly<F>> {
        Ok(match self {
            Expr::Num(r) => Poly::constant(F::from_rat(ctx, r)),
            Expr::X => x.cloned().ok_or(Error::UnknownSymbol('x'))?,
            Expr::T => t.cloned().ok_or(Error::UnknownSymbol('t'))?,
            Expr::Add(a, b) => a.eval(ctx, x, t)?.add(&b.eval(ctx, x, t)?),
            Expr::Sub(a, b) => a.eval(ctx, x, t)?.sub(&b.eval(ctx, x, t)?),
            Expr::Mul(a, b) => a.eval(ctx, x, t)?.mul(&b.eval(ctx, x, t)?),
            Expr::Neg(a) => a.eval(ctx, x, t)?.neg(),
            Expr::Pow(a, e) => a.eval(ctx, x, t)?.pow(*e),
            Expr::Div(..) => return Err(Error::Invalid("division outside a template".into())),
            Expr::Ident(n) | Expr::Call(n, _) => return Err(Error::UnknownSymbol(n.chars().next().unwrap_or('?'))),
            Expr::Deriv(..) => return Err(Error::UnknownSymbol('f')),
        })
    }

    /// Named symbols referenced anywhere in the tree, including call targets.
    pub fn symbols(&self, out: &mut std::collections::BTreeSet<String>) {
        match self {
            Expr::Num(_) | Expr::X | Expr::T => {}
            Expr::Ident(n) => {
                out.insert(n.clone());
            }
            Expr::Call(n, a) => {
                out.insert(n.clone());
                a.symbols(out);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.symbols(out);
                b.symbols(out);
            }
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Deriv(_, a) => a.symbols(out),
        }
    }
}

/// A polynomial in `x` over the rationals.
pub fn parse_poly(src: &str) -> Result<Poly<Rat>> {
    parse_expr(src)?.eval(&(), Some(&Poly::x(&())), None)
}

/// A polynomial in `x` with coefficients in `field`, written in `t`.
pub fn parse_poly_in(src: &str, field: &Arc<NumberField>) -> Result<Poly<FieldElem>> {
    let t = Poly::constant(FieldElem::generator(field));
    parse_expr(src)?.eval(field, Some(&Poly::x(field)), Some(&t))
}

/// A field modulus written in `t`.
pub fn parse_modulus(src: &str) -> Result<Poly<Rat>> {
    parse_expr(src)?.eval(&(), None, Some(&Poly::x(&())))
}

fn as_constant<F: Scalar>(p: Poly<F>) -> Result<F> {
    if !p.is_constant() {
        return Err(Error::Parse { pos: 0, msg: "expected a constant".into() });
    }
    Ok(p.coeff(0))
}

/// A rational constant such as `-3/4` or `(1/2)^3`.
pub fn parse_rational(src: &str) -> Result<Rat> {
    as_constant(parse_expr(src)?.eval(&(), None, None)?)
}

/// A field element written in `t`.
pub fn parse_field_elem(src: &str, field: &Arc<NumberField>) -> Result<FieldElem> {
    let t = Poly::constant(FieldElem::generator(field));
    as_constant(parse_expr(src)?.eval(field, None, Some(&t))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_frac;

    #[test]
    fn basic_polys() {
        assert_eq!(parse_poly("x^3 - x").unwrap(), Poly::from_ints(&[0, -1, 0, 1]));
        let p = parse_poly("1/2*x^2 + 3").unwrap();
        assert_eq!(p.coeffs(), &[rat_frac(3, 1), rat_frac(0, 1), rat_frac(1, 2)]);
        assert_eq!(parse_poly(" -( x+1 )^2 ").unwrap(), Poly::from_ints(&[-1, -2, -1]));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_poly("t*x"), Err(Error::UnknownSymbol('t')));
        assert!(matches!(parse_poly("2x"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_poly("x^"), Err(Error::Parse { .. })));
        assert_eq!(parse_poly("y"), Err(Error::UnknownSymbol('y')));
    }

    #[test]
    fn field_coefficients() {
        let k = NumberField::cyclotomic(8);
        let p = parse_poly_in("t^3*x + 1", &k).unwrap();
        assert_eq!(p.deg(), 1);
        assert_eq!(p.coeff(1), FieldElem::generator(&k).pow(3));
        assert_eq!(parse_field_elem("t^8", &k).unwrap(), FieldElem::one(&k));
    }

    #[test]
    fn templates() {
        let e = parse_template("a*f''(alpha) + f^(5)(alpha) - f(beta)/2").unwrap();
        let mut syms = std::collections::BTreeSet::new();
        e.symbols(&mut syms);
        assert_eq!(syms.into_iter().collect::<Vec<_>>(), vec!["a", "alpha", "beta"]);
        match parse_template("f^(5)(alpha)").unwrap() {
            Expr::Deriv(5, p) => assert_eq!(*p, Expr::Ident("alpha".into())),
            other => panic!("{:?}", other),
        }
        assert!(matches!(parse_template("q(lambda) - C3(x^2)").unwrap(), Expr::Sub(..)));
        assert!(matches!(parse_template("(x-tau)*t").unwrap(), Expr::Mul(..)));
        assert!(parse_expr("alpha").is_err());
    }

    #[test]
    fn display_round_trip() {
        let p = parse_poly("-3/7*x^5 + x^2 - 1/2").unwrap();
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}
