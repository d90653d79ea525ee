use super::expr::{parse_expr, Expr};
use crate::error::{Error, Result};
use crate::freealg::{Gen, NCPoly, Presentation, Word};
use crate::scalar::{FieldContext, Scalar};
use crate::tensor::TensorElem;
use num_rational::BigRational;

/// Name resolution for expressions: one presentation per tensor slot.
pub struct Env<'a> {
    pub slots: Vec<&'a Presentation>,
    pub field: FieldContext,
    pub line: usize,
}

impl<'a> Env<'a> {
    pub fn new(slots: Vec<&'a Presentation>) -> Self {
        let field = slots.first().map(|p| p.field()).unwrap_or(FieldContext::Transcendental);
        Env { slots, field, line: 1 }
    }

    pub fn scalars(field: FieldContext) -> Self {
        Env { slots: Vec::new(), field, line: 1 }
    }

    pub fn at_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }

    fn perr<T>(&self, col: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, col, msg: msg.into() })
    }

    fn split_ident(pres: &Presentation, s: &str) -> Option<Vec<Gen>> {
        if s.is_empty() {
            return Some(Vec::new());
        }
        for end in (1..=s.len()).rev() {
            if !s.is_char_boundary(end) {
                continue;
            }
            if let Some(g) = pres.gen_index(&s[..end]) {
                if let Some(mut rest) = Self::split_ident(pres, &s[end..]) {
                    rest.insert(0, g);
                    return Some(rest);
                }
            }
        }
        None
    }

    fn ident(&self, s: &str, col: usize, slot: usize) -> Result<TensorElem> {
        if s == "q" {
            return Ok(TensorElem::scalar(self.field.q()));
        }
        let Some(pres) = self.slots.get(slot) else {
            return self.perr(col, format!("`{s}` used outside any algebra slot"));
        };
        match Self::split_ident(pres, s) {
            Some(gens) => Ok(TensorElem::pure(vec![Word::from_slice(&gens)], Scalar::one())),
            None => Err(Error::UnknownGenerator(s.to_string())),
        }
    }

    fn unify(a: TensorElem, b: TensorElem) -> Option<(TensorElem, TensorElem)> {
        match (a.rank(), b.rank()) {
            (x, y) if x == y => Some((a, b)),
            (0, y) => Some((TensorElem::unit(y).scale(&a.as_scalar().unwrap()), b)),
            (_, 0) => {
                let r = a.rank();
                Some((a, TensorElem::unit(r).scale(&b.as_scalar().unwrap())))
            }
            _ => None,
        }
    }

    fn mul(&self, a: TensorElem, b: TensorElem) -> Result<TensorElem> {
        if a.rank() == 0 {
            let c = a.as_scalar().unwrap();
            return Ok(b.scale(&c));
        }
        if b.rank() == 0 {
            let c = b.as_scalar().unwrap();
            return Ok(a.scale(&c));
        }
        if a.rank() != b.rank() {
            return self.perr(0, "product of tensors of different rank");
        }
        Ok(a.mul_free(&b))
    }

    pub fn eval_at(&self, e: &Expr, slot: usize) -> Result<TensorElem> {
        match e {
            Expr::Num(n) => Ok(TensorElem::scalar(Scalar::from_rational(BigRational::from_integer(n.clone())))),
            Expr::Ident(s, col) => self.ident(s, *col, slot),
            Expr::Neg(x) => Ok(self.eval_at(x, slot)?.scale(&Scalar::from_int(-1))),
            Expr::Add(x, y) | Expr::Sub(x, y) => {
                let a = self.eval_at(x, slot)?;
                let b = self.eval_at(y, slot)?;
                let Some((a, b)) = Self::unify(a, b) else {
                    return self.perr(0, "sum of tensors of different rank");
                };
                let sign = if matches!(e, Expr::Add(..)) { 1 } else { -1 };
                let mut r = a;
                r.add_scaled(&b, &Scalar::from_int(sign));
                Ok(r)
            }
            Expr::Mul(x, y) => {
                let a = self.eval_at(x, slot)?;
                let b = self.eval_at(y, slot)?;
                self.mul(a, b)
            }
            Expr::Div(x, y, col) => {
                let a = self.eval_at(x, slot)?;
                let b = self.eval_at(y, slot)?;
                let Some(d) = b.as_scalar().filter(|_| b.rank() == 0) else {
                    return self.perr(*col, "division by a non-scalar");
                };
                let inv = d.inverse()?;
                Ok(a.scale(&inv))
            }
            Expr::Pow(x, n, col) => {
                let a = self.eval_at(x, slot)?;
                if a.rank() == 0 {
                    return Ok(TensorElem::scalar(a.as_scalar().unwrap().pow(*n)?));
                }
                if *n < 0 {
                    return self.perr(*col, "negative power of a non-scalar");
                }
                let mut acc = TensorElem::unit(a.rank());
                for _ in 0..*n {
                    acc = acc.mul_free(&a);
                }
                Ok(acc)
            }
            Expr::Tensor(parts) => {
                let mut acc = TensorElem::scalar(Scalar::one());
                let mut s = slot;
                for p in parts {
                    let mut v = self.eval_at(p, s)?;
                    if v.rank() == 0 {
                        v = TensorElem::unit(1).scale(&v.as_scalar().unwrap());
                    }
                    s += v.rank();
                    acc = acc.tensor(&v);
                }
                Ok(acc)
            }
        }
    }

    pub fn eval(&self, e: &Expr) -> Result<TensorElem> {
        self.eval_at(e, 0)
    }

    pub fn parse(&self, s: &str) -> Result<TensorElem> {
        self.eval(&parse_expr(s, self.line)?)
    }

    /// Parses a tensor of exactly the slot count, promoting scalars.
    pub fn parse_tensor(&self, s: &str) -> Result<TensorElem> {
        let t = self.parse(s)?;
        let n = self.slots.len();
        match t.rank() {
            0 => Ok(TensorElem::unit(n).scale(&t.as_scalar().unwrap())),
            r if r == n => Ok(t),
            r => self.perr(1, format!("expected a rank-{n} expression, found rank {r}")),
        }
    }

    /// Parses an element of the first slot's algebra (unreduced).
    pub fn parse_poly(&self, s: &str) -> Result<NCPoly> {
        let t = self.parse(s)?;
        match t.rank() {
            0 => Ok(NCPoly::scalar(t.as_scalar().unwrap())),
            1 => Ok(t.to_poly()),
            r => self.perr(1, format!("expected an algebra element, found a rank-{r} tensor")),
        }
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let t = self.parse(s)?;
        match t.as_scalar() {
            Some(c) if t.rank() == 0 || t.is_zero() => Ok(c),
            _ => self.perr(1, "expected a scalar"),
        }
    }
}

/// Parses a scalar such as `(q^2-1)/q` in the given field.
pub fn parse_scalar(s: &str, field: FieldContext) -> Result<Scalar> {
    Env::scalars(field).parse_scalar(s)
}

/// Parses an algebra element and reduces it to normal form.
pub fn parse_element(s: &str, pres: &Presentation) -> Result<NCPoly> {
    Ok(pres.normal_form(&Env::new(vec![pres]).parse_poly(s)?))
}
