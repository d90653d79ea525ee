//! Exact coefficient fields: rational functions `Q(q)` and cyclotomic fields `Q(ζ_m)`.
//!
//! Rational constants are shared by every field, so `Scalar::zero()` and
//! `Scalar::one()` need no context. A scalar that genuinely depends on `q`
//! belongs to exactly one field; combining scalars from two different fields
//! is a [`ScalarError::MixedContext`].

mod poly;

pub use poly::Poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars from different coefficient fields were combined")]
    MixedContext,
}

/// Which field the indeterminate `q` lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldContext {
    /// `q` is transcendental: the field is `Q(q)`.
    Transcendental,
    /// `q` is a primitive `m`-th root of unity: the field is `Q[q]/Φ_m(q)`.
    Cyclotomic(u32),
}

impl FieldContext {
    /// The distinguished element `q` of this field.
    pub fn q(&self) -> Scalar {
        match *self {
            FieldContext::Transcendental => Scalar::q(),
            FieldContext::Cyclotomic(m) => Scalar::cyclotomic(m, Poly::monomial(BigRational::one(), 1)),
        }
    }

    pub fn parse(s: &str) -> Option<FieldContext> {
        let s = s.trim();
        if s == "transcendental" {
            return Some(FieldContext::Transcendental);
        }
        let rest = s.strip_prefix("cyclotomic")?.trim_start_matches([':', ' ']);
        let m: u32 = rest.trim().parse().ok()?;
        (m >= 1).then_some(FieldContext::Cyclotomic(m))
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldContext::Transcendental => write!(f, "transcendental"),
            FieldContext::Cyclotomic(m) => write!(f, "cyclotomic:{m}"),
        }
    }
}

/// The `m`-th cyclotomic polynomial, by dividing `q^m - 1` by `Φ_d` for the proper divisors `d`.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Poly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    assert!(m >= 1, "cyclotomic order must be positive");
    let mut num = Poly::monomial(BigRational::one(), m as usize).sub(&Poly::one());
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (quot, rem) = num.div_rem(&cyclotomic_polynomial(d));
            debug_assert!(rem.is_zero());
            num = quot;
        }
    }
    let phi = Arc::new(num);
    cache.lock().unwrap().insert(m, phi.clone());
    phi
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// `num / den` with `den` monic and `gcd(num, den) = 1`; constants live here too.
    Frac { num: Poly, den: Poly },
    /// Residue of degree `1 ..= deg Φ_m - 1` modulo `Φ_m`.
    Cyclo { m: u32, rep: Poly },
}

/// An element of one of the coefficient fields. Immutable value type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Frac { num: Poly::zero(), den: Poly::one() })
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Frac { num: Poly::from_i64(n), den: Poly::one() })
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar(Repr::Frac { num: Poly::constant(r), den: Poly::one() })
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The transcendental indeterminate `q ∈ Q(q)`.
    pub fn q() -> Self {
        Scalar(Repr::Frac { num: Poly::monomial(BigRational::one(), 1), den: Poly::one() })
    }

    /// Builds `num/den ∈ Q(q)` in canonical form.
    pub fn fraction(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize_frac(num, den))
    }

    /// Residue class of `rep` in `Q(ζ_m)`.
    pub fn cyclotomic(m: u32, rep: Poly) -> Self {
        let phi = cyclotomic_polynomial(m);
        Self::make_cyclo(m, rep.rem(&phi))
    }

    fn make_cyclo(m: u32, rep: Poly) -> Self {
        if rep.is_constant() {
            Scalar(Repr::Frac { num: rep, den: Poly::one() })
        } else {
            Scalar(Repr::Cyclo { m, rep })
        }
    }

    fn normalize_frac(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((c, k)) = den.as_monomial() {
            let v = num.valuation().unwrap_or(0);
            let common = v.min(k);
            let inv = c.recip();
            let num = num.shift_down(common).scale(&inv);
            let den = Poly::monomial(BigRational::one(), k - common);
            return Scalar(Repr::Frac { num, den });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let lead = den.leading().expect("nonzero").recip();
        Scalar(Repr::Frac { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Frac { num, .. } if num.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Frac { num, den } if num.is_one() && den.is_one())
    }

    /// True for rational constants, which belong to every field.
    pub fn is_constant(&self) -> bool {
        matches!(&self.0, Repr::Frac { num, den } if num.is_constant() && den.is_one())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant().then(|| match &self.0 {
            Repr::Frac { num, .. } => num.constant_term(),
            Repr::Cyclo { .. } => unreachable!(),
        })
    }

    /// The field this scalar forces, if it is not a rational constant.
    pub fn context(&self) -> Option<FieldContext> {
        match &self.0 {
            Repr::Cyclo { m, .. } => Some(FieldContext::Cyclotomic(*m)),
            Repr::Frac { .. } if self.is_constant() => None,
            Repr::Frac { .. } => Some(FieldContext::Transcendental),
        }
    }

    /// Numerator and denominator for rational-function scalars.
    pub fn as_fraction(&self) -> Option<(&Poly, &Poly)> {
        match &self.0 {
            Repr::Frac { num, den } => Some((num, den)),
            Repr::Cyclo { .. } => None,
        }
    }

    fn cyclo_parts(&self, m: u32) -> Result<Poly, ScalarError> {
        match &self.0 {
            Repr::Cyclo { m: m2, rep } if *m2 == m => Ok(rep.clone()),
            Repr::Cyclo { .. } => Err(ScalarError::MixedContext),
            Repr::Frac { num, den } if num.is_constant() && den.is_one() => Ok(num.clone()),
            Repr::Frac { .. } => Err(ScalarError::MixedContext),
        }
    }

    fn cyclo_mode(&self, other: &Scalar) -> Result<Option<u32>, ScalarError> {
        match (&self.0, &other.0) {
            (Repr::Cyclo { m, .. }, Repr::Cyclo { m: m2, .. }) if m != m2 => Err(ScalarError::MixedContext),
            (Repr::Cyclo { m, .. }, _) | (_, Repr::Cyclo { m, .. }) => Ok(Some(*m)),
            _ => Ok(None),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if let Some(m) = self.cyclo_mode(other)? {
            let a = self.cyclo_parts(m)?;
            let b = other.cyclo_parts(m)?;
            return Ok(Self::make_cyclo(m, a.add(&b)));
        }
        let (Repr::Frac { num: a, den: b }, Repr::Frac { num: c, den: d }) = (&self.0, &other.0) else {
            unreachable!()
        };
        if c.is_zero() {
            return Ok(self.clone());
        }
        if a.is_zero() {
            return Ok(other.clone());
        }
        if b == d {
            return Ok(Self::normalize_frac(a.add(c), b.clone()));
        }
        if let (Some((_, k1)), Some((_, k2))) = (b.as_monomial(), d.as_monomial()) {
            // both denominators are powers of q
            let k = k1.max(k2);
            let num = a.shift_up(k - k1).add(&c.shift_up(k - k2));
            return Ok(Self::normalize_frac(num, Poly::monomial(BigRational::one(), k)));
        }
        Ok(Self::normalize_frac(a.mul(d).add(&c.mul(b)), b.mul(d)))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if self.is_zero() || other.is_zero() {
            // still reject mixing fields
            self.cyclo_mode(other)?;
            return Ok(Scalar::zero());
        }
        if let Some(m) = self.cyclo_mode(other)? {
            let a = self.cyclo_parts(m)?;
            let b = other.cyclo_parts(m)?;
            return Ok(Self::cyclotomic(m, a.mul(&b)));
        }
        let (Repr::Frac { num: a, den: b }, Repr::Frac { num: c, den: d }) = (&self.0, &other.0) else {
            unreachable!()
        };
        if self.is_one() {
            return Ok(other.clone());
        }
        if other.is_one() {
            return Ok(self.clone());
        }
        Ok(Self::normalize_frac(a.mul(c), b.mul(d)))
    }

    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match &self.0 {
            Repr::Frac { num, den } => Ok(Self::normalize_frac(den.clone(), num.clone())),
            Repr::Cyclo { m, rep } => {
                let phi = cyclotomic_polynomial(*m);
                let inv = rep.inverse_mod(&phi).ok_or(ScalarError::DivisionByZero)?;
                Ok(Self::make_cyclo(*m, inv))
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.cyclo_mode(other)?;
        self.checked_mul(&other.inverse()?)
    }

    /// `a^n`; negative exponents require `a ≠ 0`.
    pub fn pow(&self, n: i64) -> Result<Scalar, ScalarError> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Frac { num, den } => Scalar(Repr::Frac { num: num.neg(), den: den.clone() }),
            Repr::Cyclo { m, rep } => Scalar(Repr::Cyclo { m: *m, rep: rep.neg() }),
        }
    }

    /// Rough size measure, used to pick sparse pivots in linear solves.
    pub fn complexity(&self) -> usize {
        match &self.0 {
            Repr::Frac { num, den } => num.term_count() + den.term_count(),
            Repr::Cyclo { rep, .. } => rep.term_count(),
        }
    }
}

fn expect<T>(r: Result<T, ScalarError>) -> T {
    r.unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                expect(self.$checked(rhs))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                expect(self.$checked(&rhs))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                expect(self.$checked(rhs))
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                expect(self.$checked(&rhs))
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = expect(self.checked_add(rhs));
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = expect(self.checked_sub(rhs));
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = expect(self.checked_mul(rhs));
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    /// True if printing needs parentheses when used as a factor.
    pub fn is_compound(&self) -> bool {
        match &self.0 {
            Repr::Frac { num, den } => num.term_count() > 1 || !den.is_one(),
            Repr::Cyclo { rep, .. } => rep.term_count() > 1,
        }
    }

    /// True if the printed form starts with a minus sign and is a single term.
    pub fn is_negative_term(&self) -> bool {
        use num_traits::Signed;
        match &self.0 {
            Repr::Frac { num, den } => {
                den.is_one() && num.term_count() == 1 && num.leading().is_some_and(|c| c.is_negative())
            }
            Repr::Cyclo { rep, .. } => rep.term_count() == 1 && rep.leading().is_some_and(|c| c.is_negative()),
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical text: `q^2-1`, `(q^2-1)/q`, `1/q^2`, `-3/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Frac { num, den } => {
                if den.is_one() {
                    return write!(f, "{num}");
                }
                if num.term_count() > 1 {
                    write!(f, "({num})")?;
                } else {
                    write!(f, "{num}")?;
                }
                if den.term_count() > 1 || den.leading().is_some_and(|c| !c.is_one()) {
                    write!(f, "/({den})")
                } else {
                    write!(f, "/{den}")
                }
            }
            Repr::Cyclo { rep, .. } => write!(f, "{rep}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.context() {
            Some(FieldContext::Cyclotomic(m)) => write!(f, "{self} [mod Φ_{m}]"),
            _ => write!(f, "{self}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn canonicalizes_sum_with_zero() {
        let a = q() - q().inverse().unwrap();
        let b = &a + &Scalar::zero();
        assert_eq!(b.to_string(), "(q^2-1)/q");
        assert_eq!(a, b);
    }

    #[test]
    fn ring_law_cancellation() {
        let a = (Scalar::one() - q().pow(-2).unwrap()) * q().pow(2).unwrap();
        assert_eq!(a, q().pow(2).unwrap() - Scalar::one());
        assert_eq!(a.to_string(), "q^2-1");
    }

    #[test]
    fn primitive_cube_root() {
        let z = FieldContext::Cyclotomic(3).q();
        assert!((&z * &z * &z).is_one());
        assert!(!(&z * &z).is_one());
    }

    #[test]
    fn powers() {
        assert_eq!(q().pow(6).unwrap().to_string(), "q^6");
        assert_eq!(q().pow(-2).unwrap().to_string(), "1/q^2");
        let i = FieldContext::Cyclotomic(4).q();
        assert_eq!(i.pow(2).unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn errors() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(ScalarError::DivisionByZero));
        assert_eq!(Scalar::zero().pow(-1), Err(ScalarError::DivisionByZero));
        let z3 = FieldContext::Cyclotomic(3).q();
        let z5 = FieldContext::Cyclotomic(5).q();
        assert_eq!(z3.checked_add(&z5), Err(ScalarError::MixedContext));
        assert_eq!(z3.checked_mul(&q()), Err(ScalarError::MixedContext));
        // constants are shared by every field
        assert!(z3.checked_add(&Scalar::from_int(2)).is_ok());
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).to_string(), "q-1");
        assert_eq!(cyclotomic_polynomial(4).to_string(), "q^2+1");
        assert_eq!(cyclotomic_polynomial(6).to_string(), "q^2-q+1");
        assert_eq!(cyclotomic_polynomial(12).to_string(), "q^4-q^2+1");
    }

    #[test]
    fn primitive_root_orders() {
        for m in 1..=12u32 {
            let z = FieldContext::Cyclotomic(m).q();
            assert!(z.pow(m as i64).unwrap().is_one(), "ζ_{m}^{m}");
            for k in 1..m {
                assert!(!z.pow(k as i64).unwrap().is_one(), "ζ_{m}^{k}");
            }
        }
    }

    #[test]
    fn general_denominators() {
        let a = Scalar::fraction(
            Poly::one(),
            Poly::from_coeffs(vec![1.into(), 1.into()].into_iter().map(BigRational::from_integer).collect()),
        )
        .unwrap();
        // 1/(q+1) + q/(q+1) = 1
        let b = &a * &q();
        assert!((&a + &b).is_one());
    }
}
