//! Rational functions and the tagged field element used by the homography
//! and linear-factorization layers: either a rational number or a rational
//! function over a declared variable set. Arithmetic never mixes distinct
//! variable sets.

use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gcd::poly_gcd;
use crate::poly::{MultiPoly, Rational};

/// Quotient of two polynomials in fully reduced form: `gcd(num, den) = 1`
/// and the denominator is canonical (coprime integer coefficients, positive
/// leading coefficient). The representative is unique, so structural
/// equality agrees with cross-multiplication equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Reduces `num/den` to canonical form; idempotent.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.nvars() != den.nvars() {
            return Err(Error::VariableMismatch(num.nvars(), den.nvars()));
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: MultiPoly::one(den.nvars()),
            });
        }
        let g = poly_gcd(&num, &den)?;
        let (mut num, mut den) = (
            num.div_exact(&g).expect("gcd divides"),
            den.div_exact(&g).expect("gcd divides"),
        );
        let s = den.canonical_scalar().expect("nonzero denominator");
        den = den.scale(&s.recip());
        num = num.scale(&s.recip());
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> RatFunc {
        let nv = p.nvars();
        RatFunc {
            num: p,
            den: MultiPoly::one(nv),
        }
    }

    pub fn zero(nvars: usize) -> RatFunc {
        RatFunc::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> RatFunc {
        RatFunc::from_poly(MultiPoly::one(nvars))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero denominators")
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Element of a computable field: the rationals, or rational functions over
/// a declared variable set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldElem {
    Rat(Rational),
    Fun(RatFunc),
}

impl FieldElem {
    pub fn from_int(n: i64) -> FieldElem {
        FieldElem::Rat(Rational::from_integer(n.into()))
    }

    pub fn zero() -> FieldElem {
        FieldElem::from_int(0)
    }

    pub fn one() -> FieldElem {
        FieldElem::from_int(1)
    }

    pub fn from_poly(p: MultiPoly) -> FieldElem {
        FieldElem::Fun(RatFunc::from_poly(p))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_zero(),
            FieldElem::Fun(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_one(),
            FieldElem::Fun(q) => q.num.is_one() && q.den.is_one(),
        }
    }

    /// Variable count of the function field, if any.
    pub fn field_vars(&self) -> Option<usize> {
        match self {
            FieldElem::Rat(_) => None,
            FieldElem::Fun(q) => Some(q.nvars()),
        }
    }

    fn promote(&self, nvars: usize) -> RatFunc {
        match self {
            FieldElem::Rat(r) => RatFunc::from_poly(MultiPoly::constant(nvars, r.clone())),
            FieldElem::Fun(q) => {
                assert_eq!(
                    q.nvars(),
                    nvars,
                    "field elements from different variable sets"
                );
                q.clone()
            }
        }
    }

    fn binop(
        &self,
        other: &FieldElem,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        fun: impl Fn(&RatFunc, &RatFunc) -> RatFunc,
    ) -> FieldElem {
        match (self.field_vars(), other.field_vars()) {
            (None, None) => {
                let (FieldElem::Rat(a), FieldElem::Rat(b)) = (self, other) else {
                    unreachable!()
                };
                FieldElem::Rat(rat(a, b))
            }
            (va, vb) => {
                let nv = va.or(vb).unwrap();
                FieldElem::Fun(fun(&self.promote(nv), &other.promote(nv)))
            }
        }
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        self.binop(other, |a, b| a + b, RatFunc::add)
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.binop(other, |a, b| a - b, RatFunc::sub)
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        self.binop(other, |a, b| a * b, RatFunc::mul)
    }

    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Rat(r) => FieldElem::Rat(-r),
            FieldElem::Fun(q) => FieldElem::Fun(q.neg()),
        }
    }

    pub fn recip(&self) -> Result<FieldElem> {
        match self {
            FieldElem::Rat(r) => {
                if r.is_zero() {
                    Err(Error::ZeroDenominator)
                } else {
                    Ok(FieldElem::Rat(r.recip()))
                }
            }
            FieldElem::Fun(q) => Ok(FieldElem::Fun(q.recip()?)),
        }
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.mul(&other.recip()?))
    }

    /// Equality after promoting to a common variable set.
    pub fn eq_elem(&self, other: &FieldElem) -> bool {
        match (self.field_vars(), other.field_vars()) {
            (None, None) => self == other,
            (va, vb) => {
                if let (Some(a), Some(b)) = (va, vb) {
                    assert_eq!(a, b, "field elements from different variable sets");
                }
                let nv = va.or(vb).unwrap();
                self.promote(nv) == other.promote(nv)
            }
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", r.numer().abs(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElem::Fun(q) => write!(f, "{q}"),
        }
    }
}

/// Spec-level entry point: reduce `num/den` to canonical form.
pub fn ratfunc_normalize(num: MultiPoly, den: MultiPoly) -> Result<RatFunc> {
    RatFunc::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;

    fn p(nvars: usize, s: &str) -> MultiPoly {
        parse_poly(s, nvars).unwrap()
    }

    #[test]
    fn normalize_cancels() {
        let q = RatFunc::new(p(2, "z0*z1"), p(2, "z1")).unwrap();
        assert_eq!(q.num(), &p(2, "z0"));
        assert!(q.is_polynomial());
        let r = RatFunc::new(p(2, "z0^2-z1^2"), p(2, "z0+z1")).unwrap();
        assert_eq!(r.num(), &p(2, "z0-z1"));
    }

    #[test]
    fn normalize_zero() {
        let q = RatFunc::new(p(2, "0"), p(2, "z1")).unwrap();
        assert!(q.is_zero());
        assert!(q.den().is_one());
        assert!(RatFunc::new(p(2, "z0"), p(2, "0")).is_err());
    }

    #[test]
    fn normalize_idempotent_and_canonical_den() {
        let q = RatFunc::new(p(1, "z0"), p(1, "-2*z0+2")).unwrap();
        let r = RatFunc::new(q.num().clone(), q.den().clone()).unwrap();
        assert_eq!(q, r);
        assert!(q.den().canonical_scalar().unwrap().is_one());
    }

    #[test]
    fn field_elem_promotion() {
        let half = FieldElem::Rat(Rational::new(1.into(), 2.into()));
        let z = FieldElem::from_poly(p(1, "z0"));
        let s = half.add(&z);
        assert_eq!(s.to_string(), "z0 + 1/2");
        assert!(s.sub(&z).eq_elem(&half));
    }
}
