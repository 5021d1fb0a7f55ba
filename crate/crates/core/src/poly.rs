//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are named `z0..z{k-1}`. Terms are kept in a `BTreeMap` ordered by
//! graded-lexicographic order (total degree first, then `z0 > z1 > ...`), so
//! iteration order and the leading term are deterministic. Zero coefficients
//! are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer as _, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Integer = BigInt;

/// At most 16 variables; exponents are dense small integers.
pub const MAX_VARS: usize = 16;

/// Exponent vector of one monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn degree_of(&self, var: usize) -> u16 {
        self.0[var]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise division; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }
}

/// Graded-lexicographic order with `z0 > z1 > ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(c.into()))
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(nvars, idx), Rational::one());
        p
    }

    pub fn monomial(nvars: usize, exps: &[u16], coeff: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exps.to_vec()), coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit(self.nvars))
                .is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().total_degree() == 0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.degree_of(var)).max()
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.check_vars(other).expect("variable count mismatch");
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.check_vars(other).expect("variable count mismatch");
        let mut r = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut r = MultiPoly::one(self.nvars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Reports whether every term has the same total degree.
    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Replaces `z_i` by `images[i]`, fully expanded.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::ImageCountMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let out_vars = images.first().map_or(0, MultiPoly::nvars);
        for img in images {
            if img.nvars != out_vars {
                return Err(Error::VariableMismatch(out_vars, img.nvars));
            }
        }
        // Cache powers of each image; exponents repeat across terms.
        let mut pow_cache: Vec<Vec<MultiPoly>> =
            images.iter().map(|p| vec![MultiPoly::one(out_vars), p.clone()]).collect();
        let power = |var: usize, e: u16, cache: &mut Vec<Vec<MultiPoly>>| -> MultiPoly {
            let col = &mut cache[var];
            while col.len() <= usize::from(e) {
                let next = col.last().unwrap().mul(&images[var]);
                col.push(next);
            }
            col[usize::from(e)].clone()
        };
        let mut r = MultiPoly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(out_vars, c.clone());
            for (var, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&power(var, e, &mut pow_cache));
                }
            }
            r = r.add(&t);
        }
        Ok(r)
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (var, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[var];
                }
            }
            acc += t;
        }
        acc
    }

    /// Renames variables: term exponent at old index `i` moves to `mapping[i]`.
    pub fn remap_vars(&self, mapping: &[usize], new_nvars: usize) -> MultiPoly {
        assert_eq!(mapping.len(), self.nvars);
        let mut r = MultiPoly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u16; new_nvars];
            for (i, &exp) in m.0.iter().enumerate() {
                if exp > 0 {
                    e[mapping[i]] += exp;
                }
            }
            r.add_term(Monomial(e), c.clone());
        }
        r
    }

    /// Sets variable `var` to 1 and drops it, renumbering later variables down.
    pub fn dehomogenize(&self, var: usize) -> MultiPoly {
        assert!(var < self.nvars);
        let mut r = MultiPoly::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let mut e = Vec::with_capacity(self.nvars - 1);
            for (i, &exp) in m.0.iter().enumerate() {
                if i != var {
                    e.push(exp);
                }
            }
            r.add_term(Monomial(e), c.clone());
        }
        r
    }

    /// Homogenizes to total degree `deg` by inserting a new variable at `var`.
    pub fn homogenize(&self, var: usize, deg: u32) -> MultiPoly {
        let nv = self.nvars + 1;
        let mut r = MultiPoly::zero(nv);
        for (m, c) in &self.terms {
            let td = m.total_degree();
            assert!(td <= deg, "degree larger than homogenization target");
            let fill = u16::try_from(deg - td).expect("exponent overflow");
            let mut e = Vec::with_capacity(nv);
            e.extend_from_slice(&m.0[..var]);
            e.push(fill);
            e.extend_from_slice(&m.0[var..]);
            r.add_term(Monomial(e), c.clone());
        }
        r
    }

    /// The positive rational `s` such that `self / s` has coprime integer
    /// coefficients; zero for the zero polynomial.
    pub fn rational_content(&self) -> Rational {
        let mut num_gcd = Integer::zero();
        let mut den_lcm = Integer::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new_raw(num_gcd, den_lcm)
    }

    /// Canonical representative: coprime integer coefficients, positive
    /// graded-lex leading coefficient.
    pub fn canonical(&self) -> MultiPoly {
        match self.canonical_scalar() {
            None => self.clone(),
            Some(s) => self.scale(&s.recip()),
        }
    }

    /// The scalar `s` with `self = s * self.canonical()`; `None` for zero.
    pub fn canonical_scalar(&self) -> Option<Rational> {
        let (_, lead) = self.leading()?;
        let mut s = self.rational_content();
        if lead.is_negative() {
            s = -s;
        }
        Some(s)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.check_vars(divisor).expect("variable count mismatch");
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        let (dm, dc) = {
            let (m, c) = divisor.leading().unwrap();
            (m.clone(), c.clone())
        };
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            rem = rem.sub(&divisor.mul_monomial(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    /// The zero polynomial: no degree, distinguished flag.
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical text form: terms in graded-lex descending order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let constant_term = m.total_degree() == 0;
            let mut wrote = false;
            if !abs.is_one() || constant_term {
                if abs.denom().is_one() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "{}/{}", abs.numer(), abs.denom())?;
                }
                wrote = true;
            }
            for (var, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "z{var}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}
