//! Multivariate GCD over the rationals by recursive content / primitive-part
//! reduction and a primitive pseudo-remainder sequence in a chosen main
//! variable. Adequate at desk scale; sits behind `poly_gcd` so it can be
//! swapped out without touching callers.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly, Rational};

/// Greatest common divisor in canonical form; canonical 1 when coprime,
/// `gcd(0, q) = canonical(q)`.
pub fn poly_gcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    if p.nvars() != q.nvars() {
        return Err(Error::VariableMismatch(p.nvars(), q.nvars()));
    }
    Ok(gcd_inner(p, q))
}

/// GCD of a whole slice; canonical 0 for an empty or all-zero slice.
pub fn poly_gcd_many(polys: &[MultiPoly]) -> Result<MultiPoly> {
    let mut acc: Option<MultiPoly> = None;
    for p in polys {
        acc = Some(match acc {
            None => p.canonical(),
            Some(g) => {
                if g.is_one() {
                    return Ok(g); // cannot shrink further
                }
                poly_gcd(&g, p)?
            }
        });
    }
    Ok(acc.unwrap_or_else(|| MultiPoly::zero(0)))
}

fn gcd_inner(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let nvars = p.nvars();
    if p.is_zero() {
        return q.canonical();
    }
    if q.is_zero() {
        return p.canonical();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(nvars);
    }
    // Main variable: present in both, smallest worst-case degree. With no
    // shared variable the gcd is a unit.
    let mut main: Option<(usize, u16)> = None;
    for v in 0..nvars {
        let (dp, dq) = (p.degree_in(v).unwrap_or(0), q.degree_in(v).unwrap_or(0));
        if dp > 0 && dq > 0 {
            let w = dp.max(dq);
            if main.is_none_or(|(_, best)| w < best) {
                main = Some((v, w));
            }
        }
    }
    let Some((v, _)) = main else {
        return MultiPoly::one(nvars);
    };

    let pu = to_univariate(p, v);
    let qu = to_univariate(q, v);
    let (pc, pp) = content_primitive(&pu);
    let (qc, qp) = content_primitive(&qu);
    let cont_gcd = gcd_inner(&pc, &qc);

    let prim_gcd = primitive_euclid(pp, qp);
    cont_gcd.mul(&from_univariate(&prim_gcd, v)).canonical()
}

/// Coefficient vector in variable `v` (index = exponent of `v`); the
/// coefficients keep the full variable count with `v`-degree zero.
fn to_univariate(p: &MultiPoly, v: usize) -> Vec<MultiPoly> {
    let d = usize::from(p.degree_in(v).unwrap_or(0));
    let mut coeffs = vec![MultiPoly::zero(p.nvars()); d + 1];
    for (m, c) in p.terms() {
        let e = usize::from(m.degree_of(v));
        let mut stripped = m.clone();
        stripped.0[v] = 0;
        coeffs[e].add_term(stripped, c.clone());
    }
    coeffs
}

fn from_univariate(coeffs: &[MultiPoly], v: usize) -> MultiPoly {
    let nvars = coeffs.first().map_or(0, MultiPoly::nvars);
    let mut r = MultiPoly::zero(nvars);
    for (e, c) in coeffs.iter().enumerate() {
        let mut shift = Monomial::unit(nvars);
        shift.0[v] = u16::try_from(e).expect("exponent overflow");
        r = r.add(&c.mul_monomial(&shift, &Rational::one()));
    }
    r
}

fn univ_degree(coeffs: &[MultiPoly]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

fn trim(coeffs: &mut Vec<MultiPoly>) {
    while coeffs.last().is_some_and(MultiPoly::is_zero) {
        coeffs.pop();
    }
}

/// Splits into (content, primitive part) with respect to the main variable.
/// The primitive part is also stripped of its common rational scalar — the
/// polynomial content is canonical and so never carries it, and leaving the
/// scalar in place lets the remainder sequence accumulate giant integers.
fn content_primitive(coeffs: &[MultiPoly]) -> (MultiPoly, Vec<MultiPoly>) {
    let nonzero: Vec<MultiPoly> = coeffs.iter().filter(|c| !c.is_zero()).cloned().collect();
    let content = poly_gcd_many(&nonzero).expect("uniform variable count");
    let mut prim: Vec<MultiPoly> = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                c.div_exact(&content).expect("content divides coefficients")
            }
        })
        .collect();
    let mut num = num::BigInt::from(0);
    let mut den = num::BigInt::from(1);
    for c in prim.iter().filter(|c| !c.is_zero()) {
        let rc = c.rational_content();
        num = num::Integer::gcd(&num, rc.numer());
        den = num::Integer::lcm(&den, rc.denom());
    }
    if !num.is_zero() {
        let inv = Rational::new(den, num);
        for c in prim.iter_mut() {
            *c = c.scale(&inv);
        }
    }
    (content, prim)
}

/// Primitive PRS on primitive inputs; returns the primitive gcd as a
/// coefficient vector.
fn primitive_euclid(mut a: Vec<MultiPoly>, mut b: Vec<MultiPoly>) -> Vec<MultiPoly> {
    trim(&mut a);
    trim(&mut b);
    if univ_degree(&a) < univ_degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let Some(db) = univ_degree(&b) else {
            return a;
        };
        if db == 0 {
            // Nonzero "constant" in v: inputs are primitive, so the gcd is 1.
            let nvars = b[0].nvars();
            return vec![MultiPoly::one(nvars)];
        }
        let r = pseudo_rem(&a, &b, db);
        let (_, rp) = content_primitive(&r);
        a = b;
        b = rp;
        trim(&mut b);
    }
}

/// Pseudo-remainder of `a` by `b` in the main variable (`deg b = db >= 1`),
/// up to content. The multipliers are reduced by their gcd and the content
/// is stripped after every step; without this the coefficients of multi-
/// variable remainders grow multiplicatively and the sequence, while still
/// finite, stops being computable in practice.
fn pseudo_rem(a: &[MultiPoly], b: &[MultiPoly], db: usize) -> Vec<MultiPoly> {
    let lb = &b[db];
    let mut r = a.to_vec();
    loop {
        trim(&mut r);
        let Some(dr) = univ_degree(&r) else {
            return r;
        };
        if dr < db {
            return r;
        }
        let lr = r[dr].clone();
        let g = gcd_inner(&lr, lb);
        let lb_red = lb.div_exact(&g).expect("gcd divides");
        let lr_red = lr.div_exact(&g).expect("gcd divides");
        // r = (lb/g)*r - (lr/g) * x^(dr-db) * b
        for c in r.iter_mut() {
            *c = c.mul(&lb_red);
        }
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = r[idx].sub(&lr_red.mul(bc));
        }
        debug_assert!(r[dr].is_zero());
        let (_, stripped) = content_primitive(&r);
        r = stripped;
    }
}
