//! Shared generators for the seeded property and acceptance suites.

#![allow(dead_code)]

use cremona_core::{
    FieldElem, Homography, Integer, MatZ, MultiPoly, PolyAut, RatFunc, Rational,
};
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(r: &mut ChaCha8Rng, height: i64) -> Rational {
    let num = r.gen_range(-height..=height);
    let den = r.gen_range(1..=height);
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn nonzero_rational(r: &mut ChaCha8Rng, height: i64) -> Rational {
    loop {
        let q = rational(r, height);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Random invertible homography over ℚ with integer entries of bounded size.
pub fn pgl2q(r: &mut ChaCha8Rng, height: i64) -> Homography {
    loop {
        let e: Vec<i64> = (0..4).map(|_| r.gen_range(-height..=height)).collect();
        if e[0] * e[3] - e[1] * e[2] != 0 {
            return Homography::from_ints(e[0], e[1], e[2], e[3]).unwrap();
        }
    }
}

/// Random polynomial in `nvars` variables of total degree ≤ `maxdeg` with
/// small integer coefficients.
pub fn poly(r: &mut ChaCha8Rng, nvars: usize, maxdeg: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    let terms = r.gen_range(1..=3);
    for _ in 0..terms {
        let mut exps = vec![0u16; nvars];
        let mut budget = maxdeg;
        for e in exps.iter_mut() {
            let d = r.gen_range(0..=budget) as u16;
            *e = d;
            budget -= d as u32;
        }
        let c = r.gen_range(-4i64..=4);
        if c != 0 {
            p = p.add(&MultiPoly::monomial(nvars, &exps, Rational::from_integer(c.into())));
        }
    }
    p
}

pub fn nonzero_poly(r: &mut ChaCha8Rng, nvars: usize, maxdeg: u32) -> MultiPoly {
    loop {
        let p = poly(r, nvars, maxdeg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random invertible homography with polynomial coefficients in `nvars`
/// inner variables (entries of degree ≤ `maxdeg`).
pub fn pgl2_polyring(r: &mut ChaCha8Rng, nvars: usize, maxdeg: u32) -> Homography {
    loop {
        let entry = |r: &mut ChaCha8Rng| -> FieldElem {
            if r.gen_bool(0.3) {
                FieldElem::Rat(rational(r, 4))
            } else {
                FieldElem::Fun(RatFunc::from_poly(poly(r, nvars, maxdeg)))
            }
        };
        let m = [[entry(r), entry(r)], [entry(r), entry(r)]];
        if let Ok(h) = Homography::new(m) {
            return h;
        }
    }
}

/// Random unimodular integer matrix built from elementary operations.
#[allow(clippy::needless_range_loop)]
pub fn glnz(r: &mut ChaCha8Rng, n: usize, ops: usize) -> MatZ {
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..ops {
        match r.gen_range(0..3) {
            0 => {
                let i = r.gen_range(0..n);
                let mut j = r.gen_range(0..n);
                while j == i {
                    j = r.gen_range(0..n);
                }
                let k = r.gen_range(-3i64..=3);
                for c in 0..n {
                    rows[i][c] += k * rows[j][c];
                }
            }
            1 => {
                let i = r.gen_range(0..n);
                let j = r.gen_range(0..n);
                rows.swap(i, j);
            }
            _ => {
                let i = r.gen_range(0..n);
                for c in 0..n {
                    rows[i][c] = -rows[i][c];
                }
            }
        }
    }
    MatZ::from_ints(rows).unwrap()
}

pub fn matz_eq(a: &MatZ, b: &MatZ) -> bool {
    a.entries() == b.entries()
}

/// Triangular-regime letter for the plane: (a·z0 + p(z1), b·z1 + c) with
/// deg p ≥ 2 so it avoids the affine overlap.
pub fn elementary_letter(r: &mut ChaCha8Rng, deg: u32) -> PolyAut {
    let a = nonzero_rational(r, 3);
    let b = nonzero_rational(r, 3);
    let c = rational(r, 3);
    let p = loop {
        let mut q = nonzero_poly(r, 1, deg);
        // Force the top coefficient so the degree is exact and ≥ 2.
        q = q.add(&MultiPoly::monomial(
            1,
            &[deg as u16],
            Rational::from_integer(1.into()),
        ));
        if q.total_degree() == Some(deg) {
            break q;
        }
    };
    let p2 = p.remap_vars(&[1], 2);
    let comp0 = MultiPoly::var(2, 0).scale(&a).add(&p2);
    let comp1 = MultiPoly::var(2, 1)
        .scale(&b)
        .add(&MultiPoly::constant(2, c));
    PolyAut::new(vec![comp0, comp1]).unwrap()
}

/// Affine-regime letter for the plane whose second component involves z0,
/// keeping it out of the triangular overlap.
pub fn affine_letter(r: &mut ChaCha8Rng) -> PolyAut {
    loop {
        let a = rational(r, 3);
        let b = rational(r, 3);
        let c = nonzero_rational(r, 3);
        let d = rational(r, 3);
        if (a.clone() * d.clone() - b.clone() * c.clone()).is_zero() {
            continue;
        }
        let comp0 = MultiPoly::var(2, 0)
            .scale(&a)
            .add(&MultiPoly::var(2, 1).scale(&b))
            .add(&MultiPoly::constant(2, rational(r, 3)));
        let comp1 = MultiPoly::var(2, 0)
            .scale(&c)
            .add(&MultiPoly::var(2, 1).scale(&d))
            .add(&MultiPoly::constant(2, rational(r, 3)));
        return PolyAut::new(vec![comp0, comp1]).unwrap();
    }
}

fn affine_form(r: &mut ChaCha8Rng, nvars: usize, vars: &[usize], coeffs: &[Rational]) -> MultiPoly {
    let mut p = MultiPoly::constant(nvars, rational(r, 3));
    for (v, c) in vars.iter().zip(coeffs) {
        p = p.add(&MultiPoly::var(nvars, *v).scale(c));
    }
    p
}

/// Triangular letter in three variables: quadratic-or-cubic in z1 on top of
/// an invertible affine action on (z1, z2).
pub fn h1_letter(r: &mut ChaCha8Rng, deg: u32) -> PolyAut {
    loop {
        let a = nonzero_rational(r, 3);
        let mut p = nonzero_poly(r, 1, deg);
        p = p.add(&MultiPoly::monomial(
            1,
            &[deg as u16],
            Rational::from_integer(1.into()),
        ));
        if p.total_degree() != Some(deg) {
            continue;
        }
        let p3 = p.remap_vars(&[1], 3);
        let comp0 = MultiPoly::var(3, 0).scale(&a).add(&p3);
        let m: Vec<Rational> = (0..4).map(|_| rational(r, 3)).collect();
        if (m[0].clone() * m[3].clone() - m[1].clone() * m[2].clone()).is_zero() {
            continue;
        }
        let comp1 = affine_form(r, 3, &[1, 2], &[m[0].clone(), m[1].clone()]);
        let comp2 = affine_form(r, 3, &[1, 2], &[m[2].clone(), m[3].clone()]);
        return PolyAut::new(vec![comp0, comp1, comp2]).unwrap();
    }
}

/// Near-triangular affine letter in three variables with a genuine z0 term
/// in the second component, keeping it out of the overlap.
pub fn h2_letter(r: &mut ChaCha8Rng) -> PolyAut {
    loop {
        let alpha = nonzero_rational(r, 3);
        let beta = rational(r, 3);
        let delta = nonzero_rational(r, 3);
        let comp0 = MultiPoly::var(3, 0)
            .scale(&alpha)
            .add(&MultiPoly::var(3, 1).scale(&beta))
            .add(&MultiPoly::constant(3, rational(r, 3)));
        let c1 = [rational(r, 3), rational(r, 3)];
        let comp1 = MultiPoly::var(3, 0)
            .scale(&delta)
            .add(&affine_form(r, 3, &[1, 2], &c1));
        let c2 = [rational(r, 3), nonzero_rational(r, 3)];
        let comp2 = affine_form(r, 3, &[1, 2], &c2);
        let cand = PolyAut::new(vec![comp0, comp1, comp2]).unwrap();
        if cremona_core::is_extended_affine(&cand) && !cremona_core::is_elementary(&cand) {
            return cand;
        }
    }
}
