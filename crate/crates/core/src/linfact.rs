//! Factoring linear groups into involutions: SL(n,K) through transvections,
//! PGL(2) over polynomial rings through the determinant-scaling trick,
//! GL(n,ℤ) through integer elimination, and the matrix → monomial-map
//! functor.
//!
//! Factor lists in this module are in product order: the ordered matrix
//! product of the returned factors equals the input.

// Row operations read one row while writing another; indexed loops are the
// clearest way to write them.
#![allow(clippy::needless_range_loop)]

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::homography::Homography;
use crate::poly::{MultiPoly, Rational};
use crate::projmap::ProjMap;
use crate::ratfunc::FieldElem;

/// Invertible n×n matrix over ℚ or a rational function field.
#[derive(Clone, Debug)]
pub struct MatK {
    n: usize,
    m: Vec<Vec<FieldElem>>,
}

impl MatK {
    pub fn new(m: Vec<Vec<FieldElem>>) -> Result<MatK> {
        let n = m.len();
        if n == 0 || m.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix must be square".into()));
        }
        let mat = MatK { n, m };
        if mat.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(mat)
    }

    pub fn identity(n: usize) -> MatK {
        MatK {
            n,
            m: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                FieldElem::one()
                            } else {
                                FieldElem::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_rationals(rows: Vec<Vec<Rational>>) -> Result<MatK> {
        MatK::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(FieldElem::Rat).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &Vec<Vec<FieldElem>> {
        &self.m
    }

    pub fn mul(&self, other: &MatK) -> MatK {
        assert_eq!(self.n, other.n, "size mismatch");
        let n = self.n;
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = FieldElem::zero();
                        for k in 0..n {
                            acc = acc.add(&self.m[i][k].mul(&other.m[k][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        MatK { n, m }
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> FieldElem {
        let n = self.n;
        let mut a = self.m.clone();
        let mut det = FieldElem::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return FieldElem::zero();
            };
            if p != c {
                a.swap(p, c);
                det = det.neg();
            }
            det = det.mul(&a[c][c]);
            let inv = a[c][c].recip().expect("nonzero pivot");
            for r in (c + 1)..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].mul(&inv);
                for j in c..n {
                    let t = a[c][j].mul(&f);
                    a[r][j] = a[r][j].sub(&t);
                }
            }
        }
        det
    }

    pub fn eq_exact(&self, other: &MatK) -> bool {
        self.n == other.n
            && (0..self.n).all(|i| (0..self.n).all(|j| self.m[i][j].eq_elem(&other.m[i][j])))
    }

    pub fn is_identity(&self) -> bool {
        self.eq_exact(&MatK::identity(self.n))
    }

    /// Scalar matrix λI (identity of PGL).
    pub fn is_scalar(&self) -> bool {
        let d = &self.m[0][0];
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                if i == j {
                    self.m[i][j].eq_elem(d)
                } else {
                    self.m[i][j].is_zero()
                }
            })
        })
    }

    /// Order ≤ 2 in PGL(n,K): the square is a scalar matrix.
    pub fn is_involution_pgl(&self) -> bool {
        self.mul(self).is_scalar()
    }

    /// Order ≤ 2 in GL(n,K): the square is the identity exactly.
    pub fn is_involution_gl(&self) -> bool {
        self.mul(self).is_identity()
    }

    pub fn scale(&self, s: &FieldElem) -> MatK {
        MatK {
            n: self.n,
            m: self
                .m
                .iter()
                .map(|r| r.iter().map(|e| e.mul(s)).collect())
                .collect(),
        }
    }

    /// The linear self-map of P^{n−1} with components Σ_j m_ij·z_j; entries
    /// must be rational.
    pub fn to_proj_map(&self) -> Result<ProjMap> {
        let nv = self.n;
        let comps = self
            .m
            .iter()
            .map(|row| {
                let mut p = MultiPoly::zero(nv);
                for (j, e) in row.iter().enumerate() {
                    match e {
                        FieldElem::Rat(r) => {
                            if !r.is_zero() {
                                p = p.add(&MultiPoly::var(nv, j).scale(r));
                            }
                        }
                        FieldElem::Fun(_) => {
                            return Err(Error::Invalid(
                                "projective lift needs rational entries".into(),
                            ))
                        }
                    }
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        ProjMap::simplify(comps)
    }
}

impl fmt::Display for MatK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "]")
    }
}

/// Elementary shear I + a·E_{ij}, i ≠ j.
#[derive(Clone, Debug)]
pub struct Transvection {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub a: FieldElem,
}

impl Transvection {
    pub fn to_mat(&self) -> MatK {
        let mut m = MatK::identity(self.n);
        m.m[self.i][self.j] = self.a.clone();
        m
    }
}

/// Writes M ∈ SL(n,K) as a product of transvections: the ordered product of
/// the returned shears equals M exactly. Gauss–Jordan using row additions
/// only; the pivot is steered to 1 with a row from below (creating one first
/// when the column is already clear), which the determinant makes possible.
pub fn sl_transvection_factor(mat: &MatK) -> Result<Vec<Transvection>> {
    if !mat.det().is_one() {
        return Err(Error::NotSpecialLinear);
    }
    let n = mat.n;
    let mut a = mat.m.clone();
    // Row operation row_r += f·row_s, recorded in application order.
    let mut ops: Vec<(usize, usize, FieldElem)> = Vec::new();
    let mut row_add = |a: &mut Vec<Vec<FieldElem>>, r: usize, s: usize, f: FieldElem| {
        if f.is_zero() {
            return;
        }
        for j in 0..n {
            let t = a[s][j].mul(&f);
            a[r][j] = a[r][j].add(&t);
        }
        ops.push((r, s, f));
    };
    for c in 0..n {
        if !a[c][c].is_one() {
            let helper = ((c + 1)..n).find(|&r| !a[r][c].is_zero());
            let helper = match helper {
                Some(r) => Some(r),
                None if c + 1 < n => {
                    // Column clear below a non-unit pivot: seed a helper row.
                    row_add(&mut a, c + 1, c, FieldElem::one());
                    Some(c + 1)
                }
                None => None, // last pivot; forced to 1 by det = 1
            };
            if let Some(r) = helper {
                let f = FieldElem::one().sub(&a[c][c]).div(&a[r][c])?;
                row_add(&mut a, c, r, f);
            }
        }
        debug_assert!(a[c][c].is_one(), "pivot normalization failed");
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].neg();
                row_add(&mut a, r, c, f);
            }
        }
    }
    // E_k···E_1·M = I ⇒ M = E_1⁻¹·E_2⁻¹···E_k⁻¹; the inverse of I+fE is I−fE.
    Ok(ops
        .into_iter()
        .map(|(r, s, f)| Transvection {
            n,
            i: r,
            j: s,
            a: f.neg(),
        })
        .collect())
}

/// The shear I + aE_{ij} as a product D·S of two involutions, with
/// D = diag(…, −1 at i, …) and S = D·(I + aE_{ij}).
pub fn transvection_involutions(t: &Transvection) -> (MatK, MatK) {
    let mut d = MatK::identity(t.n);
    d.m[t.i][t.i] = FieldElem::from_int(-1);
    let s = d.mul(&t.to_mat());
    (d, s)
}

/// Integer k-th root of a rational, if it exists: r with r^k = q.
fn rational_kth_root(q: &Rational, k: usize) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    let root_int = |v: &BigInt| -> Option<BigInt> {
        if v.is_negative() {
            if k.is_multiple_of(2) {
                return None;
            }
            return root_abs(&-v, k).map(|r| -r);
        }
        root_abs(v, k)
    };
    fn root_abs(v: &BigInt, k: usize) -> Option<BigInt> {
        let r = num::integer::Roots::nth_root(v, k as u32);
        if num::pow(r.clone(), k) == *v {
            Some(r)
        } else {
            None
        }
    }
    let n = root_int(q.numer())?;
    let d = root_int(q.denom())?;
    Some(Rational::new(n, d))
}

/// Writes M ∈ PGL(n,ℚ) as a product of involutions (product order). The
/// determinant must have a rational n-th root up to sign; M is scaled into
/// SL(n,ℚ), with a diagonal involution absorbing a leftover sign, and the
/// transvection factorization supplies the rest.
pub fn pgl_involution_factor(mat: &MatK) -> Result<Vec<MatK>> {
    if mat.is_scalar() {
        return Ok(Vec::new());
    }
    if mat.is_involution_pgl() {
        return Ok(vec![mat.clone()]);
    }
    let n = mat.n;
    let det = match mat.det() {
        FieldElem::Rat(r) => r,
        FieldElem::Fun(_) => return Err(Error::NoScalarRoot(n)),
    };
    let lambda = rational_kth_root(&det, n)
        .or_else(|| rational_kth_root(&(-det.clone()), n))
        .ok_or(Error::NoScalarRoot(n))?;
    let scaled = mat.scale(&FieldElem::Rat(lambda.recip()));
    let mut factors = Vec::new();
    let mut rest = scaled;
    if !rest.det().is_one() {
        // det = −1: peel off diag(−1,1,…,1).
        let mut j = MatK::identity(n);
        j.m[0][0] = FieldElem::from_int(-1);
        rest = j.mul(&rest);
        factors.push(j);
    }
    for t in sl_transvection_factor(&rest)? {
        let (d, s) = transvection_involutions(&t);
        factors.push(d);
        factors.push(s);
    }
    Ok(factors)
}

/// Converts a 2×2 MatK into a homography and back.
pub fn mat2_to_homography(m: &MatK) -> Result<Homography> {
    if m.n != 2 {
        return Err(Error::DimensionMismatch(m.n, 2));
    }
    Homography::new([
        [m.m[0][0].clone(), m.m[0][1].clone()],
        [m.m[1][0].clone(), m.m[1][1].clone()],
    ])
}

pub fn homography_to_mat2(h: &Homography) -> MatK {
    let e = h.entries();
    MatK {
        n: 2,
        m: vec![
            vec![e[0][0].clone(), e[0][1].clone()],
            vec![e[1][0].clone(), e[1][1].clone()],
        ],
    }
}

/// Writes g ∈ PGL(2,K), K = ℚ(z₁,…,z_k), with polynomial entries and
/// determinant P, as a product of at most 8 involutions (product order):
/// the two fixed involutions z₀ ↦ 1/z₀ and z₀ ↦ 1/(P·z₀), whose product is
/// diag(1,P)⁻¹, followed by at most 6 from the transvection factorization
/// of diag(1,P)·g scaled into SL(2,K). Determinant ±1 skips the scaling.
pub fn pgl2_polyring_factor(g: &Homography) -> Result<Vec<Homography>> {
    if g.is_identity_h() {
        return Ok(Vec::new());
    }
    if g.is_involution() {
        return Ok(vec![g.clone()]);
    }
    let m = homography_to_mat2(g);
    let det = m.det();
    let sl_factors = |m: &MatK| -> Result<Vec<Homography>> {
        let mut out = Vec::new();
        for t in sl_transvection_factor(m)? {
            let (d, s) = transvection_involutions(&t);
            out.push(mat2_to_homography(&d)?);
            out.push(mat2_to_homography(&s)?);
        }
        Ok(out)
    };
    let c_zero = m.m[1][0].is_zero();
    if det.is_one() {
        return sl_factors(&m);
    }
    let swap = MatK::new(vec![
        vec![FieldElem::zero(), FieldElem::one()],
        vec![FieldElem::one(), FieldElem::zero()],
    ])?;
    if det.eq_elem(&FieldElem::from_int(-1)) {
        // Triangular case: g = swap·(swap·g) puts a unit in the lower-left
        // corner so the elimination needs no seeded helper row.
        if c_zero {
            let mut out = vec![mat2_to_homography(&swap)?];
            out.extend(sl_factors(&swap.mul(&m))?);
            return Ok(out);
        }
        // g = J·(J·g) with J = diag(1,−1), det(J·g) = 1.
        let mut j = MatK::identity(2);
        j.m[1][1] = FieldElem::from_int(-1);
        let mut out = vec![mat2_to_homography(&j)?];
        out.extend(sl_factors(&j.mul(&m))?);
        return Ok(out);
    }
    let p = det;
    if c_zero {
        // Triangular g = diag(a, P/a)·(unit shear); diag(a, P/a) is the
        // product of the trace-zero pair z₀ ↦ 1/z₀ and z₀ ↦ P/(a²·z₀)
        // by the antidiagonal identity, leaving a single transvection.
        let a = m.m[0][0].clone();
        let iota_a = Homography::new([
            [FieldElem::zero(), FieldElem::one()],
            [FieldElem::one(), FieldElem::zero()],
        ])?;
        let iota_b = Homography::new([
            [FieldElem::zero(), p.div(&a)?],
            [a.clone(), FieldElem::zero()],
        ])?;
        let h = MatK::new(vec![
            vec![a.recip()?, FieldElem::zero()],
            vec![FieldElem::zero(), a.div(&p)?],
        ])?;
        let mut out = vec![iota_a, iota_b];
        out.extend(sl_factors(&h.mul(&m))?);
        debug_assert!(out.len() <= 4);
        return Ok(out);
    }
    // General determinant P: g = (1/z₀)∘(1/(P z₀)) · (diag(1,P)·g)/P.
    let iota_a = Homography::new([
        [FieldElem::zero(), FieldElem::one()],
        [FieldElem::one(), FieldElem::zero()],
    ])?;
    let iota_b = Homography::new([
        [FieldElem::zero(), FieldElem::one()],
        [p.clone(), FieldElem::zero()],
    ])?;
    let h = MatK::new(vec![
        vec![FieldElem::one(), FieldElem::zero()],
        vec![FieldElem::zero(), p.clone()],
    ])?;
    let m_sl = h.mul(&m).scale(&p.recip()?); // det = P²/P² = 1
    let mut out = vec![iota_a, iota_b];
    out.extend(sl_factors(&m_sl)?);
    debug_assert!(out.len() <= 8);
    Ok(out)
}

/// Unimodular integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatZ {
    n: usize,
    m: Vec<Vec<BigInt>>,
}

impl MatZ {
    pub fn new(m: Vec<Vec<BigInt>>) -> Result<MatZ> {
        let n = m.len();
        if n == 0 || m.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix must be square".into()));
        }
        let mat = MatZ { n, m };
        let d = mat.det();
        if !d.is_one() && d != BigInt::from(-1) {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        Ok(mat)
    }

    pub fn from_ints(rows: Vec<Vec<i64>>) -> Result<MatZ> {
        MatZ::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> MatZ {
        MatZ {
            n,
            m: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &Vec<Vec<BigInt>> {
        &self.m
    }

    pub fn mul(&self, other: &MatZ) -> MatZ {
        assert_eq!(self.n, other.n, "size mismatch");
        let n = self.n;
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.m[i][k] * &other.m[k][j]).sum())
                    .collect()
            })
            .collect();
        MatZ { n, m }
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        let mut a = self.m.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for c in 0..n - 1 {
            if a[c][c].is_zero() {
                let Some(p) = ((c + 1)..n).find(|&r| !a[r][c].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(p, c);
                sign = -sign;
            }
            for r in (c + 1)..n {
                for j in (c + 1)..n {
                    let t = &a[c][c] * &a[r][j] - &a[r][c] * &a[c][j];
                    a[r][j] = &t / &prev;
                }
                a[r][c] = BigInt::zero();
            }
            prev = a[c][c].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    pub fn is_identity(&self) -> bool {
        *self == MatZ::identity(self.n)
    }

    pub fn is_involution(&self) -> bool {
        self.mul(self).is_identity()
    }
}

impl fmt::Display for MatZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "]")
    }
}

enum ZOp {
    Swap(usize, usize),
    NegRow(usize),
    /// row_r += a·row_s
    Add(usize, usize, BigInt),
}

/// Writes a unimodular integer matrix as a product of integer involutions
/// (product order): row transpositions, diagonal sign matrices, and the
/// involution pairs of integer shears. Elimination picks the minimal
/// absolute pivot (lowest row on ties) and runs a Euclidean reduction down
/// each column; the achieved count is whatever the elimination produces.
pub fn glnz_involution_factor(mat: &MatZ) -> Result<Vec<MatZ>> {
    let n = mat.n;
    let mut a = mat.m.clone();
    let mut ops: Vec<ZOp> = Vec::new();
    for c in 0..n {
        // Euclidean reduction on rows ≥ c until one nonzero entry remains.
        loop {
            let mut nonzero: Vec<usize> =
                (c..n).filter(|&r| !a[r][c].is_zero()).collect();
            nonzero.sort_by_key(|&r| (a[r][c].abs(), r));
            match nonzero.len() {
                0 => return Err(Error::NotUnimodular("0".into())),
                1 => break,
                _ => {
                    let p = nonzero[0];
                    let pv = a[p][c].clone();
                    for &r in &nonzero[1..] {
                        let q = div_round(&a[r][c], &pv);
                        if !q.is_zero() {
                            for j in 0..n {
                                let t = &q * &a[p][j];
                                a[r][j] -= t;
                            }
                            ops.push(ZOp::Add(r, p, -q));
                        }
                    }
                }
            }
        }
        let p = (c..n).find(|&r| !a[r][c].is_zero()).unwrap();
        if p != c {
            a.swap(p, c);
            ops.push(ZOp::Swap(p, c));
        }
        if a[c][c] < BigInt::zero() {
            for j in 0..n {
                a[c][j] = -a[c][j].clone();
            }
            ops.push(ZOp::NegRow(c));
        }
        if !a[c][c].is_one() {
            // gcd of the column was not 1: impossible for unimodular input.
            return Err(Error::NotUnimodular(a[c][c].to_string()));
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let q = a[r][c].clone();
                for j in 0..n {
                    let t = &q * &a[c][j];
                    a[r][j] -= t;
                }
                ops.push(ZOp::Add(r, c, -q));
            }
        }
    }
    // The ops, left-applied in order, reduce M to I; hence M is the product
    // of their inverses in the same order. Swaps and sign flips are their
    // own inverses and already involutions; each shear expands into its
    // involution pair.
    let mut factors = Vec::new();
    for op in ops.into_iter() {
        match op {
            ZOp::Swap(i, j) => {
                let mut f = MatZ::identity(n);
                f.m.swap(i, j);
                factors.push(f);
            }
            ZOp::NegRow(i) => {
                let mut f = MatZ::identity(n);
                f.m[i][i] = BigInt::from(-1);
                factors.push(f);
            }
            ZOp::Add(r, s, q) => {
                // Inverse shear I − qE_{rs} = D·S.
                let mut d = MatZ::identity(n);
                d.m[r][r] = BigInt::from(-1);
                let mut t = MatZ::identity(n);
                t.m[r][s] = -q;
                let s_mat = d.mul(&t);
                factors.push(d);
                factors.push(s_mat);
            }
        }
    }
    Ok(factors)
}

/// Nearest-integer quotient (minimizes |a − q·b|).
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = num::Integer::div_mod_floor(a, b);
    // Floor remainder has the sign of b; stepping q once more always shrinks
    // |r| when it exceeds |b|/2.
    if two * r.abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

/// The monomial self-map of Pⁿ induced by M ∈ GL(n,ℤ) acting on the torus
/// chart x_i = z_{i−1}/z_n by x ↦ x^M: torus components are homogenized by
/// a z_n power and negative exponents cleared by a common monomial.
pub fn monomial_from_matrix(mat: &MatZ) -> Result<ProjMap> {
    let n = mat.n;
    let nv = n + 1;
    // Exponent rows: components 0..n−1 from the matrix rows, component n is
    // the constant 1; column nv−1 holds the z_n homogenizing exponent.
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(nv);
    for i in 0..n {
        let mut e = vec![0i64; nv];
        let mut sum = 0i64;
        for j in 0..n {
            let v = i64::try_from(&mat.m[i][j])
                .map_err(|_| Error::Invalid("exponent too large".into()))?;
            e[j] = v;
            sum += v;
        }
        e[n] = -sum;
        rows.push(e);
    }
    rows.push(vec![0i64; nv]);
    for j in 0..nv {
        let min = rows.iter().map(|r| r[j]).min().unwrap();
        if min < 0 {
            for r in &mut rows {
                r[j] -= min;
            }
        }
    }
    let comps = rows
        .into_iter()
        .map(|r| {
            let exps: Vec<u16> = r.into_iter().map(|v| v as u16).collect();
            MultiPoly::monomial(nv, &exps, Rational::one())
        })
        .collect();
    ProjMap::simplify(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projmap::standard_involution;

    fn matq(rows: Vec<Vec<i64>>) -> MatK {
        MatK::from_rationals(
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
        .unwrap()
    }

    fn product_k(factors: &[MatK], n: usize) -> MatK {
        factors
            .iter()
            .fold(MatK::identity(n), |acc, f| acc.mul(f))
    }

    fn product_z(factors: &[MatZ], n: usize) -> MatZ {
        factors
            .iter()
            .fold(MatZ::identity(n), |acc, f| acc.mul(f))
    }

    #[test]
    fn sl_factor_examples() {
        assert!(sl_transvection_factor(&matq(vec![vec![1, 0], vec![0, 1]]))
            .unwrap()
            .is_empty());
        let t = matq(vec![vec![1, 1], vec![0, 1]]);
        let f = sl_transvection_factor(&t).unwrap();
        assert_eq!(f.len(), 1);
        assert!(t.eq_exact(&f[0].to_mat()));
        let r = matq(vec![vec![0, 1], vec![-1, 0]]);
        let f = sl_transvection_factor(&r).unwrap();
        assert_eq!(f.len(), 3);
        let prod = f
            .iter()
            .fold(MatK::identity(2), |acc, t| acc.mul(&t.to_mat()));
        assert!(prod.eq_exact(&r));
        assert!(sl_transvection_factor(&matq(vec![vec![2, 0], vec![0, 1]])).is_err());
    }

    #[test]
    fn sl3_round_trip() {
        let m = matq(vec![vec![1, 2, 3], vec![0, 1, 4], vec![1, 3, 8]]);
        assert!(m.det().is_one());
        let f = sl_transvection_factor(&m).unwrap();
        let prod = f
            .iter()
            .fold(MatK::identity(3), |acc, t| acc.mul(&t.to_mat()));
        assert!(prod.eq_exact(&m));
    }

    #[test]
    fn transvection_involution_pair() {
        let t = Transvection {
            n: 2,
            i: 0,
            j: 1,
            a: FieldElem::one(),
        };
        let (d, s) = transvection_involutions(&t);
        assert!(d.is_involution_gl() && s.is_involution_gl());
        assert!(d.mul(&s).eq_exact(&t.to_mat()));
        let t3 = Transvection {
            n: 3,
            i: 1,
            j: 0,
            a: FieldElem::from_int(5),
        };
        let (d, s) = transvection_involutions(&t3);
        assert!(d.is_involution_gl() && s.is_involution_gl());
        assert!(d.mul(&s).eq_exact(&t3.to_mat()));
    }

    #[test]
    fn pgl_factor_examples() {
        assert!(pgl_involution_factor(&matq(vec![vec![1, 0], vec![0, 1]]))
            .unwrap()
            .is_empty());
        let refl = matq(vec![vec![-1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(pgl_involution_factor(&refl).unwrap().len(), 1);
        let m = matq(vec![vec![8, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let f = pgl_involution_factor(&m).unwrap();
        assert!(f.iter().all(MatK::is_involution_gl));
        // Product equals M up to scalar.
        let prod = product_k(&f, 3);
        let scaled = prod.scale(&FieldElem::from_int(2)); // λ = 2 was divided out
        assert!(scaled.eq_exact(&m));
        // det with no rational cube root.
        let bad = matq(vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(matches!(
            pgl_involution_factor(&bad),
            Err(Error::NoScalarRoot(3))
        ));
    }

    #[test]
    fn pgl2_polyring_paths() {
        // Scaling map z0 ↦ z1·z0: det z1, two fixed involutions suffice.
        let g = Homography::parse("(z1*z0)/(1)", 2).unwrap();
        let f = pgl2_polyring_factor(&g).unwrap();
        assert!(f.len() <= 8);
        assert!(f.iter().all(Homography::is_involution));
        let prod = f
            .iter()
            .fold(Homography::identity(), |acc, h| acc.compose(h));
        assert!(prod.eq_h(&g));
        // Shear z0 + z1: two involutions via the transvection pair.
        let g = Homography::parse("(z0+z1)/(1)", 2).unwrap();
        let f = pgl2_polyring_factor(&g).unwrap();
        assert_eq!(f.len(), 2);
        let prod = f
            .iter()
            .fold(Homography::identity(), |acc, h| acc.compose(h));
        assert!(prod.eq_h(&g));
        // z1/z0 has trace zero: single factor.
        let g = Homography::parse("(z1)/(z0)", 2).unwrap();
        assert_eq!(pgl2_polyring_factor(&g).unwrap().len(), 1);
    }

    #[test]
    fn glnz_factor_examples() {
        let swap = MatZ::from_ints(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let f = glnz_involution_factor(&swap).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0], swap);

        let t = MatZ::from_ints(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let f = glnz_involution_factor(&t).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(MatZ::is_involution));
        assert_eq!(product_z(&f, 2), t);

        let m = MatZ::from_ints(vec![vec![2, 1], vec![1, 1]]).unwrap();
        let f = glnz_involution_factor(&m).unwrap();
        assert!(f.iter().all(MatZ::is_involution));
        assert_eq!(product_z(&f, 2), m);

        assert!(MatZ::from_ints(vec![vec![2, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn monomial_map_examples() {
        let id = MatZ::identity(2);
        assert!(monomial_from_matrix(&id).unwrap().is_identity());
        let neg = MatZ::from_ints(vec![vec![-1, 0], vec![0, -1]]).unwrap();
        let s2 = monomial_from_matrix(&neg).unwrap();
        assert!(s2
            .proj_equal(&standard_involution(2).unwrap())
            .unwrap());
        let swap = MatZ::from_ints(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let sw = monomial_from_matrix(&swap).unwrap();
        assert!(sw.proj_equal(&ProjMap::parse("(z1:z0:z2)").unwrap()).unwrap());
    }

    #[test]
    fn monomial_functoriality() {
        let a = MatZ::from_ints(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let b = MatZ::from_ints(vec![vec![-1, 0], vec![1, 1]]).unwrap();
        let ab = a.mul(&b);
        let lhs = monomial_from_matrix(&ab).unwrap();
        let rhs = monomial_from_matrix(&a)
            .unwrap()
            .compose(&monomial_from_matrix(&b).unwrap())
            .unwrap();
        assert!(lhs.proj_equal(&rhs).unwrap());
    }
}
