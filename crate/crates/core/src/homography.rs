//! PGL(2,K) over a computable field K (the rationals or a rational function
//! field): cross-ratio, three-point interpolation, involution testing, and
//! the constructive factorization of any homography into at most two
//! involutions.

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::parse_homography;
use crate::poly::MultiPoly;
use crate::ratfunc::{FieldElem, RatFunc};

/// Point of P¹(K) as a nonzero pair (x : y); ∞ is (1 : 0).
#[derive(Clone, Debug)]
pub struct ProjPoint1 {
    pub x: FieldElem,
    pub y: FieldElem,
}

impl ProjPoint1 {
    pub fn new(x: FieldElem, y: FieldElem) -> Result<ProjPoint1> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroTuple);
        }
        Ok(ProjPoint1 { x, y })
    }

    pub fn finite(x: FieldElem) -> ProjPoint1 {
        ProjPoint1 {
            x,
            y: FieldElem::one(),
        }
    }

    pub fn from_int(n: i64) -> ProjPoint1 {
        ProjPoint1::finite(FieldElem::from_int(n))
    }

    pub fn infinity() -> ProjPoint1 {
        ProjPoint1 {
            x: FieldElem::one(),
            y: FieldElem::zero(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    /// Equality up to a nonzero scalar: x₁y₂ = x₂y₁.
    pub fn eq_point(&self, other: &ProjPoint1) -> bool {
        self.x.mul(&other.y).eq_elem(&self.y.mul(&other.x))
    }
}

impl fmt::Display for ProjPoint1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else {
            match self.x.div(&self.y) {
                Ok(v) => write!(f, "{v}"),
                Err(_) => write!(f, "({} : {})", self.x, self.y),
            }
        }
    }
}

/// 2×2 determinant |pq| = x_p y_q − x_q y_p of two points.
fn det2(p: &ProjPoint1, q: &ProjPoint1) -> FieldElem {
    p.x.mul(&q.y).sub(&q.x.mul(&p.y))
}

/// Element of PGL(2,K) as an invertible 2×2 matrix [[a,b],[c,d]], acting by
/// z ↦ (az+b)/(cz+d).
#[derive(Clone, Debug)]
pub struct Homography {
    m: [[FieldElem; 2]; 2],
}

impl Homography {
    pub fn new(m: [[FieldElem; 2]; 2]) -> Result<Homography> {
        let h = Homography { m };
        if h.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(h)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Homography> {
        Homography::new([
            [FieldElem::from_int(a), FieldElem::from_int(b)],
            [FieldElem::from_int(c), FieldElem::from_int(d)],
        ])
    }

    pub fn identity() -> Homography {
        Homography::from_ints(1, 0, 0, 1).unwrap()
    }

    /// Parses "(a*z0+b)/(c*z0+d)". With `nvars` = 1 the coefficients are
    /// rational; with `nvars` = k+1 they live in ℚ(z1…zk), stored internally
    /// over k shifted variables.
    pub fn parse(text: &str, nvars: usize) -> Result<Homography> {
        let [a, b, c, d] = parse_homography(text, nvars)?;
        let lift = |p: MultiPoly| -> FieldElem {
            if nvars == 1 {
                FieldElem::Rat(p.eval(&[num::Zero::zero()]))
            } else {
                let mapping: Vec<usize> = std::iter::once(0)
                    .chain(0..nvars - 1)
                    .collect();
                debug_assert_eq!(p.degree_in(0).unwrap_or(0), 0);
                FieldElem::from_poly(p.remap_vars(&mapping, nvars - 1))
            }
        };
        Homography::new([[lift(a), lift(b)], [lift(c), lift(d)]])
    }

    pub fn entries(&self) -> &[[FieldElem; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> FieldElem {
        self.m[0][0]
            .mul(&self.m[1][1])
            .sub(&self.m[0][1].mul(&self.m[1][0]))
    }

    pub fn trace(&self) -> FieldElem {
        self.m[0][0].add(&self.m[1][1])
    }

    /// Deterministic representative: the first nonzero entry in row-major
    /// order is scaled to 1.
    pub fn canonical(&self) -> Homography {
        let pivot = [&self.m[0][0], &self.m[0][1], &self.m[1][0], &self.m[1][1]]
            .into_iter()
            .find(|e| !e.is_zero())
            .expect("nonzero matrix")
            .clone();
        let s = pivot.recip().expect("nonzero pivot");
        let f = |e: &FieldElem| e.mul(&s);
        Homography {
            m: [
                [f(&self.m[0][0]), f(&self.m[0][1])],
                [f(&self.m[1][0]), f(&self.m[1][1])],
            ],
        }
    }

    /// Equality in PGL(2,K): equal up to a nonzero scalar.
    pub fn eq_h(&self, other: &Homography) -> bool {
        let a = self.canonical();
        let b = other.canonical();
        (0..2).all(|i| (0..2).all(|j| a.m[i][j].eq_elem(&b.m[i][j])))
    }

    pub fn is_identity_h(&self) -> bool {
        self.m[0][1].is_zero()
            && self.m[1][0].is_zero()
            && self.m[0][0].eq_elem(&self.m[1][1])
    }

    pub fn apply(&self, p: &ProjPoint1) -> ProjPoint1 {
        let x = self.m[0][0].mul(&p.x).add(&self.m[0][1].mul(&p.y));
        let y = self.m[1][0].mul(&p.x).add(&self.m[1][1].mul(&p.y));
        ProjPoint1::new(x, y).expect("invertible matrix sends nonzero to nonzero")
    }

    /// `self` after `inner` (matrix product self·inner).
    pub fn compose(&self, inner: &Homography) -> Homography {
        let mut m = [
            [FieldElem::zero(), FieldElem::zero()],
            [FieldElem::zero(), FieldElem::zero()],
        ];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.m[i][0]
                    .mul(&inner.m[0][j])
                    .add(&self.m[i][1].mul(&inner.m[1][j]));
            }
        }
        Homography { m }
    }

    pub fn inverse(&self) -> Homography {
        Homography {
            m: [
                [self.m[1][1].clone(), self.m[0][1].neg()],
                [self.m[1][0].neg(), self.m[0][0].clone()],
            ],
        }
    }

    /// Order ≤ 2 in PGL(2,K): the identity (trivially) or trace zero.
    /// Agrees with the matrix-square test M² = λI by Cayley–Hamilton.
    pub fn is_involution(&self) -> bool {
        self.is_identity_h() || self.trace().is_zero()
    }

    /// Scales the matrix so every function-field entry is polynomial.
    fn cleared(&self) -> Homography {
        let mut den: Option<MultiPoly> = None;
        for row in &self.m {
            for e in row {
                if let FieldElem::Fun(q) = e {
                    den = Some(match den {
                        None => q.den().clone(),
                        Some(d) => d.mul(
                            &q.den()
                                .div_exact(&crate::gcd::poly_gcd(&d, q.den()).expect("gcd"))
                                .expect("gcd divides"),
                        ),
                    });
                }
            }
        }
        match den {
            Some(d) if !d.is_one() => {
                let s = FieldElem::from_poly(d);
                let f = |e: &FieldElem| e.mul(&s);
                Homography {
                    m: [
                        [f(&self.m[0][0]), f(&self.m[0][1])],
                        [f(&self.m[1][0]), f(&self.m[1][1])],
                    ],
                }
            }
            _ => self.clone(),
        }
    }

    /// Fraction form "(a*z0+b)/(c*z0+d)"; function-field coefficients are
    /// printed in the variables z1, z2, … .
    pub fn to_fraction_string(&self) -> String {
        let side = |a: &FieldElem, b: &FieldElem| -> String {
            let lin = |e: &FieldElem, with_z0: bool| -> Option<String> {
                if e.is_zero() {
                    return None;
                }
                let body = shift_vars_display(e);
                Some(if with_z0 {
                    if e.is_one() {
                        "z0".to_string()
                    } else if body.contains(['+', '-', '/', ' ']) && !body.starts_with('(') {
                        format!("({body})*z0")
                    } else {
                        format!("{body}*z0")
                    }
                } else {
                    body
                })
            };
            match (lin(a, true), lin(b, false)) {
                (Some(s), Some(t)) => format!("{s}+{t}"),
                (Some(s), None) => s,
                (None, Some(t)) => t,
                (None, None) => "0".to_string(),
            }
        };
        let c = self.cleared();
        let num = side(&c.m[0][0], &c.m[0][1]);
        let den = side(&c.m[1][0], &c.m[1][1]);
        format!("({num})/({den})")
    }
}

/// Renders a field element with internal variables z0…z{k−1} shown as
/// z1…zk, matching the homography text grammar.
pub fn shift_vars_display(e: &FieldElem) -> String {
    match e {
        FieldElem::Rat(_) => e.to_string(),
        FieldElem::Fun(q) => {
            let nv = q.nvars();
            let mapping: Vec<usize> = (1..=nv).collect();
            let shifted = RatFunc::new(
                q.num().remap_vars(&mapping, nv + 1),
                q.den().remap_vars(&mapping, nv + 1),
            )
            .expect("nonzero denominator");
            shifted.to_string()
        }
    }
}

impl fmt::Display for Homography {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_fraction_string())
    }
}

/// The unique homography sending p1,p2,p3 to q1,q2,q3 (each triple pairwise
/// distinct). Built from the basis map e1,e2,e1+e2 ↦ p1,p2,p3 on both sides.
pub fn through_three_points(p: &[ProjPoint1; 3], q: &[ProjPoint1; 3]) -> Result<Homography> {
    let a = basis_to_triple(p, "source")?;
    let b = basis_to_triple(q, "target")?;
    Ok(b.compose(&a.inverse()))
}

fn basis_to_triple(p: &[ProjPoint1; 3], side: &'static str) -> Result<Homography> {
    // Solve λ·p1 + μ·p2 = p3; λ = |p3 p2|/|p1 p2|, μ = |p1 p3|/|p1 p2|.
    let d = det2(&p[0], &p[1]);
    if d.is_zero() {
        return Err(Error::CoincidentPoints(side));
    }
    let lambda = det2(&p[2], &p[1]).div(&d)?;
    let mu = det2(&p[0], &p[2]).div(&d)?;
    if lambda.is_zero() || mu.is_zero() {
        return Err(Error::CoincidentPoints(side));
    }
    Homography::new([
        [lambda.mul(&p[0].x), mu.mul(&p[1].x)],
        [lambda.mul(&p[0].y), mu.mul(&p[1].y)],
    ])
}

/// Cross-ratio as a point of P¹(K) (so the value ∞ is representable), with
/// the convention cross_ratio(∞,0,1,λ) = λ. Requires that no three of the
/// points coincide.
pub fn cross_ratio(
    p1: &ProjPoint1,
    p2: &ProjPoint1,
    p3: &ProjPoint1,
    p4: &ProjPoint1,
) -> Result<ProjPoint1> {
    let num = det2(p1, p3).mul(&det2(p2, p4));
    let den = det2(p1, p4).mul(&det2(p2, p3));
    ProjPoint1::new(num, den).map_err(|_| Error::CoincidentPoints("cross-ratio undefined"))
}

/// The unique h with cross_ratio(m, h, q, r) = −1, for pairwise distinct
/// m, q, r: h = |mq|·r + |mr|·q. Applying it twice in m returns m.
pub fn harmonic_conjugate(
    m: &ProjPoint1,
    q: &ProjPoint1,
    r: &ProjPoint1,
) -> Result<ProjPoint1> {
    if m.eq_point(q) || m.eq_point(r) || q.eq_point(r) {
        return Err(Error::CoincidentPoints("harmonic conjugate"));
    }
    let a = det2(m, q);
    let b = det2(m, r);
    ProjPoint1::new(
        a.mul(&r.x).add(&b.mul(&q.x)),
        a.mul(&r.y).add(&b.mul(&q.y)),
    )
}

/// Candidate points ∞, 0, 1, −1, 2, −2, 3, … used for all pointwise scans.
pub fn candidate_points() -> impl Iterator<Item = ProjPoint1> {
    std::iter::once(ProjPoint1::infinity()).chain((0i64..).flat_map(|k| {
        if k == 0 {
            vec![ProjPoint1::from_int(0)]
        } else {
            vec![ProjPoint1::from_int(k), ProjPoint1::from_int(-k)]
        }
    }))
}

/// Writes ν as a composition of at most two involutions, in apply order:
/// identity → [], involution → [ν], otherwise [ι₁, ι₂] with ν = ι₂∘ι₁.
///
/// ι₁ is the homography sending a, b, ν(a) to ν(b), ν(a), b; it swaps the
/// pair {b, ν(a)} and is therefore an involution, and ι₂ = ν∘ι₁ swaps
/// {ν(a), ν(b)}. The points a, b are the first candidates with a, b not
/// fixed, a ≠ b and b ≠ ν(a).
pub fn two_involution_factorization(nu: &Homography) -> Result<Vec<Homography>> {
    if nu.is_identity_h() {
        return Ok(Vec::new());
    }
    if nu.is_involution() {
        return Ok(vec![nu.clone()]);
    }
    let a = candidate_points()
        .take(8)
        .find(|p| !nu.apply(p).eq_point(p))
        .expect("at most two fixed points");
    let na = nu.apply(&a);
    let b = candidate_points()
        .take(8)
        .find(|p| !p.eq_point(&a) && !p.eq_point(&na) && !nu.apply(p).eq_point(p))
        .expect("at most four excluded points");
    let nb = nu.apply(&b);
    let i1 = through_three_points(
        &[a.clone(), b.clone(), na.clone()],
        &[nb.clone(), na.clone(), b.clone()],
    )?;
    let i2 = nu.compose(&i1);
    debug_assert!(i1.is_involution() && i2.is_involution());
    Ok(vec![i1, i2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(n: i64) -> ProjPoint1 {
        ProjPoint1::from_int(n)
    }

    #[test]
    fn apply_examples() {
        let t = Homography::from_ints(1, 1, 0, 1).unwrap();
        assert!(t.apply(&pt(0)).eq_point(&pt(1)));
        let swap = Homography::from_ints(0, 1, 1, 0).unwrap();
        assert!(swap.apply(&ProjPoint1::infinity()).eq_point(&pt(0)));
        let dbl = Homography::from_ints(2, 0, 0, 1).unwrap();
        assert!(dbl.apply(&pt(3)).eq_point(&pt(6)));
    }

    #[test]
    fn involution_tests() {
        assert!(Homography::from_ints(0, 1, 1, 0).unwrap().is_involution());
        assert!(!Homography::from_ints(1, 1, 0, 1).unwrap().is_involution());
        // Square of [[1,2],[1,−1]] is 3·I.
        let h = Homography::from_ints(1, 2, 1, -1).unwrap();
        assert!(h.is_involution());
        assert!(h.compose(&h).is_identity_h());
        assert!(Homography::identity().is_involution());
    }

    #[test]
    fn three_point_interpolation() {
        let inf = ProjPoint1::infinity();
        let id = through_three_points(
            &[inf.clone(), pt(0), pt(1)],
            &[inf.clone(), pt(0), pt(1)],
        )
        .unwrap();
        assert!(id.is_identity_h());
        // (0,1,∞) → (1,0,∞) is z ↦ 1−z.
        let h = through_three_points(
            &[pt(0), pt(1), inf.clone()],
            &[pt(1), pt(0), inf.clone()],
        )
        .unwrap();
        assert!(h.eq_h(&Homography::from_ints(-1, 1, 0, 1).unwrap()));
        // Coincident sources rejected.
        assert!(through_three_points(
            &[pt(0), pt(0), pt(1)],
            &[pt(0), pt(1), pt(2)]
        )
        .is_err());
        // The swap-pair construction from the factorization lemma, for
        // ν = z+1, a=0, b=2: 0,2,1 → 3,1,2 is an involution.
        let i1 = through_three_points(&[pt(0), pt(2), pt(1)], &[pt(3), pt(1), pt(2)]).unwrap();
        assert!(i1.is_involution());
    }

    #[test]
    fn cross_ratio_convention() {
        let inf = ProjPoint1::infinity();
        for lam in [-3i64, 2, 5, 7] {
            let cr = cross_ratio(&inf, &pt(0), &pt(1), &pt(lam)).unwrap();
            assert!(cr.eq_point(&pt(lam)));
        }
        // Harmonic quadruple (0, ∞, 1, −1).
        let cr = cross_ratio(&pt(0), &inf, &pt(1), &pt(-1)).unwrap();
        assert!(cr.eq_point(&pt(-1)));
        // Invariance under a homography.
        let h = Homography::from_ints(2, 3, 1, 4).unwrap();
        let ps = [pt(2), pt(-1), pt(5), pt(7)];
        let before = cross_ratio(&ps[0], &ps[1], &ps[2], &ps[3]).unwrap();
        let imgs: Vec<_> = ps.iter().map(|p| h.apply(p)).collect();
        let after = cross_ratio(&imgs[0], &imgs[1], &imgs[2], &imgs[3]).unwrap();
        assert!(before.eq_point(&after));
    }

    #[test]
    fn harmonic_conjugate_cases() {
        let h = harmonic_conjugate(&pt(0), &pt(1), &pt(-1)).unwrap();
        assert!(h.is_infinity());
        let m = pt(2);
        let h2 = harmonic_conjugate(&m, &pt(1), &pt(3)).unwrap();
        let cr = cross_ratio(&m, &h2, &pt(1), &pt(3)).unwrap();
        assert!(cr.eq_point(&pt(-1)));
        // Involutivity.
        let back = harmonic_conjugate(&h2, &pt(1), &pt(3)).unwrap();
        assert!(back.eq_point(&m));
        assert!(harmonic_conjugate(&pt(1), &pt(1), &pt(3)).is_err());
    }

    #[test]
    fn factorization_cases() {
        assert!(two_involution_factorization(&Homography::identity())
            .unwrap()
            .is_empty());
        let swap = Homography::from_ints(0, 1, 1, 0).unwrap();
        let f = two_involution_factorization(&swap).unwrap();
        assert_eq!(f.len(), 1);
        for nu in [
            Homography::from_ints(1, 1, 0, 1).unwrap(),
            Homography::from_ints(2, 0, 0, 1).unwrap(),
            Homography::from_ints(3, 2, 1, 1).unwrap(),
        ] {
            let f = two_involution_factorization(&nu).unwrap();
            assert_eq!(f.len(), 2);
            assert!(f.iter().all(Homography::is_involution));
            assert!(f[1].compose(&f[0]).eq_h(&nu));
        }
    }

    #[test]
    fn function_field_engine() {
        // ν = (z1·z0 + 1)/z0 over ℚ(z1): generic homography.
        let nu = Homography::parse("(z1*z0+1)/z0", 2).unwrap();
        assert!(!nu.is_involution());
        let f = two_involution_factorization(&nu).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(Homography::is_involution));
        assert!(f[1].compose(&f[0]).eq_h(&nu));
        // 1/(z1·z0) is an involution over ℚ(z1).
        let inv = Homography::parse("1/(z1*z0)", 2).unwrap();
        assert!(inv.is_involution());
        assert_eq!(
            two_involution_factorization(&inv).unwrap().len(),
            1
        );
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["(2*z0+1)/(z0+1)", "(z0)/(1)", "(0*z0+1)/(z0)"] {
            let h = Homography::parse(s, 1).unwrap();
            let again = Homography::parse(&h.to_fraction_string(), 1).unwrap();
            assert!(h.eq_h(&again));
        }
        let g = Homography::parse("(z1*z0+1)/(z0+z1)", 2).unwrap();
        let again = Homography::parse(&g.to_fraction_string(), 2).unwrap();
        assert!(g.eq_h(&again));
    }
}
