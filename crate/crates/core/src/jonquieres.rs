//! Triangular (de Jonquières) birational maps: the P² group
//! PGL(2,ℚ(z₁)) ⋊ PGL(2,ℚ), its factorization into at most ten involutions,
//! the n-dimensional triangular tower J_n, and the P³ construction layering
//! a fiber homography over a plane map.

use crate::certificate::{Factor, FactorTag, FactorizationCertificate};
use crate::error::{Error, Result};
use crate::homography::{two_involution_factorization, Homography};
use crate::linfact::pgl2_polyring_factor;
use crate::poly::MultiPoly;
use crate::projmap::{AffineMap, ProjMap};
use crate::ratfunc::{FieldElem, RatFunc};

/// Converts a homography coefficient living over k inner variables
/// (z_{i+1}…z_{n−1} of the ambient affine n-space) into a rational function
/// over all n affine variables.
fn widen(e: &FieldElem, i: usize, n: usize) -> Result<RatFunc> {
    match e {
        FieldElem::Rat(r) => Ok(RatFunc::from_poly(MultiPoly::constant(n, r.clone()))),
        FieldElem::Fun(q) => {
            let k = q.nvars();
            if i + 1 + k != n {
                return Err(Error::VariableMismatch(n - i - 1, k));
            }
            let mapping: Vec<usize> = (i + 1..n).collect();
            RatFunc::new(
                q.num().remap_vars(&mapping, n),
                q.den().remap_vars(&mapping, n),
            )
        }
    }
}

/// Lifts a homography acting on coordinate i (coefficients in the later
/// coordinates z_{i+1}…z_{n−1}) to the self-map of Pⁿ fixing all other
/// coordinates, homogenized in the chart z_n = 1.
pub fn lift_level_homography(h: &Homography, i: usize, n: usize) -> Result<ProjMap> {
    assert!(i < n, "coordinate index out of range");
    let e = h.entries();
    let a = widen(&e[0][0], i, n)?;
    let b = widen(&e[0][1], i, n)?;
    let c = widen(&e[1][0], i, n)?;
    let d = widen(&e[1][1], i, n)?;
    let x = RatFunc::from_poly(MultiPoly::var(n, i));
    let num = a.mul(&x).add(&b);
    let den = c.mul(&x).add(&d);
    let comps = (0..n)
        .map(|j| {
            if j == i {
                num.div(&den)
            } else {
                Ok(RatFunc::from_poly(MultiPoly::var(n, j)))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    AffineMap::new(comps)?.to_projective(n)
}

/// Fiberwise lift to P²: (ι(z₀; z₁), z₁).
pub fn lift_fiber_homography(h: &Homography) -> Result<ProjMap> {
    lift_level_homography(h, 0, 2)
}

/// Base lift to P²: (z₀, ν(z₁)).
pub fn lift_base_homography(nu: &Homography) -> Result<ProjMap> {
    lift_level_homography(nu, 1, 2)
}

/// Element of the plane de Jonquières group, written as a fiber action
/// φ₀ ∈ PGL(2,ℚ(z₁)) together with a base action ν ∈ PGL(2,ℚ): the map
/// (z₀, z₁) ↦ (φ₀(z₀; z₁), ν(z₁)).
#[derive(Clone, Debug)]
pub struct Jonquieres2 {
    fiber: Homography,
    base: Homography,
}

impl Jonquieres2 {
    pub fn new(fiber: Homography, base: Homography) -> Result<Jonquieres2> {
        for row in fiber.entries() {
            for e in row {
                if e.field_vars().map(|k| k != 1).unwrap_or(false) {
                    return Err(Error::VariableMismatch(
                        1,
                        e.field_vars().unwrap_or(0),
                    ));
                }
            }
        }
        for row in base.entries() {
            for e in row {
                if e.field_vars().is_some() {
                    return Err(Error::Invalid("base coefficients must be rational".into()));
                }
            }
        }
        Ok(Jonquieres2 { fiber, base })
    }

    pub fn identity() -> Jonquieres2 {
        Jonquieres2 {
            fiber: Homography::identity(),
            base: Homography::identity(),
        }
    }

    pub fn fiber(&self) -> &Homography {
        &self.fiber
    }

    pub fn base(&self) -> &Homography {
        &self.base
    }

    /// The map as a birational self-map of P².
    pub fn to_projmap(&self) -> Result<ProjMap> {
        let vertical = lift_base_homography(&self.base)?;
        let fiberwise = lift_fiber_homography(&self.fiber)?;
        vertical.compose(&fiberwise)
    }

    /// Splits into (vertical, fiberwise): the vertical part moves only the
    /// base coordinate, the fiberwise part only the fiber coordinate, and
    /// vertical ∘ fiberwise recomposes to self.
    pub fn split(&self) -> (Jonquieres2, Jonquieres2) {
        (
            Jonquieres2 {
                fiber: Homography::identity(),
                base: self.base.clone(),
            },
            Jonquieres2 {
                fiber: self.fiber.clone(),
                base: Homography::identity(),
            },
        )
    }
}

/// Factors a plane de Jonquières map into at most ten involutions: at most
/// eight for the fiber action (determinant-scaling path over ℚ(z₁)) and at
/// most two for the base action, all lifted to P². Factors are in
/// application order.
pub fn factor_jonquieres2(j: &Jonquieres2) -> Result<FactorizationCertificate> {
    let target = j.to_projmap()?;
    let mut factors = Vec::new();
    // pgl2_polyring_factor returns product order; certificates apply first
    // factor first, so reverse.
    for h in pgl2_polyring_factor(&j.fiber)?.iter().rev() {
        factors.push(Factor::lifted(lift_fiber_homography(h)?));
    }
    for h in &two_involution_factorization(&j.base)? {
        factors.push(Factor::lifted(lift_base_homography(h)?));
    }
    Ok(FactorizationCertificate::new(target, factors, Some(10)))
}

/// Factors an element of the triangular tower J_n given level by level:
/// `levels[i]` is the homography acting on coordinate i with coefficients
/// in ℚ(z_{i+1},…,z_{n−1}). The n = 2 case routes through the plane
/// factorization and its sharper bound.
pub fn factor_jn(levels: &[Homography]) -> Result<FactorizationCertificate> {
    let n = levels.len();
    if n < 2 {
        return Err(Error::Invalid("tower needs at least two levels".into()));
    }
    for (i, h) in levels.iter().enumerate() {
        let expect = n - 1 - i;
        for row in h.entries() {
            for e in row {
                if e.field_vars().map(|k| k != expect).unwrap_or(false)
                    || (expect == 0 && e.field_vars().is_some())
                {
                    return Err(Error::Invalid(format!(
                        "level {i} coefficients must live in the last {expect} coordinates"
                    )));
                }
            }
        }
    }
    if n == 2 {
        let j = Jonquieres2::new(levels[0].clone(), levels[1].clone())?;
        return factor_jonquieres2(&j);
    }
    // Apply order: level 0 first (its coefficients read the still-untouched
    // later coordinates), then level 1, and so on.
    let mut target = ProjMap::identity(n);
    let mut factors = Vec::new();
    for (i, h) in levels.iter().enumerate() {
        target = lift_level_homography(h, i, n)?.compose(&target)?;
        for f in pgl2_polyring_factor(h)?.iter().rev() {
            factors.push(Factor::lifted(lift_level_homography(f, i, n)?));
        }
    }
    let bound = 4 * (2 * n as u64 - 1);
    Ok(FactorizationCertificate::new(target, factors, Some(bound)))
}

/// Lifts a plane map ψ = (ψ₁:ψ₂:ψ₃) to P³ acting on the last three
/// coordinates: simplify(z₀ψ₃ : z₃ψ₁ : z₃ψ₂ : z₃ψ₃), where the plane
/// variables are read as (z₁,z₂,z₃). In the chart z₃ = 1 this is
/// (z₀, ψ(z₁,z₂)); involutions lift to involutions.
pub fn lift_p2_to_p3(psi: &ProjMap) -> Result<ProjMap> {
    if psi.dim() != 2 {
        return Err(Error::DimensionMismatch(psi.dim(), 2));
    }
    let shift: Vec<MultiPoly> = psi
        .components()
        .iter()
        .map(|c| c.remap_vars(&[1, 2, 3], 4))
        .collect();
    let z0 = MultiPoly::var(4, 0);
    let z3 = MultiPoly::var(4, 3);
    ProjMap::simplify(vec![
        z0.mul(&shift[2]),
        z3.mul(&shift[0]),
        z3.mul(&shift[1]),
        z3.mul(&shift[2]),
    ])
}

/// Factors the P³ map (z₀,z₁,z₂) ↦ (φ₀(z₀; z₁,z₂), ψ(z₁,z₂)) given the
/// fiber homography φ₀ (coefficients in ℚ[z₁,z₂]) and a pre-factored plane
/// map ψ: `psi_factors` must recompose to `psi_target` (application order)
/// or the call errors. The lifted ψ factors follow the ≤8 fiber involutions
/// in application order; the reference bound is 10·deg(φ)+6.
pub fn factor_jonq_p3(
    phi0: &Homography,
    psi_target: &ProjMap,
    psi_factors: &[Factor],
) -> Result<FactorizationCertificate> {
    if psi_target.dim() != 2 {
        return Err(Error::DimensionMismatch(psi_target.dim(), 2));
    }
    let mut composed = ProjMap::identity(2);
    for f in psi_factors {
        composed = f.map.compose(&composed)?;
    }
    if !composed.proj_equal(psi_target)? {
        return Err(Error::Invalid(
            "supplied plane factors do not recompose to the plane map".into(),
        ));
    }
    let fiber_lift = lift_level_homography(phi0, 0, 3)?;
    let psi_lift = lift_p2_to_p3(psi_target)?;
    let target = psi_lift.compose(&fiber_lift)?;
    let mut factors = Vec::new();
    for f in pgl2_polyring_factor(phi0)?.iter().rev() {
        factors.push(Factor::lifted(lift_level_homography(f, 0, 3)?));
    }
    for f in psi_factors {
        let lifted = lift_p2_to_p3(&f.map)?;
        let tag = match f.tag {
            FactorTag::Linear => FactorTag::Linear,
            _ => FactorTag::Lifted,
        };
        factors.push(Factor { map: lifted, tag });
    }
    let bound = 10 * target.degree() as u64 + 6;
    Ok(FactorizationCertificate::new(target, factors, Some(bound)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projmap::standard_involution;

    #[test]
    fn split_and_recompose() {
        let j = Jonquieres2::new(
            Homography::parse("(z1*z0+1)/(z0)", 2).unwrap(),
            Homography::parse("(z0+1)/(1)", 1).unwrap(),
        )
        .unwrap();
        let (v, f) = j.split();
        assert!(v.fiber.is_identity_h() && f.base.is_identity_h());
        let recomposed = v
            .to_projmap()
            .unwrap()
            .compose(&f.to_projmap().unwrap())
            .unwrap();
        assert!(recomposed.proj_equal(&j.to_projmap().unwrap()).unwrap());
        let (vi, fi) = Jonquieres2::identity().split();
        assert!(vi.to_projmap().unwrap().is_identity());
        assert!(fi.to_projmap().unwrap().is_identity());
    }

    #[test]
    fn factor_identity_and_shear() {
        let cert = factor_jonquieres2(&Jonquieres2::identity()).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.achieved_involution_count, 0);
        // Fiber z0 + z1², base identity: the shear path gives 2 involutions.
        let j = Jonquieres2::new(
            Homography::parse("(z0+z1^2)/(1)", 2).unwrap(),
            Homography::identity(),
        )
        .unwrap();
        let cert = factor_jonquieres2(&j).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.achieved_involution_count, 2);
    }

    #[test]
    fn factor_full_pipeline() {
        let j = Jonquieres2::new(
            Homography::parse("(z1*z0+1)/(z0)", 2).unwrap(),
            Homography::parse("(z0+1)/(1)", 1).unwrap(),
        )
        .unwrap();
        let cert = factor_jonquieres2(&j).unwrap();
        assert!(cert.verified);
        assert!(cert.achieved_involution_count <= 10);
    }

    #[test]
    fn jn_tower() {
        let levels = vec![
            Homography::parse("(z0+z1*z2)/(1)", 3).unwrap(),
            Homography::parse("(z0+z1)/(1)", 2).unwrap(),
            Homography::parse("(z0+1)/(1)", 1).unwrap(),
        ];
        let cert = factor_jn(&levels).unwrap();
        assert!(cert.verified);
        assert!(cert.achieved_involution_count <= 20);
        // n = 2 delegates to the plane pipeline (bound 10).
        let levels2 = vec![
            Homography::parse("(z0+z1^2)/(1)", 2).unwrap(),
            Homography::identity(),
        ];
        let cert2 = factor_jn(&levels2).unwrap();
        assert!(cert2.verified);
        assert_eq!(cert2.paper_bound, Some(10));
    }

    #[test]
    fn p2_to_p3_lift() {
        let id = ProjMap::identity(2);
        assert!(lift_p2_to_p3(&id).unwrap().is_identity());
        let s2 = standard_involution(2).unwrap();
        let lifted = lift_p2_to_p3(&s2).unwrap();
        assert!(lifted
            .proj_equal(&ProjMap::parse("(z0*z1*z2:z2*z3^2:z1*z3^2:z1*z2*z3)").unwrap())
            .unwrap());
        assert!(lifted.is_involution());
        // Functorial on a composable pair.
        let swap = ProjMap::parse("(z1:z0:z2)").unwrap();
        let lhs = lift_p2_to_p3(&s2.compose(&swap).unwrap()).unwrap();
        let rhs = lift_p2_to_p3(&s2)
            .unwrap()
            .compose(&lift_p2_to_p3(&swap).unwrap())
            .unwrap();
        assert!(lhs.proj_equal(&rhs).unwrap());
    }

    #[test]
    fn jonq_p3_cases() {
        // φ0 a shear by z1z2, ψ = identity.
        let phi0 = Homography::parse("(z0+z1*z2)/(1)", 3).unwrap();
        let cert = factor_jonq_p3(&phi0, &ProjMap::identity(2), &[]).unwrap();
        assert!(cert.verified);
        assert!(cert.achieved_involution_count <= 2);

        // φ0 identity, ψ = σ₂ as a single involution factor.
        let s2 = standard_involution(2).unwrap();
        let cert = factor_jonq_p3(
            &Homography::identity(),
            &s2,
            &[Factor::involution(s2.clone())],
        )
        .unwrap();
        assert!(cert.verified);
        assert_eq!(cert.achieved_involution_count, 1);

        // Fiber scaling with a plane swap.
        let phi0 = Homography::parse("(z1*z0)/(1)", 3).unwrap();
        let swap = ProjMap::parse("(z1:z0:z2)").unwrap();
        let cert =
            factor_jonq_p3(&phi0, &swap, &[Factor::involution(swap.clone())]).unwrap();
        assert!(cert.verified);

        // Bad plane factorization is rejected.
        let bad = factor_jonq_p3(
            &Homography::identity(),
            &s2,
            &[Factor::involution(ProjMap::identity(2))],
        );
        assert!(bad.is_err());
    }
}
