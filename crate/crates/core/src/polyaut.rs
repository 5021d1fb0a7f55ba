//! Polynomial automorphisms of affine n-space: classification of the plane
//! case (affine / elementary / Hénon), factorization of Hénon maps into
//! involutions of P², and reduced words in the amalgam generating the tame
//! subgroup.

use num::{One, Zero};
use crate::certificate::{Factor, FactorizationCertificate};
use crate::error::{Error, Result};
use crate::expr::parse_affine_tuple;
use crate::homography::Homography;
use crate::jonquieres::lift_fiber_homography;
use crate::linfact::{pgl2_polyring_factor, MatK};
use crate::poly::{Monomial, MultiPoly, Rational};
use crate::projmap::{AffineMap, ProjMap};
use crate::ratfunc::{FieldElem, RatFunc};

/// Polynomial self-map of affine n-space, components in ℚ[z0,…,z_{n−1}].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyAut {
    n: usize,
    components: Vec<MultiPoly>,
}

impl PolyAut {
    pub fn new(components: Vec<MultiPoly>) -> Result<PolyAut> {
        let n = components.len();
        if n == 0 {
            return Err(Error::Invalid("empty component list".into()));
        }
        for c in &components {
            if c.nvars() != n {
                return Err(Error::VariableMismatch(n, c.nvars()));
            }
        }
        Ok(PolyAut { n, components })
    }

    /// Parses "(expr, expr, …)" with variables z0…z_{n−1}.
    pub fn parse(text: &str, n: usize) -> Result<PolyAut> {
        PolyAut::new(parse_affine_tuple(text, n)?)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn identity(n: usize) -> PolyAut {
        PolyAut {
            n,
            components: (0..n).map(|i| MultiPoly::var(n, i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyAut::identity(self.n)
    }

    /// Maximum total degree of the components (0 only for constant maps).
    pub fn degree(&self) -> u32 {
        self.components
            .iter()
            .filter_map(|c| c.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &PolyAut) -> Result<PolyAut> {
        if self.n != inner.n {
            return Err(Error::DimensionMismatch(self.n, inner.n));
        }
        let comps = self
            .components
            .iter()
            .map(|c| c.substitute(&inner.components))
            .collect::<Result<Vec<_>>>()?;
        PolyAut::new(comps)
    }

    /// The same map as a birational self-map of Pⁿ (chart z_n = 1).
    pub fn to_projmap(&self) -> Result<ProjMap> {
        let comps = self
            .components
            .iter()
            .map(|c| RatFunc::from_poly(c.clone()))
            .collect();
        AffineMap::new(comps)?.to_projective(self.n)
    }
}

impl std::fmt::Display for PolyAut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", body.join(", "))
    }
}

/// Coefficient of `var` in a polynomial of degree ≤ 1 in that variable.
fn var_coeff(p: &MultiPoly, var: usize) -> MultiPoly {
    let v = Monomial::var(p.nvars(), var);
    let mut out = MultiPoly::zero(p.nvars());
    for (m, c) in p.terms() {
        if m.degree_of(var) == 1 {
            let rest = m.div(&v).expect("degree checked");
            out = out.add(&MultiPoly::one(p.nvars()).mul_monomial(&rest, c));
        }
    }
    out
}

/// Terms of `p` not involving `var`.
fn drop_var(p: &MultiPoly, var: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars());
    for (m, c) in p.terms() {
        if m.degree_of(var) == 0 {
            out = out.add(&MultiPoly::one(p.nvars()).mul_monomial(m, c));
        }
    }
    out
}

fn uses_only(p: &MultiPoly, allowed: &[usize]) -> bool {
    (0..p.nvars()).all(|v| allowed.contains(&v) || p.degree_in(v).unwrap_or(0) == 0)
}

/// Linear part of an affine map (all components degree ≤ 1), as a matrix.
fn linear_part(a: &PolyAut) -> Result<MatK> {
    let n = a.n;
    let rows = a
        .components
        .iter()
        .map(|c| {
            (0..n)
                .map(|j| {
                    let coef = var_coeff(c, j);
                    const_scalar(&coef)
                        .map(FieldElem::Rat)
                        .ok_or_else(|| Error::Invalid("nonlinear component".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    MatK::new(rows)
}

fn const_scalar(p: &MultiPoly) -> Option<Rational> {
    if p.is_zero() {
        Some(num::Zero::zero())
    } else if p.is_constant() {
        p.terms().next().map(|(_, c)| c.clone())
    } else {
        None
    }
}

/// Invertible affine map: every component of degree ≤ 1 and the linear part
/// nonsingular.
pub fn is_affine(a: &PolyAut) -> bool {
    if !a.components.iter().all(|c| c.total_degree().unwrap_or(0) <= 1) {
        return false;
    }
    linear_part(a).map(|m| !m.det().is_zero()).unwrap_or(false)
}

/// Triangular shape: first component α·z0 + p(z1) with constant α ≠ 0, the
/// remaining components affine in z1,…,z_{n−1} alone with invertible linear
/// block. For n = 2 this is the elementary group of the plane.
pub fn is_elementary(a: &PolyAut) -> bool {
    let n = a.n;
    if n < 2 {
        return false;
    }
    let c0 = &a.components[0];
    if c0.degree_in(0).unwrap_or(0) != 1 || !uses_only(c0, &[0, 1]) {
        return false;
    }
    let alpha = var_coeff(c0, 0);
    if const_scalar(&alpha).map(|r| r.is_zero()).unwrap_or(true) {
        return false;
    }
    let mut block = Vec::with_capacity(n - 1);
    for c in &a.components[1..] {
        if c.total_degree().unwrap_or(0) > 1 || c.degree_in(0).unwrap_or(0) != 0 {
            return false;
        }
        let mut row = Vec::with_capacity(n - 1);
        for j in 1..n {
            match const_scalar(&var_coeff(c, j)) {
                Some(r) => row.push(FieldElem::Rat(r)),
                None => return false,
            }
        }
        block.push(row);
    }
    MatK::new(block).map(|m| !m.det().is_zero()).unwrap_or(false)
}

/// Near-triangular affine shape (n ≥ 3): all components degree ≤ 1, the
/// first involving only z0 and z1, components beyond the second free of z0,
/// with invertible linear part. The second component may carry a z0 term.
pub fn is_extended_affine(a: &PolyAut) -> bool {
    let n = a.n;
    if n < 3 {
        return false;
    }
    if !a.components.iter().all(|c| c.total_degree().unwrap_or(0) <= 1) {
        return false;
    }
    if !uses_only(&a.components[0], &[0, 1]) {
        return false;
    }
    for c in &a.components[2..] {
        if c.degree_in(0).unwrap_or(0) != 0 {
            return false;
        }
    }
    linear_part(a).map(|m| !m.det().is_zero()).unwrap_or(false)
}

/// Structural class of a plane polynomial map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutClass {
    Affine,
    Elementary,
    Henon { p: MultiPoly, delta: Rational },
    Other,
}

/// Classifies a self-map of the affine plane. Hénon means
/// (z0, z1) ↦ (z1, p(z1) − δ·z0) with deg p ≥ 2 and δ ≠ 0.
pub fn classify_autc2(a: &PolyAut) -> Result<AutClass> {
    if a.n != 2 {
        return Err(Error::DimensionMismatch(a.n, 2));
    }
    let c0 = &a.components[0];
    let c1 = &a.components[1];
    // Hénon: first component is exactly z1.
    if *c0 == MultiPoly::var(2, 1) && c1.degree_in(0).unwrap_or(0) == 1 {
        if let Some(neg_delta) = const_scalar(&var_coeff(c1, 0)) {
            let p = drop_var(c1, 0);
            if !neg_delta.is_zero()
                && p.total_degree().unwrap_or(0) >= 2
                && uses_only(&p, &[1])
            {
                return Ok(AutClass::Henon {
                    p,
                    delta: -neg_delta,
                });
            }
        }
    }
    if is_affine(a) {
        return Ok(AutClass::Affine);
    }
    if is_elementary(a) {
        return Ok(AutClass::Elementary);
    }
    Ok(AutClass::Other)
}

/// Factors a Hénon map into involutions of P². For δ = 1 the map is a
/// product of exactly two: the reversal (p(z1) − z0, z1) followed by the
/// coordinate swap. Otherwise the fiberwise homography z0 ↦ −δ·z0 + p(z1)
/// is factored over ℚ(z1) and the swap appended, at most 11 in total.
pub fn factor_henon(a: &PolyAut) -> Result<FactorizationCertificate> {
    let AutClass::Henon { p, delta } = classify_autc2(a)? else {
        return Err(Error::Classification("not a Hénon map".into()));
    };
    let target = a.to_projmap()?;
    let swap = ProjMap::parse("(z1:z0:z2)")?;
    if delta.is_one() {
        let reversal = PolyAut::new(vec![
            p.sub(&MultiPoly::var(2, 0)),
            MultiPoly::var(2, 1),
        ])?
        .to_projmap()?;
        let factors = vec![Factor::involution(reversal), Factor::involution(swap)];
        return Ok(FactorizationCertificate::new(target, factors, Some(2)));
    }
    let p1 = p.remap_vars(&[0, 0], 1);
    let fiber = Homography::new([
        [
            FieldElem::Rat(-delta),
            FieldElem::Fun(RatFunc::from_poly(p1)),
        ],
        [FieldElem::from_int(0), FieldElem::from_int(1)],
    ])?;
    let mut factors = Vec::new();
    for h in pgl2_polyring_factor(&fiber)?.iter().rev() {
        factors.push(Factor::lifted(lift_fiber_homography(h)?));
    }
    factors.push(Factor::involution(swap));
    Ok(FactorizationCertificate::new(target, factors, Some(11)))
}

/// Which of the two generating subgroups a word letter sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LetterClass {
    Triangular,
    General,
}

/// Word in the two generating subgroups of the tame group: for n = 2 the
/// elementary and affine groups, for n ≥ 3 the triangular and
/// near-triangular affine families. A reduced word has no letter in the
/// overlap of the two subgroups and no two consecutive letters in the same
/// one.
#[derive(Clone, Debug)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<(PolyAut, LetterClass)>,
}

impl ReducedWord {
    /// Validates reducedness; letters are in application order.
    pub fn new(letters: Vec<PolyAut>) -> Result<ReducedWord> {
        if letters.is_empty() {
            return Err(Error::Invalid("empty word".into()));
        }
        let n = letters[0].dim();
        if n < 2 {
            return Err(Error::DimensionMismatch(n, 2));
        }
        let mut tagged = Vec::with_capacity(letters.len());
        for a in letters {
            if a.dim() != n {
                return Err(Error::DimensionMismatch(a.dim(), n));
            }
            let in_tri = is_elementary(&a);
            let in_gen = if n == 2 {
                is_affine(&a)
            } else {
                is_extended_affine(&a)
            };
            let class = match (in_tri, in_gen) {
                (true, true) => return Err(Error::NotReduced("letter lies in the subgroup overlap".into())),
                (true, false) => LetterClass::Triangular,
                (false, true) => LetterClass::General,
                (false, false) => return Err(Error::Classification("letter lies in neither subgroup".into())),
            };
            if let Some(&(_, prev)) = tagged.last() {
                if prev == class {
                    return Err(Error::NotReduced("letter lies in the subgroup overlap".into()));
                }
            }
            tagged.push((a, class));
        }
        Ok(ReducedWord { n, letters: tagged })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[(PolyAut, LetterClass)] {
        &self.letters
    }

    /// Composition of the letters, first letter applied first.
    pub fn compose_all(&self) -> Result<PolyAut> {
        let mut acc = PolyAut::identity(self.n);
        for (a, _) in &self.letters {
            acc = a.compose(&acc)?;
        }
        Ok(acc)
    }
}

/// Degree of the composition of a reduced word: the product of the letter
/// degrees. With `verify` the composition is carried out explicitly and the
/// degree compared against the product.
pub fn reduced_word_degree(w: &ReducedWord, verify: bool) -> Result<u64> {
    let product: u64 = w
        .letters
        .iter()
        .map(|(a, _)| a.degree().max(1) as u64)
        .product();
    if verify {
        let composed = w.compose_all()?;
        if composed.degree() as u64 != product {
            return Err(Error::Invalid(format!(
                "composed degree {} differs from product {}",
                composed.degree(),
                product
            )));
        }
    }
    Ok(product)
}
