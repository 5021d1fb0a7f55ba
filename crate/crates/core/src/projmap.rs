//! Rational self-maps of Pⁿ given by tuples of homogeneous polynomials of a
//! common degree without common factor.

use std::fmt;

use num::One;

use crate::error::{Error, Result};
use crate::expr::{parse_affine_tuple, parse_map_components};
use crate::gcd::poly_gcd_many;
use crate::poly::{Homogeneity, MultiPoly};
use crate::ratfunc::RatFunc;

/// Self-map of Pⁿ: n+1 homogeneous components of one degree d ≥ 1 in
/// z0…zn, coprime, in canonical scalar normalization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjMap {
    n: usize,
    components: Vec<MultiPoly>,
}

impl ProjMap {
    /// Divides out the common factor of the components and normalizes the
    /// scalar. Rejects zero tuples, inhomogeneous tuples, degree mismatches,
    /// and tuples that collapse to a constant (a map to a point).
    pub fn simplify(components: Vec<MultiPoly>) -> Result<ProjMap> {
        if components.len() < 2 {
            return Err(Error::Invalid("a projective map needs n+1 ≥ 2 components".into()));
        }
        let nv = components[0].nvars();
        if nv != components.len() {
            return Err(Error::VariableMismatch(nv, components.len()));
        }
        let mut degree = None;
        let mut all_zero = true;
        for c in &components {
            if c.nvars() != nv {
                return Err(Error::VariableMismatch(nv, c.nvars()));
            }
            match c.homogeneity() {
                Homogeneity::Zero => {}
                Homogeneity::Homogeneous(d) => {
                    all_zero = false;
                    match degree {
                        None => degree = Some(d),
                        Some(d0) if d0 == d => {}
                        Some(_) => return Err(Error::Inhomogeneous),
                    }
                }
                Homogeneity::Inhomogeneous => return Err(Error::Inhomogeneous),
            }
        }
        if all_zero {
            return Err(Error::ZeroTuple);
        }
        let g = poly_gcd_many(&components)?;
        let mut components: Vec<MultiPoly> = components
            .iter()
            .map(|c| c.div_exact(&g).expect("gcd divides"))
            .collect();
        let first = components
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero tuple");
        if first.total_degree() == Some(0) {
            return Err(Error::Invalid("map collapses to a point".into()));
        }
        let s = first.canonical_scalar().expect("nonzero component");
        let inv = s.recip();
        for c in &mut components {
            *c = c.scale(&inv);
        }
        Ok(ProjMap {
            n: nv - 1,
            components,
        })
    }

    pub fn parse(text: &str) -> Result<ProjMap> {
        ProjMap::simplify(parse_map_components(text)?)
    }

    /// Dimension of the projective space.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn identity(n: usize) -> ProjMap {
        ProjMap {
            n,
            components: (0..=n).map(|i| MultiPoly::var(n + 1, i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.proj_equal(&ProjMap::identity(self.n)).unwrap_or(false)
    }

    /// Common degree of the simplified components.
    pub fn degree(&self) -> u32 {
        self.components
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero tuple")
            .total_degree()
            .expect("nonzero component")
    }

    /// `self` after `inner`: substitute, then simplify. Errors if the
    /// substitution collapses every component to zero (the image of `inner`
    /// lies in the indeterminacy locus of `self`).
    pub fn compose(&self, inner: &ProjMap) -> Result<ProjMap> {
        if self.n != inner.n {
            return Err(Error::DimensionMismatch(self.n, inner.n));
        }
        let raw: Vec<MultiPoly> = self
            .components
            .iter()
            .map(|c| c.substitute(&inner.components))
            .collect::<Result<_>>()?;
        if raw.iter().all(|c| c.is_zero()) {
            return Err(Error::DegenerateComposition);
        }
        ProjMap::simplify(raw)
    }

    /// Equality in Bir(Pⁿ): all cross products φ_i ψ_j − φ_j ψ_i vanish.
    pub fn proj_equal(&self, other: &ProjMap) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        for i in 0..=self.n {
            for j in (i + 1)..=self.n {
                let cross = self.components[i]
                    .mul(&other.components[j])
                    .sub(&self.components[j].mul(&other.components[i]));
                if !cross.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Order ≤ 2 in Bir(Pⁿ): self-composition is the identity. The identity
    /// map itself reports true; callers that need order exactly 2 should
    /// also check `is_identity`. Degenerate self-composition reports false.
    pub fn is_involution(&self) -> bool {
        match self.compose(self) {
            Ok(sq) => sq.is_identity(),
            Err(_) => false,
        }
    }

    /// View in the affine chart `z_chart = 1`; the chart component must not
    /// be identically zero.
    pub fn to_affine_chart(&self, chart: usize) -> Result<AffineMap> {
        assert!(chart <= self.n, "chart index out of range");
        let den = self.components[chart].dehomogenize(chart);
        if den.is_zero() {
            return Err(Error::ZeroChartComponent);
        }
        let mut comps = Vec::with_capacity(self.n);
        for (i, c) in self.components.iter().enumerate() {
            if i == chart {
                continue;
            }
            comps.push(RatFunc::new(c.dehomogenize(chart), den.clone())?);
        }
        Ok(AffineMap {
            n: self.n,
            components: comps,
        })
    }

    /// ψ ∘ φ ∘ ψ⁻¹; verifies that the supplied inverse is two-sided.
    pub fn conjugate(psi: &ProjMap, psi_inv: &ProjMap, phi: &ProjMap) -> Result<ProjMap> {
        if !psi.compose(psi_inv)?.is_identity() || !psi_inv.compose(psi)?.is_identity() {
            return Err(Error::NotInverse);
        }
        psi.compose(&phi.compose(psi_inv)?)
    }
}

impl fmt::Display for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The involution σₙ: the i-th component is the product of all coordinates
/// except z_i.
pub fn standard_involution(n: usize) -> Result<ProjMap> {
    if n == 0 {
        return Err(Error::Invalid("σₙ requires n ≥ 1".into()));
    }
    let components = (0..=n)
        .map(|i| {
            let mut p = MultiPoly::one(n + 1);
            for j in 0..=n {
                if j != i {
                    p = p.mul(&MultiPoly::var(n + 1, j));
                }
            }
            p
        })
        .collect();
    ProjMap::simplify(components)
}

/// Self-map of affine n-space with rational-function components in
/// z0…z{n−1}; a chart view of a ProjMap.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap {
    n: usize,
    components: Vec<RatFunc>,
}

impl AffineMap {
    pub fn new(components: Vec<RatFunc>) -> Result<AffineMap> {
        let n = components.len();
        if n == 0 {
            return Err(Error::Invalid("empty affine map".into()));
        }
        for c in &components {
            if c.nvars() != n {
                return Err(Error::VariableMismatch(n, c.nvars()));
            }
        }
        Ok(AffineMap { n, components })
    }

    /// Polynomial components given as a parenthesized comma-free tuple
    /// `(expr:…:expr)` is not used here; affine input is `(expr,…,expr)`.
    pub fn parse(text: &str, n: usize) -> Result<AffineMap> {
        let polys = parse_affine_tuple(text, n)?;
        AffineMap::new(polys.into_iter().map(RatFunc::from_poly).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[RatFunc] {
        &self.components
    }

    /// Homogenize back into Pⁿ placing the chart variable at `chart`:
    /// clear denominators to the least common degree, then simplify.
    pub fn to_projective(&self, chart: usize) -> Result<ProjMap> {
        assert!(chart <= self.n, "chart index out of range");
        // Common denominator of all components.
        let mut den = MultiPoly::one(self.n);
        for c in &self.components {
            let g = crate::gcd::poly_gcd(&den, c.den())?;
            den = den.mul(&c.den().div_exact(&g).expect("gcd divides"));
        }
        let numerators: Vec<MultiPoly> = self
            .components
            .iter()
            .map(|c| {
                c.num()
                    .mul(&den.div_exact(c.den()).expect("common denominator"))
            })
            .collect();
        let deg = numerators
            .iter()
            .chain(std::iter::once(&den))
            .filter_map(|p| p.total_degree())
            .max()
            .expect("nonzero denominator");
        // Slot the cleared denominator into the chart position and pad every
        // term up to the common degree with the chart variable.
        let comps: Vec<MultiPoly> = (0..=self.n)
            .map(|pos| {
                let p = if pos == chart {
                    &den
                } else {
                    &numerators[if pos < chart { pos } else { pos - 1 }]
                };
                p.homogenize(chart, deg)
            })
            .collect();
        ProjMap::simplify(comps)
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Scale check helper used by tests: the first nonzero component has
/// coprime integer coefficients and positive leading coefficient.
pub fn is_canonical_scalar(map: &ProjMap) -> bool {
    map.components
        .iter()
        .find(|c| !c.is_zero())
        .and_then(|c| c.canonical_scalar())
        .map(|s| s.is_one())
        .unwrap_or(false)
}
