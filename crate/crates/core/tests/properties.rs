//! Randomized structural invariants: projective equality is an equivalence,
//! composition is associative, degrees are submultiplicative, and the
//! involution factorizers round-trip on seeded inputs.

mod common;

use common::*;
use cremona_core::{
    monomial_from_matrix, pgl2_polyring_factor, two_involution_factorization, Homography,
    MultiPoly, ProjMap, Rational,
};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn plane_monomial_map() -> impl Strategy<Value = ProjMap> {
    // Random unimodular exponent matrices give genuinely birational inputs.
    (any::<u64>(), 2usize..=3).prop_map(|(seed, n)| {
        let mut r = rng(seed);
        monomial_from_matrix(&glnz(&mut r, n, 5)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn proj_equal_is_reflexive_and_scale_invariant(f in plane_monomial_map(), c in small_rational()) {
        prop_assert!(f.proj_equal(&f).unwrap());
        if c != Rational::from_integer(0.into()) {
            let scaled: Vec<MultiPoly> = f.components().iter().map(|p| p.scale(&c)).collect();
            let g = ProjMap::simplify(scaled).unwrap();
            prop_assert!(f.proj_equal(&g).unwrap());
            prop_assert!(g.proj_equal(&f).unwrap());
        }
    }

    #[test]
    fn compose_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = 2 + (seed % 2) as usize;
        let f = monomial_from_matrix(&glnz(&mut r, n, 4)).unwrap();
        let g = monomial_from_matrix(&glnz(&mut r, n, 4)).unwrap();
        let h = monomial_from_matrix(&glnz(&mut r, n, 4)).unwrap();
        let lhs = f.compose(&g).unwrap().compose(&h).unwrap();
        let rhs = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert!(lhs.proj_equal(&rhs).unwrap());
    }

    #[test]
    fn degree_is_submultiplicative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = monomial_from_matrix(&glnz(&mut r, 3, 5)).unwrap();
        let g = monomial_from_matrix(&glnz(&mut r, 3, 5)).unwrap();
        let fg = f.compose(&g).unwrap();
        prop_assert!(fg.degree() <= f.degree() * g.degree());
    }

    #[test]
    fn two_involution_factorization_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let nu = pgl2q(&mut r, 12);
        let facs = two_involution_factorization(&nu).unwrap();
        let mut acc = Homography::identity();
        for f in &facs {
            prop_assert!(f.is_involution());
            acc = f.compose(&acc);
        }
        prop_assert!(acc.eq_h(&nu));
    }

    #[test]
    fn polyring_factorization_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = pgl2_polyring(&mut r, 1, 2);
        let facs = pgl2_polyring_factor(&g).unwrap();
        prop_assert!(facs.len() <= 8);
        let prod = facs
            .iter()
            .fold(Homography::identity(), |acc, h| acc.compose(h));
        prop_assert!(prod.eq_h(&g));
        prop_assert!(facs.iter().all(Homography::is_involution));
    }

    #[test]
    fn involution_square_is_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let nu = pgl2q(&mut r, 12);
        for f in two_involution_factorization(&nu).unwrap() {
            prop_assert!(f.compose(&f).is_identity_h());
        }
    }
}
