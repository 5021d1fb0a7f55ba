//! Exact arithmetic for birational maps of projective space: sparse
//! multivariate polynomials over the rationals, rational functions,
//! projective maps, homographies, and factorization into involutions.

pub mod bounds;
pub mod certificate;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod gcd;
pub mod homography;
pub mod jonquieres;
pub mod linfact;
pub mod p1n;
pub mod poly;
pub mod polyaut;
pub mod projmap;
pub mod ratfunc;

pub use bounds::{paper_bound, BoundParams, BOUND_CLASSES};
pub use certificate::{verify_certificate, Factor, FactorTag, FactorizationCertificate, VerifyReport};
pub use corpus::{corpus_entries, corpus_entry, entry_to_string, parse_entry, verify_all, verify_entry, CorpusEntry, CorpusReport, EntryReport, FactorKind};
pub use error::{Error, Result};
pub use gcd::{poly_gcd, poly_gcd_many};
pub use linfact::{homography_to_mat2, mat2_to_homography};
pub use homography::{candidate_points, cross_ratio, harmonic_conjugate, through_three_points, two_involution_factorization, Homography, ProjPoint1};
pub use jonquieres::{factor_jn, factor_jonq_p3, factor_jonquieres2, lift_base_homography, lift_fiber_homography, lift_level_homography, lift_p2_to_p3, Jonquieres2};
pub use linfact::{glnz_involution_factor, monomial_from_matrix, pgl2_polyring_factor, pgl_involution_factor, sl_transvection_factor, transvection_involutions, MatK, MatZ, Transvection};
pub use p1n::{factor_p1n, MultiP1Certificate, MultiP1Map};
pub use poly::{Homogeneity, Integer, Monomial, MultiPoly, Rational, MAX_VARS};
pub use polyaut::{classify_autc2, factor_henon, is_affine, is_elementary, is_extended_affine, reduced_word_degree, AutClass, LetterClass, PolyAut, ReducedWord};
pub use projmap::{is_canonical_scalar, standard_involution, AffineMap, ProjMap};
pub use ratfunc::{ratfunc_normalize, FieldElem, RatFunc};
