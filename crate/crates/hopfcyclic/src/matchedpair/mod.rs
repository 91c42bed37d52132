//! Matched pairs of Hopf algebras and their bicrossed products: the
//! module-algebra / comodule-coalgebra compatibilities, crossed and
//! cocrossed constructions, matched pairs from exact group
//! factorizations, Lie-Hopf data with their canonical modular pairs,
//! and the bicrossed-product mixed bicomplex.

pub mod bicomplex;
pub mod groups;
pub mod liehopf;
pub mod matched;

use crate::exactlin::LinError;
use crate::hopf::HopfError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchedError {
    #[error("not a matched pair; failed: {0}")]
    NotMatched(String),
    #[error("not a Lie-Hopf datum; failed: {0}")]
    NotLieHopf(String),
    #[error("the coaction determinant is not group-like")]
    NotGroupLike,
    #[error("not an exact factorization: {0}")]
    NotExactFactorization(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Lin(#[from] LinError),
}

pub use bicomplex::{bicrossed_bicomplex, BicrossedBicomplex};
pub use groups::{exact_factorization, group_hopf, s3_matched_pair};
pub use liehopf::{
    canonical_delta, canonical_mpi, canonical_sigma, check_lie_hopf,
    extend_coaction_to_ug, gf_bracket, lie_hopf_to_matched_pair, line_over_kz2,
    trivial_lie_hopf, LieHopfDatum,
};
pub use matched::{
    build_bicrossed, build_cocrossed_coalgebra, build_crossed_algebra,
    check_comodule_coalgebra, check_matched_pair, check_module_algebra,
    trivial_matched_pair, MatchedPairDatum,
};
