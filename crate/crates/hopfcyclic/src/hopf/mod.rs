//! Finite-dimensional (and degree-truncated filtered) Hopf algebras given
//! by structure constants: axiom verification, duals, characters,
//! group-likes, and modular pairs in involution.

pub mod examples;
pub(crate) mod pbw;
mod presentation;

pub use pbw::truncated_uea;
pub use presentation::{
    ad_sigma, check_hopf_axioms, check_mpi, dual_hopf, is_character, is_group_like,
    swap_square, twisted_antipode, AxiomReport, Character, GroupLike, HopfError,
    HopfPresentation, ModularPair, Truncation,
};
