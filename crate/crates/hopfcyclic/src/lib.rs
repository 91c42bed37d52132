//! Exact-arithmetic computer algebra for Hopf-cyclic cohomology.
//!
//! The crate constructs and verifies, at desk scale over the rationals:
//! finite-dimensional (and degree-truncated filtered) Hopf algebras,
//! stable anti-Yetter-Drinfeld modules, the anti-Drinfeld double,
//! Hopf-cyclic cocyclic modules and their HC/HP bicomplexes, Lie-algebra
//! cyclic bicomplexes, and bicrossed-product Hopf algebras from matched
//! pairs.

pub mod exactlin;
pub mod scalar;

pub mod hopf;
pub mod sayd;

pub mod bicomplex;
pub mod cyclic;

pub mod liecyclic;
pub mod matchedpair;

pub mod cli;

pub use scalar::{rat, ratio, Rat};

/// Sparse matrix over the ground field.
pub type Mat = exactlin::SparseMatrix<Rat>;
