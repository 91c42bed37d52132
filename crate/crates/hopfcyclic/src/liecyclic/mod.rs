//! Lie-algebra corepresentations and their cyclic theory: Lie comodules,
//! Koszul and exponential coactions, anti-Yetter-Drinfeld and stability
//! predicates, the `W` and `C` mixed bicomplexes, and relative
//! Chevalley-Eilenberg cohomology.

pub mod ayd;
pub mod comodule;
pub mod complexes;
pub mod lie;
pub(crate) mod wedge;

use crate::bicomplex::BicomplexError;
use crate::exactlin::LinError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("iterated dual-frame actions are order-dependent; not a Lie comodule")]
    OrderDependentAction,
    #[error("the datum is not a Lie anti-Yetter-Drinfeld module")]
    NotLieAyd,
    #[error("coefficients fail the compatibility required by this complex")]
    NotCompatibleCoefficients,
    #[error("the given span is not closed under the bracket")]
    NotASubalgebra,
    #[error(transparent)]
    Bicomplex(#[from] BicomplexError),
    #[error(transparent)]
    Lin(#[from] LinError),
}

pub use ayd::{
    check_lie_ayd, check_lie_module, check_lie_stable, check_unimodular_stable,
    lie_ayd_to_ug_ayd, LieModule, LieModuleComodule,
};
pub use comodule::{
    check_lie_comodule, comodule_to_sym_module, exp_coaction, koszul_coaction,
    project_ug_comodule_to_g, sym_module_to_comodule, truncated_sym, ExpComodule,
    LieComodule, SymModule, TruncatedSymmetricAlgebra,
};
pub use complexes::{
    c_complex, ce_boundary, ce_coboundary, koszul_boundary, koszul_coboundary, lie_hc,
    lie_hp, relative_ce_cohomology, w_complex, LieComplexKind,
};
pub use lie::{abelian, aff1, check_jacobi, LieDatum};
