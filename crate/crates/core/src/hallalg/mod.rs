//! Hall algebra of the cyclic quiver, and of the linear quiver on ℤ.
//!
//! Functions are written in the basis `f_O = v^{dim O} 1_O`. Structure
//! constants come from counting over prime fields `F_Q`, fitting a
//! polynomial in `Q` and substituting `Q = v^2`.

pub mod action;
pub mod algebra;
pub mod cache;
pub mod count;
pub mod field;
pub mod gamma;
pub mod rep;

pub use action::{hall_fock_action, hall_fock_action_gamma, hall_fock_action_in, monomial_action};
pub use algebra::{
    flag_function, flag_monomial, hall_bar, hall_canonical, hall_product, jordan_type, monomial, orbit_in_monomials,
    Canonical, FlagType, HallVector, MonoVector,
};
pub use gamma::{gamma_map, gamma_monomials, h_form, k_form, r_form};
pub use rep::dim_orbit;

use crate::combinat::CombinatError;
use crate::exactring::FitError;
use crate::heckewedge::HeckeError;

#[derive(Debug, thiserror::Error)]
pub enum HallError {
    #[error("interpolation failed: {0}")]
    Fit(#[from] FitError),
    #[error("triangularity check failed: {0}")]
    Triangular(String),
    #[error("bar-fixedness check failed: {0}")]
    NotBarFixed(String),
    #[error("mixed quivers or dimension vectors: {0}")]
    Grading(String),
    #[error("out of desk scale: {0}")]
    ResourceCap(String),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}
