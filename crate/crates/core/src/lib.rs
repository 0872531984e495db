//! Exact computations in the level-one q-deformed Fock space of affine sl_n.
//!
//! Two constructions of bar-fixed bases are implemented side by side and
//! compared: the triangular bar-fixed bases B± built from wedge
//! straightening, and the basis B coming from the canonical basis of the
//! Hall algebra of the cyclic quiver. Everything is exact.

pub mod canonfock;
pub mod cli;
pub mod combinat;
pub mod exactring;
pub mod hallalg;
pub mod heckewedge;
pub mod klpoly;
pub mod verify;

pub use exactring::{LaurentPolynomial, LinComb};
