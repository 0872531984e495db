//! Tensor space with its affine Hecke action, wedge straightening, the
//! involution ψ, and the generators `f_α` on wedges.
//!
//! `Ω^l` is generated by the images of `T_k + 1` for the finite generators
//! `k = 1..l-1` only; with this reading the strictly decreasing words form
//! a basis of the quotient, which the oracle re-checks by rank.

pub mod fock;
pub mod oracle;
pub mod psi;
pub mod straighten;
pub mod tensor;

pub use fock::{f_alpha, hayashi_action, FockVector, HayashiKind, Space};
pub use psi::{psi, psi_finite, psi_word};
pub use straighten::{straighten, straighten_vector};
pub use tensor::{tensor_apply_t, tensor_apply_x, TensorVector, Word};

use crate::combinat::Partition;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("generator T_{k} out of range for l = {l}")]
    GeneratorOutOfRange { k: usize, l: usize },
    #[error("position {j} out of range for l = {l}")]
    PositionOutOfRange { j: usize, l: usize },
    #[error("straightening of {word:?} exceeded the rewrite cap {cap}")]
    StraightenCap { word: Vec<i64>, cap: usize },
    #[error("pair ({0},{1}) reappears in its own image")]
    SelfTerm(i64, i64),
    #[error("word {0:?} is not strictly decreasing")]
    NotNormal(Vec<i64>),
    #[error("{0} has more than {1} parts")]
    TooManyParts(Partition, usize),
    #[error("word {0:?} does not lie in the partition wedge")]
    LeavesWedge(Vec<i64>),
    #[error("window instability: {0}")]
    Unstable(String),
    #[error("oracle window does not contain {0:?}")]
    OracleWindow(Vec<i64>),
    #[error("oracle rank check failed")]
    OracleRank,
    #[error("oracle produced a coefficient outside Z[v, v^-1]")]
    OracleNotLaurent,
}
