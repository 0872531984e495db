//! Partitions, multisegments and the extended affine symmetric group.

pub mod affine;
pub mod multisegment;
pub mod partition;

pub use affine::{alcove_decompose, parabolic_lengths, AffinePermutation};
pub use multisegment::{closure_leq, enumerate_multisegments, DimVec, Multisegment, Quiver};
pub use partition::{dominance_leq, partitions_of, residue, residue_data, Partition, ResidueData};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CombinatError {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("weights differ: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("dimension vectors differ")]
    DimMismatch,
    #[error("bad segment start {0} length {1}")]
    BadSegment(i64, usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
}
