//! Partitions, multipartitions, types and small arithmetic helpers.

mod arith;
mod partition;
mod symgroup;
mod types;

pub use arith::{divisor_sigma, divisors, factorial, mobius};
pub use partition::{partitions_of, MultiPartition, Partition, PartitionStats};
pub use symgroup::sym_char;
pub use types::{c0, count_partition_multisets, k0, pair_cmp, types_of, TypePair, TypeStats, TypeT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatError {
    #[error("SizeMismatch: sizes {0} and {1} differ")]
    SizeMismatch(usize, usize),
    #[error("Parse: {0}")]
    Parse(String),
}
