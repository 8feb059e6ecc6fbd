use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("e must be at least 2, got {0}")]
    InvalidModulus(u32),

    #[error("residues of different moduli mixed: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("partition {partition} is not {e}-restricted")]
    NotRestricted { partition: Partition, e: u32 },

    #[error("partition {partition} is not a {e}-core")]
    NotCore { partition: Partition, e: u32 },

    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidParts(Vec<usize>),

    #[error("multipartition has {components} components but {charges} charges")]
    ChargeCountMismatch { components: usize, charges: usize },

    #[error(
        "unsupported charge pattern {0:?}: expected zeros followed by copies of a single charge"
    )]
    UnsupportedChargePattern(Vec<u32>),

    #[error("operation requires e = {expected}, got e = {actual}")]
    WrongModulus { expected: u32, actual: u32 },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, CrystalError>;
