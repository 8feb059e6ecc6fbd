//! Crystal combinatorics of restricted partitions: abacus roofs and bases,
//! Kashiwara operators on charged multipartitions, stretched paths in the
//! divisible limit, and Kleshchev criteria for multipartitions.

pub mod abacus;
pub mod crystal;
pub mod error;
pub mod kleshchev;
pub mod partition;
pub mod path_model;
pub mod verify;

pub use error::{CrystalError, Result};
pub use partition::{Modulus, Multipartition, Node, NodeKind, Partition, Residue};
