//! Chermak-Delgado lattices and Property A for finite permutation groups.

pub mod catalog;
pub mod constructions;
pub mod error;
pub mod field;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod normal;
pub mod numtheory;
pub mod perm;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};
pub use group::{Group, Subgroup};
pub use perm::Permutation;
pub use verdict::Verdict;
