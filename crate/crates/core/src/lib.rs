#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod bits;
pub mod coxeter;
pub mod error;
pub mod group_ops;
pub mod mu;
pub mod perm;
pub mod subgroups;
pub use subgroups::{Subgroup, SubgroupLattice};
pub mod table;
pub use table::GroupTable;

pub use error::{Error, Result};
pub use perm::{PermGroup, Permutation};


