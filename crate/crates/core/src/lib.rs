//! Numerical sets, partitions and simultaneous cores.
//!
//! A numerical set `T ⊆ ℕ` with `0 ∈ T` and finite complement determines a
//! partition through its profile walk; hook lengths of the partition are
//! then read off from pairs in `T × (ℤ ∖ T)`. Sets closed under `+a` are the
//! `a`-cores, coordinatised by Apéry tuples in `ℕ^{a-1}`, and simultaneous
//! cores become lattice points of rational polytopes.
//!
//! ```
//! use corelattice::polytope::core_region;
//!
//! let region = core_region(3, &[8])?;
//! let stats = region.stats(1);
//! assert_eq!((stats.count, stats.max_size), (15, 21));
//! assert_eq!(stats.mean().to_string(), "7");
//! # Ok::<(), corelattice::Error>(())
//! ```

pub mod antiatom;
pub mod apery;
pub mod bits;
pub mod error;
pub mod json;
pub mod numset;
pub mod partition;
pub mod polytope;
pub mod tree;
pub mod verify;

pub use apery::AperyTuple;
pub use error::{Error, Result};
pub use numset::{NumericalSemigroup, NumericalSet};
pub use partition::Partition;
