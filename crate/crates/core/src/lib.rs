//! Exact computation over finite set families on a ground set `E_t`.
//!
//! Subsets are single machine words (`t <= 62`); anything that materializes
//! the whole power set is limited to `t <= 28`. The crate covers clutters and
//! their blockers, increasing families, long f- and h-vectors, simplicial
//! complexes with Alexander duality, Kruskal–Katona–Schützenberger cascade
//! bounds, and exhaustive enumeration of self-dual clutters for small `t`.

pub mod binom;
pub mod complexes;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod identities;
pub mod kks;
pub mod sets;
pub mod vectors;

pub use error::{Error, Result};
pub use sets::{
    blocker, complement_family, complement_set, is_self_dual, min_elements, principal_upset, self_dual_criterion, star,
    up_closure, Clutter, GroundSet, SetFamily, SubsetMask, UpFamily,
};
