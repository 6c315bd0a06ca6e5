//! Subsets, set families, clutters, up-families and blockers.

mod blocker;
mod dense;
mod family;
mod mask;
mod upset;

pub use blocker::{blocker, blocker_berge, blocker_dense, is_self_dual, self_dual_by_count, self_dual_criterion};
pub use dense::DenseTable;
pub use family::{complement_family, min_elements, Clutter, SetFamily};
pub use mask::{complement_set, GroundSet, SubsetMask, MAX_DENSE_T, MAX_T};
pub use upset::{principal_upset, star, up_closure, UpFamily};

pub(crate) use family::maximal_masks;
pub(crate) use mask::submasks;
