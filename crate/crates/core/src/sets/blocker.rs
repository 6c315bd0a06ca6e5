use super::dense::DenseTable;
use super::family::{minimal_masks, Clutter, SetFamily};
use super::mask::{BitIter, GroundSet};
use super::upset::up_closure;
use crate::error::{Error, Result};

/// Largest `t` for which [`blocker`] uses the dense sweep.
const DENSE_SWEEP_MAX_T: u32 = 12;

/// `B(a)`, the clutter of inclusion-minimal blocking sets.
///
/// Trivial inputs follow the usual conventions: `B(∅) = {0̂}` and
/// `B({0̂}) = ∅`.
pub fn blocker(a: &Clutter) -> Clutter {
    if a.t() <= DENSE_SWEEP_MAX_T {
        blocker_dense(a).expect("ground set within dense limit")
    } else {
        blocker_berge(a)
    }
}

/// Blocker by sweeping `2^[t]`: a set fails to block iff it lies inside the
/// complement of some member, so the blocking sets are the negation of the
/// down-closure of the complements.
pub fn blocker_dense(a: &Clutter) -> Result<Clutter> {
    let ground = a.ground();
    let full = ground.full_mask();
    let complements = DenseTable::from_masks(ground, a.masks().iter().map(|&m| full & !m))?;
    let blocking = complements.down_closed().negated();
    Ok(Clutter::from_antichain_unchecked(blocking.minimal_members()))
}

/// Blocker by Berge multiplication: partial transversals are extended one
/// member at a time (smallest members first) and minimalized after each step.
pub fn blocker_berge(a: &Clutter) -> Clutter {
    let ground: GroundSet = a.ground();
    let mut edges: Vec<u64> = a.masks().to_vec();
    edges.sort_unstable_by_key(|m| (m.count_ones(), *m));

    let mut partial: Vec<u64> = vec![0];
    for &edge in &edges {
        let mut next = Vec::with_capacity(partial.len() * 2);
        for &tr in &partial {
            if tr & edge != 0 {
                next.push(tr);
            } else {
                next.extend(BitIter(edge).map(|b| tr | (1u64 << b)));
            }
        }
        partial = minimal_masks(&next);
        if partial.is_empty() {
            break;
        }
    }
    Clutter::from_antichain_unchecked(SetFamily::new(ground, partial).expect("transversals stay inside the ground set"))
}

/// `B(a) = a`.
pub fn is_self_dual(a: &Clutter) -> Result<bool> {
    if !a.is_nontrivial() {
        return Err(Error::TrivialClutter);
    }
    Ok(blocker(a) == *a)
}

/// The cardinality test `#A^▽ = 2^(t-1)`.
///
/// Every self-dual clutter passes it. The converse needs `a` to be
/// intersecting: `{{1,4},{2,3},{2,4}}` on `E_4` generates 8 sets but is not
/// self-dual. See [`self_dual_by_count`] for the exact characterization.
pub fn self_dual_criterion(a: &Clutter) -> Result<bool> {
    if !a.is_nontrivial() {
        return Err(Error::TrivialClutter);
    }
    let ground = a.ground();
    ground.require_dense()?;
    Ok(up_closure(a).count()? == ground.power_set_len() / 2)
}

/// Self-duality decided by counting: intersecting and `#A^▽ = 2^(t-1)`.
pub fn self_dual_by_count(a: &Clutter) -> Result<bool> {
    Ok(a.is_intersecting() && self_dual_criterion(a)?)
}
