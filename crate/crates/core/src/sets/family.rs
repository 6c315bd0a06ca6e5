use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::dense::DenseTable;
use super::mask::{GroundSet, SubsetMask, MAX_DENSE_T};
use crate::error::{Error, Result};

/// A duplicate-free family of subsets of `E_t`, kept in ascending mask order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    ground: GroundSet,
    members: Vec<u64>,
}

impl SetFamily {
    /// Builds a family from raw masks, sorting and deduplicating them.
    pub fn new<I: IntoIterator<Item = u64>>(ground: GroundSet, masks: I) -> Result<Self> {
        let full = ground.full_mask();
        let mut members = Vec::new();
        for bits in masks {
            if bits & !full != 0 {
                return Err(Error::MaskOutOfRange { bits, t: ground.t() });
            }
            members.push(bits);
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { ground, members })
    }

    pub fn from_subsets<I: IntoIterator<Item = SubsetMask>>(ground: GroundSet, sets: I) -> Result<Self> {
        let mut masks = Vec::new();
        for s in sets {
            if s.ground() != ground {
                return Err(Error::GroundSetMismatch {
                    left: ground.t(),
                    right: s.ground().t(),
                });
            }
            masks.push(s.bits());
        }
        Self::new(ground, masks)
    }

    /// Caller guarantees `members` is sorted, unique and in range.
    pub(crate) fn from_sorted_unchecked(ground: GroundSet, members: Vec<u64>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().is_none_or(|&m| m & !ground.full_mask() == 0));
        SetFamily { ground, members }
    }

    pub fn empty(ground: GroundSet) -> Self {
        SetFamily {
            ground,
            members: Vec::new(),
        }
    }

    /// The power set `2^[t]`.
    pub fn power_set(ground: GroundSet) -> Result<Self> {
        ground.require_dense()?;
        Ok(SetFamily {
            ground,
            members: (0..ground.power_set_len()).collect(),
        })
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn t(&self) -> u32 {
        self.ground.t()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Raw masks in canonical order.
    #[inline]
    pub fn masks(&self) -> &[u64] {
        &self.members
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = SubsetMask> + '_ {
        let g = self.ground;
        self.members.iter().map(move |&b| SubsetMask::from_raw(g, b))
    }

    pub fn contains(&self, bits: u64) -> bool {
        self.members.binary_search(&bits).is_ok()
    }

    /// `V(F)`, the union of all members.
    pub fn vertex_set(&self) -> SubsetMask {
        SubsetMask::from_raw(self.ground, self.members.iter().fold(0, |acc, &m| acc | m))
    }

    /// `true` for `∅` and `{0̂}`.
    pub fn is_trivial(&self) -> bool {
        self.members.is_empty() || self.members == [0]
    }

    /// Size histogram `(f_0, ..., f_t)`.
    pub fn size_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.t() as usize + 1];
        for &m in &self.members {
            counts[m.count_ones() as usize] += 1;
        }
        counts
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &SetFamily) -> Result<SetFamily> {
        self.check_same_ground(other)?;
        let members = self.members.iter().copied().filter(|m| !other.contains(*m)).collect();
        Ok(SetFamily::from_sorted_unchecked(self.ground, members))
    }

    pub fn union(&self, other: &SetFamily) -> Result<SetFamily> {
        self.check_same_ground(other)?;
        Self::new(self.ground, self.members.iter().chain(&other.members).copied())
    }

    fn check_same_ground(&self, other: &SetFamily) -> Result<()> {
        if self.ground != other.ground {
            Err(Error::GroundSetMismatch {
                left: self.t(),
                right: other.t(),
            })
        } else {
            Ok(())
        }
    }

    /// `2^[t] - F`.
    pub fn power_set_complement(&self) -> Result<SetFamily> {
        self.ground.require_dense()?;
        Ok(DenseTable::from_family(self)?.negated().to_family())
    }

    /// Applies `f` to every member mask and re-canonicalizes.
    pub fn map_masks(&self, f: impl Fn(u64) -> u64) -> Result<SetFamily> {
        Self::new(self.ground, self.members.iter().map(|&m| f(m)))
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for SetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let members: Vec<SubsetMask> = self.iter().collect();
        let mut st = serializer.serialize_struct("SetFamily", 2)?;
        st.serialize_field("t", &self.t())?;
        st.serialize_field("members", &members)?;
        st.end()
    }
}

/// `{F^∁ : F ∈ f}`.
pub fn complement_family(f: &SetFamily) -> SetFamily {
    let full = f.ground.full_mask();
    let mut members: Vec<u64> = f.members.iter().map(|&m| full & !m).collect();
    members.sort_unstable();
    SetFamily::from_sorted_unchecked(f.ground, members)
}

/// A family in which no member contains another.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    family: SetFamily,
}

impl Clutter {
    /// Validates the antichain property.
    pub fn new(family: SetFamily) -> Result<Self> {
        let mut by_size: Vec<u64> = family.members.clone();
        by_size.sort_unstable_by_key(|m| (m.count_ones(), *m));
        for (i, &small) in by_size.iter().enumerate() {
            for &large in &by_size[i + 1..] {
                if small & !large == 0 {
                    return Err(Error::NotAnAntichain {
                        smaller: small,
                        larger: large,
                    });
                }
            }
        }
        Ok(Clutter { family })
    }

    pub(crate) fn from_antichain_unchecked(family: SetFamily) -> Self {
        Clutter { family }
    }

    /// Convenience builder from 1-based element lists.
    pub fn from_sets(ground: GroundSet, sets: &[&[u32]]) -> Result<Self> {
        let subsets = sets
            .iter()
            .map(|s| ground.subset(s.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(SetFamily::from_subsets(ground, subsets)?)
    }

    #[inline]
    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    #[inline]
    pub fn into_family(self) -> SetFamily {
        self.family
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.family.ground
    }

    #[inline]
    pub fn t(&self) -> u32 {
        self.family.t()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.family.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    #[inline]
    pub fn masks(&self) -> &[u64] {
        self.family.masks()
    }

    /// Neither `∅` nor `{0̂}`.
    pub fn is_nontrivial(&self) -> bool {
        !self.family.is_trivial()
    }

    /// No two members are disjoint.
    pub fn is_intersecting(&self) -> bool {
        let m = self.masks();
        m.iter().enumerate().all(|(i, &a)| m[i..].iter().all(|&b| a & b != 0))
    }
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.family.fmt(f)
    }
}

impl Serialize for Clutter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.family.serialize(serializer)
    }
}

/// Inclusion-minimal members of `f`.
pub fn min_elements(f: &SetFamily) -> Clutter {
    if f.t() <= MAX_DENSE_T && f.len() > 4096 && f.ground.power_set_len() <= f.len() as u64 * 1024 {
        if let Ok(table) = DenseTable::from_family(f) {
            return Clutter::from_antichain_unchecked(table.minimal_members());
        }
    }
    Clutter::from_antichain_unchecked(SetFamily::new(f.ground, minimal_masks(f.masks())).expect("masks in range"))
}

/// Inclusion-minimal masks of an arbitrary slice, in ascending numeric order.
pub(crate) fn minimal_masks(masks: &[u64]) -> Vec<u64> {
    let mut by_size: Vec<u64> = masks.to_vec();
    by_size.sort_unstable_by_key(|m| (m.count_ones(), *m));
    by_size.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for m in by_size {
        if !kept.iter().any(|&k| k & !m == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// Inclusion-maximal masks, in ascending numeric order.
pub(crate) fn maximal_masks(masks: &[u64]) -> Vec<u64> {
    let mut by_size: Vec<u64> = masks.to_vec();
    by_size.sort_unstable_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    by_size.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for m in by_size {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(t: u32) -> GroundSet {
        GroundSet::new(t).unwrap()
    }

    fn fam(t: u32, sets: &[&[u32]]) -> SetFamily {
        let ground = g(t);
        SetFamily::from_subsets(ground, sets.iter().map(|s| ground.subset(s.iter().copied()).unwrap())).unwrap()
    }

    #[test]
    fn canonical_order_and_dedup() {
        let f = SetFamily::new(g(3), [6, 3, 5, 3]).unwrap();
        assert_eq!(f.masks(), &[3, 5, 6]);
        assert_eq!(f, fam(3, &[&[2, 3], &[1, 2], &[1, 3]]));
    }

    #[test]
    fn complement_family_examples() {
        let f = fam(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(complement_family(&f), fam(3, &[&[3], &[2], &[1]]));
        assert!(complement_family(&SetFamily::empty(g(3))).is_empty());
        assert_eq!(complement_family(&fam(4, &[&[]])), fam(4, &[&[1, 2, 3, 4]]));
        assert_eq!(complement_family(&complement_family(&f)), f);
    }

    #[test]
    fn min_elements_examples() {
        let f = fam(3, &[&[1], &[1, 2], &[2, 3]]);
        assert_eq!(min_elements(&f).into_family(), fam(3, &[&[1], &[2, 3]]));

        let anti = fam(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(min_elements(&anti).into_family(), anti);

        let all = SetFamily::power_set(g(4)).unwrap();
        assert_eq!(min_elements(&all).into_family(), fam(4, &[&[]]));
    }

    #[test]
    fn min_elements_dense_path_agrees() {
        let all = SetFamily::power_set(g(14)).unwrap();
        let upper = SetFamily::new(g(14), all.masks().iter().copied().filter(|m| m.count_ones() >= 7)).unwrap();
        let dense = min_elements(&upper);
        assert_eq!(dense.masks(), minimal_masks(upper.masks()).as_slice());
        assert_eq!(dense.len(), 3432);
    }

    #[test]
    fn clutter_rejects_chains() {
        let f = fam(3, &[&[1], &[1, 2]]);
        assert!(matches!(
            Clutter::new(f),
            Err(Error::NotAnAntichain { smaller: 1, larger: 3 })
        ));
    }

    #[test]
    fn triviality() {
        assert!(!Clutter::new(SetFamily::empty(g(3))).unwrap().is_nontrivial());
        assert!(!Clutter::from_sets(g(3), &[&[]]).unwrap().is_nontrivial());
        assert!(Clutter::from_sets(g(3), &[&[2]]).unwrap().is_nontrivial());
    }

    #[test]
    fn maximal_masks_example() {
        assert_eq!(maximal_masks(&[0, 1, 2, 3, 4]), vec![3, 4]);
    }

    #[test]
    fn vertex_set_is_union() {
        let f = fam(5, &[&[1, 2], &[4]]);
        assert_eq!(f.vertex_set().bits(), 0b1011);
    }
}
