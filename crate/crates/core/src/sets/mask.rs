use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest ground set whose subsets fit in one machine word.
pub const MAX_T: u32 = 62;

/// Largest ground set for which the full power set may be materialized.
pub const MAX_DENSE_T: u32 = 28;

/// The ground set `E_t = {1, ..., t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    t: u32,
}

impl GroundSet {
    pub fn new(t: u32) -> Result<Self> {
        if t == 0 || t > MAX_T {
            return Err(Error::InvalidGroundSet { t, max: MAX_T });
        }
        Ok(GroundSet { t })
    }

    #[inline]
    pub fn t(self) -> u32 {
        self.t
    }

    /// Mask of `E_t` itself.
    #[inline]
    pub fn full_mask(self) -> u64 {
        (1u64 << self.t) - 1
    }

    /// `2^t`, the size of the power set.
    #[inline]
    pub fn power_set_len(self) -> u64 {
        1u64 << self.t
    }

    /// Fails unless `2^t` entries may be materialized.
    pub fn require_dense(self) -> Result<()> {
        self.require_at_most(MAX_DENSE_T)
    }

    pub fn require_at_most(self, limit: u32) -> Result<()> {
        if self.t > limit {
            Err(Error::GroundSetTooLarge { t: self.t, limit })
        } else {
            Ok(())
        }
    }

    pub fn empty_set(self) -> SubsetMask {
        SubsetMask { bits: 0, ground: self }
    }

    pub fn full_set(self) -> SubsetMask {
        SubsetMask {
            bits: self.full_mask(),
            ground: self,
        }
    }

    pub fn mask(self, bits: u64) -> Result<SubsetMask> {
        SubsetMask::new(self, bits)
    }

    /// Builds a subset from 1-based elements.
    pub fn subset<I: IntoIterator<Item = u32>>(self, elements: I) -> Result<SubsetMask> {
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > self.t {
                return Err(Error::ElementOutOfRange { element: e, t: self.t });
            }
            bits |= 1 << (e - 1);
        }
        Ok(SubsetMask { bits, ground: self })
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{}", self.t)
    }
}

/// One subset of `E_t`: element `i` is bit `i - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    bits: u64,
    ground: GroundSet,
}

impl SubsetMask {
    pub fn new(ground: GroundSet, bits: u64) -> Result<Self> {
        if bits & !ground.full_mask() != 0 {
            return Err(Error::MaskOutOfRange { bits, t: ground.t });
        }
        Ok(SubsetMask { bits, ground })
    }

    #[inline]
    pub(crate) fn from_raw(ground: GroundSet, bits: u64) -> Self {
        debug_assert_eq!(bits & !ground.full_mask(), 0);
        SubsetMask { bits, ground }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn ground(self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, element: u32) -> bool {
        element >= 1 && element <= self.ground.t && self.bits & (1 << (element - 1)) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersects(self, other: SubsetMask) -> bool {
        self.bits & other.bits != 0
    }

    /// `E_t - self`.
    #[inline]
    pub fn complement(self) -> SubsetMask {
        SubsetMask {
            bits: self.ground.full_mask() & !self.bits,
            ground: self.ground,
        }
    }

    /// 1-based elements in ascending order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        BitIter(self.bits).map(|b| b + 1)
    }
}

/// `E_t - s`.
pub fn complement_set(s: SubsetMask) -> SubsetMask {
    s.complement()
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elements())
    }
}

/// Iterates the positions of set bits, lowest first.
#[derive(Debug, Clone)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// All subsets of `set` (carry-rippler order, starting at 0).
pub(crate) fn submasks(set: u64) -> impl Iterator<Item = u64> {
    let mut sub = 0u64;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = sub;
        sub = sub.wrapping_sub(set) & set;
        done = sub == 0;
        Some(current)
    })
}
