//! Presence tables over the whole power set `2^[t]`, one bit per subset.

use super::family::SetFamily;
use super::mask::{BitIter, GroundSet};
use crate::error::Result;

/// `LOW_HALF[i]` has bit `j` set iff bit `i` of `j` is clear (`j < 64`).
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// Bitset indexed by subset mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseTable {
    ground: GroundSet,
    words: Vec<u64>,
}

impl DenseTable {
    pub fn empty(ground: GroundSet) -> Result<Self> {
        ground.require_dense()?;
        let n_words = (ground.power_set_len() as usize).div_ceil(64);
        Ok(DenseTable {
            ground,
            words: vec![0; n_words],
        })
    }

    pub fn from_masks<I: IntoIterator<Item = u64>>(ground: GroundSet, masks: I) -> Result<Self> {
        let mut table = Self::empty(ground)?;
        for m in masks {
            table.insert(m);
        }
        Ok(table)
    }

    pub fn from_family(f: &SetFamily) -> Result<Self> {
        Self::from_masks(f.ground(), f.masks().iter().copied())
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// Bits of the last word that correspond to real subsets.
    fn valid_tail(&self) -> u64 {
        let n = self.ground.power_set_len();
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    #[inline]
    pub fn contains(&self, mask: u64) -> bool {
        self.words[(mask >> 6) as usize] & (1 << (mask & 63)) != 0
    }

    #[inline]
    pub fn insert(&mut self, mask: u64) {
        self.words[(mask >> 6) as usize] |= 1 << (mask & 63);
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Members in ascending mask order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| BitIter(w).map(move |b| ((i as u64) << 6) | b as u64))
    }

    pub fn to_family(&self) -> SetFamily {
        SetFamily::from_sorted_unchecked(self.ground, self.iter().collect())
    }

    /// Number of members of each size `0..=t`.
    pub fn size_counts(&self) -> Vec<u64> {
        let t = self.ground.t() as usize;
        let mut counts = vec![0u64; t + 1];
        if t < 6 {
            for b in BitIter(self.words[0]) {
                counts[b.count_ones() as usize] += 1;
            }
            return counts;
        }
        // Split each index into (word index, bit position) and count by the
        // popcount of the bit position with per-size masks.
        let mut by_bit_size = [0u64; 7];
        for b in 0..64u64 {
            by_bit_size[b.count_ones() as usize] |= 1 << b;
        }
        for (i, &w) in self.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let base = i.count_ones() as usize;
            for (s, &sel) in by_bit_size.iter().enumerate() {
                counts[base + s] += (w & sel).count_ones() as u64;
            }
        }
        counts
    }

    /// Complement within `2^[t]`.
    pub fn negated(&self) -> DenseTable {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        let tail = self.valid_tail();
        if let Some(last) = out.words.last_mut() {
            *last &= tail;
        }
        out
    }

    /// Table of `{S : full - S ∈ self}`.
    pub fn reflected(&self) -> DenseTable {
        let t = self.ground.t();
        let words = if t >= 6 {
            self.words.iter().rev().map(|w| w.reverse_bits()).collect()
        } else {
            vec![self.words[0].reverse_bits() >> (64 - (1u32 << t))]
        };
        DenseTable {
            ground: self.ground,
            words,
        }
    }

    /// `{G^∁ : G ∉ self}`.
    pub fn star(&self) -> DenseTable {
        self.reflected().negated()
    }

    /// In place `S ∈ T ⇒ S ∪ {i} ∈ T` for one element index.
    fn shift_up(&mut self, i: u32) {
        if i < 6 {
            let step = 1u32 << i;
            for w in &mut self.words {
                *w |= (*w & LOW_HALF[i as usize]) << step;
            }
        } else {
            let stride = 1usize << (i - 6);
            for j in 0..self.words.len() {
                if j & stride == 0 {
                    self.words[j | stride] |= self.words[j];
                }
            }
        }
    }

    fn shift_down(&mut self, i: u32) {
        if i < 6 {
            let step = 1u32 << i;
            for w in &mut self.words {
                *w |= (*w >> step) & LOW_HALF[i as usize];
            }
        } else {
            let stride = 1usize << (i - 6);
            for j in 0..self.words.len() {
                if j & stride == 0 {
                    self.words[j] |= self.words[j | stride];
                }
            }
        }
    }

    /// Sets obtained by adding exactly one element to a member.
    fn one_step_up(&self) -> DenseTable {
        let mut acc = DenseTable {
            ground: self.ground,
            words: vec![0; self.words.len()],
        };
        for i in 0..self.ground.t() {
            if i < 6 {
                let step = 1u32 << i;
                for (a, &w) in acc.words.iter_mut().zip(&self.words) {
                    *a |= (w & LOW_HALF[i as usize]) << step;
                }
            } else {
                let stride = 1usize << (i - 6);
                for j in 0..self.words.len() {
                    if j & stride == 0 {
                        acc.words[j | stride] |= self.words[j];
                    }
                }
            }
        }
        acc
    }

    fn one_step_down(&self) -> DenseTable {
        let mut acc = DenseTable {
            ground: self.ground,
            words: vec![0; self.words.len()],
        };
        for i in 0..self.ground.t() {
            if i < 6 {
                let step = 1u32 << i;
                for (a, &w) in acc.words.iter_mut().zip(&self.words) {
                    *a |= (w >> step) & LOW_HALF[i as usize];
                }
            } else {
                let stride = 1usize << (i - 6);
                for j in 0..self.words.len() {
                    if j & stride == 0 {
                        acc.words[j] |= self.words[j | stride];
                    }
                }
            }
        }
        acc
    }

    /// Closes upward: every superset of a member becomes a member.
    pub fn up_closed(&self) -> DenseTable {
        let mut out = self.clone();
        for i in 0..self.ground.t() {
            out.shift_up(i);
        }
        out
    }

    /// Closes downward: every subset of a member becomes a member.
    pub fn down_closed(&self) -> DenseTable {
        let mut out = self.clone();
        for i in 0..self.ground.t() {
            out.shift_down(i);
        }
        out
    }

    fn and_not(&self, other: &DenseTable) -> DenseTable {
        DenseTable {
            ground: self.ground,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    /// Members with no proper subset in the table.
    pub fn minimal_members(&self) -> SetFamily {
        let strictly_above = self.one_step_up().up_closed();
        self.and_not(&strictly_above).to_family()
    }

    /// Members with no proper superset in the table.
    pub fn maximal_members(&self) -> SetFamily {
        let strictly_below = self.one_step_down().down_closed();
        self.and_not(&strictly_below).to_family()
    }

    pub fn is_up_closed(&self) -> bool {
        self.up_closed() == *self
    }

    pub fn is_down_closed(&self) -> bool {
        self.down_closed() == *self
    }
}
