use std::sync::OnceLock;

use super::dense::DenseTable;
use super::family::{Clutter, SetFamily};
use super::mask::SubsetMask;
use crate::error::Result;

/// The increasing family `A^▽` generated by a clutter.
///
/// The generators are always kept; the dense presence table over `2^[t]` is
/// built the first time it is requested (only for `t <= 28`).
#[derive(Debug, Clone)]
pub struct UpFamily {
    generators: Clutter,
    dense: OnceLock<DenseTable>,
}

impl PartialEq for UpFamily {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for UpFamily {}

impl UpFamily {
    /// `generators` must be the inclusion-minimal members.
    pub fn from_generators(generators: Clutter) -> Self {
        UpFamily {
            generators,
            dense: OnceLock::new(),
        }
    }

    /// Recovers an up-family from its full member list.
    pub fn from_members(members: &SetFamily) -> Result<Self> {
        let table = DenseTable::from_family(members)?.up_closed();
        let generators = Clutter::from_antichain_unchecked(table.minimal_members());
        let up = UpFamily::from_generators(generators);
        let _ = up.dense.set(table);
        Ok(up)
    }

    #[inline]
    pub fn generators(&self) -> &Clutter {
        &self.generators
    }

    pub fn t(&self) -> u32 {
        self.generators.t()
    }

    /// Dense presence table, built on first use.
    pub fn dense(&self) -> Result<&DenseTable> {
        if let Some(table) = self.dense.get() {
            return Ok(table);
        }
        let table = DenseTable::from_family(self.generators.family())?.up_closed();
        Ok(self.dense.get_or_init(|| table))
    }

    pub fn members(&self) -> Result<SetFamily> {
        Ok(self.dense()?.to_family())
    }

    /// `#A^▽`.
    pub fn count(&self) -> Result<u64> {
        Ok(self.dense()?.count())
    }

    pub fn contains(&self, s: SubsetMask) -> bool {
        match self.dense.get() {
            Some(table) => table.contains(s.bits()),
            None => self.generators.masks().iter().any(|&g| g & !s.bits() == 0),
        }
    }
}

/// `{A}^▽`, all supersets of `a`.
pub fn principal_upset(a: SubsetMask) -> UpFamily {
    let family = SetFamily::from_sorted_unchecked(a.ground(), vec![a.bits()]);
    UpFamily::from_generators(Clutter::from_antichain_unchecked(family))
}

/// `A^▽`, the union of the principal up-families of the members of `a`.
pub fn up_closure(a: &Clutter) -> UpFamily {
    UpFamily::from_generators(a.clone())
}

/// `F* = {G^∁ : G ∈ 2^[t] - F}`.
pub fn star(f: &SetFamily) -> Result<SetFamily> {
    Ok(DenseTable::from_family(f)?.star().to_family())
}
