//! Long f- and h-vectors of families on `E_t` and the relations between them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::binom::binom;
use crate::error::{Error, Result};
use crate::sets::{star, SetFamily, MAX_DENSE_T};

/// `(f_0, ..., f_t)`: `f_k` counts the members of size `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LongFVector {
    t: u32,
    counts: Vec<u64>,
}

/// `(h_0, ..., h_t)` defined by `Σ h_i x^(t-i) = Σ f_i (x-1)^(t-i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LongHVector {
    t: u32,
    values: Vec<i64>,
}

fn check_len(t: u32, len: usize) -> Result<()> {
    if len != t as usize + 1 || t as usize > crate::binom::MAX_N {
        Err(Error::LengthMismatch { len, t })
    } else {
        Ok(())
    }
}

impl LongFVector {
    /// Validates length `t + 1` and `f_k <= C(t, k)`.
    pub fn new(t: u32, counts: Vec<u64>) -> Result<Self> {
        check_len(t, counts.len())?;
        for (k, &c) in counts.iter().enumerate() {
            let max = binom(t as usize, k);
            if c > max as u64 {
                return Err(Error::NotAnFVector {
                    index: k,
                    value: i64::try_from(c).unwrap_or(i64::MAX),
                    max,
                });
            }
        }
        Ok(LongFVector { t, counts })
    }

    #[inline]
    pub fn t(&self) -> u32 {
        self.t
    }

    #[inline]
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    #[inline]
    pub fn get(&self, k: usize) -> u64 {
        self.counts[k]
    }

    /// `#F`.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl LongHVector {
    pub fn new(t: u32, values: Vec<i64>) -> Result<Self> {
        check_len(t, values.len())?;
        Ok(LongHVector { t, values })
    }

    #[inline]
    pub fn t(&self) -> u32 {
        self.t
    }

    #[inline]
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    #[inline]
    pub fn get(&self, k: usize) -> i64 {
        self.values[k]
    }
}

/// Size histogram of the members of `f`.
pub fn f_vector(f: &SetFamily) -> LongFVector {
    LongFVector {
        t: f.t(),
        counts: f.size_counts(),
    }
}

fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// `h_l = (-1)^l Σ_{k<=l} (-1)^k C(t-k, t-l) f_k`.
pub fn h_from_f(fv: &LongFVector) -> Result<LongHVector> {
    let t = fv.t as usize;
    let mut values = Vec::with_capacity(t + 1);
    for l in 0..=t {
        let mut acc: i128 = 0;
        for k in 0..=l {
            let term = (binom(t - k, t - l) as i128)
                .checked_mul(fv.counts[k] as i128)
                .ok_or(Error::Overflow)?;
            acc = if (l + k) % 2 == 0 {
                acc.checked_add(term)
            } else {
                acc.checked_sub(term)
            }
            .ok_or(Error::Overflow)?;
        }
        values.push(to_i64(acc)?);
    }
    Ok(LongHVector { t: fv.t, values })
}

/// `f_l = Σ_{k<=l} C(t-k, t-l) h_k`; rejects results that no family on
/// `E_t` can have.
pub fn f_from_h(hv: &LongHVector) -> Result<LongFVector> {
    let t = hv.t as usize;
    let mut counts = Vec::with_capacity(t + 1);
    for l in 0..=t {
        let mut acc: i128 = 0;
        for k in 0..=l {
            let term = (binom(t - k, t - l) as i128)
                .checked_mul(hv.values[k] as i128)
                .ok_or(Error::Overflow)?;
            acc = acc.checked_add(term).ok_or(Error::Overflow)?;
        }
        let max = binom(t, l);
        if acc < 0 || acc > max as i128 {
            return Err(Error::NotAnFVector {
                index: l,
                value: i64::try_from(acc).unwrap_or(if acc < 0 { i64::MIN } else { i64::MAX }),
                max,
            });
        }
        counts.push(acc as u64);
    }
    Ok(LongFVector { t: hv.t, counts })
}

/// Named pass/fail results of a family's vector identities.
pub type IdentityMap = BTreeMap<&'static str, bool>;

/// Checks the general h-vector identities of a single family:
///
/// * `eq22`: `h_0 = f_0`, `h_1 = f_1 - t f_0`, the alternating-sum forms of
///   `h_{t-1}` and `h_t`, and `Σ h_k = f_t`;
/// * `remark_iii`: `Σ f_k = Σ 2^(t-k) h_k = #F`;
/// * `remark_iv`: `h(F) + h(2^[t] - F) = (1, 0, ..., 0)` (only for `t <= 28`).
pub fn check_h_identities(f: &SetFamily) -> Result<IdentityMap> {
    let fv = f_vector(f);
    let hv = h_from_f(&fv)?;
    let t = fv.t as usize;
    let fk = |k: usize| fv.counts[k] as i128;
    let h = |k: usize| hv.values[k] as i128;

    let mut out = IdentityMap::new();

    let sign = |n: usize| if n.is_multiple_of(2) { 1i128 } else { -1 };
    let h_t_minus_1: i128 = sign(t - 1) * (0..t).map(|k| sign(k) * (t - k) as i128 * fk(k)).sum::<i128>();
    let h_t: i128 = sign(t) * (0..=t).map(|k| sign(k) * fk(k)).sum::<i128>();
    let eq22 = h(0) == fk(0)
        && h(1) == fk(1) - t as i128 * fk(0)
        && h(t - 1) == h_t_minus_1
        && h(t) == h_t
        && (0..=t).map(h).sum::<i128>() == fk(t);
    out.insert("eq22", eq22);

    let mut weighted: i128 = 0;
    for k in 0..=t {
        let w = (1i128 << (t - k)).checked_mul(h(k)).ok_or(Error::Overflow)?;
        weighted = weighted.checked_add(w).ok_or(Error::Overflow)?;
    }
    let total = f.len() as i128;
    out.insert("remark_iii", fv.total() as i128 == total && weighted == total);

    if fv.t <= MAX_DENSE_T {
        let rest = h_from_f(&f_vector(&f.power_set_complement()?))?;
        let ok = (0..=t).all(|k| h(k) + rest.values[k] as i128 == i128::from(k == 0));
        out.insert("remark_iv", ok);
    }
    Ok(out)
}

/// Checks the relations between `F` and `F*` (star computed directly):
///
/// * `star_count`: `#F* + #F = 2^t`;
/// * `star_f_relation`: `f_l(F*) + f_(t-l)(F) = C(t, l)`;
/// * `eq19`: `h_l(F*) + (-1)^l Σ_{k>=l} C(k, l) h_k(F) = δ_{l,0}`;
/// * `eq19_l0`: the `l = 0` case `h_0(F*) + Σ h_k(F) = 1`;
/// * `star_h_t`: `h_t(F*) = (-1)^(t+1) h_t(F)`.
pub fn check_star_relations(f: &SetFamily) -> Result<IdentityMap> {
    f.ground().require_dense()?;
    let t = f.t() as usize;
    let starred = star(f)?;
    let fv = f_vector(f);
    let fs = f_vector(&starred);
    let hv = h_from_f(&fv)?;
    let hs = h_from_f(&fs)?;

    let mut out = IdentityMap::new();
    out.insert(
        "star_count",
        starred.len() as u64 + f.len() as u64 == f.ground().power_set_len(),
    );
    out.insert(
        "star_f_relation",
        (0..=t).all(|l| fs.counts[l] as i64 + fv.counts[t - l] as i64 == binom(t, l)),
    );
    let eq19 = (0..=t).all(|l| {
        let tail: i128 = (l..=t).map(|k| binom(k, l) as i128 * hv.values[k] as i128).sum();
        let signed = if l % 2 == 0 { tail } else { -tail };
        hs.values[l] as i128 + signed == i128::from(l == 0)
    });
    out.insert("eq19", eq19);
    let h_sum: i128 = hv.values.iter().map(|&v| v as i128).sum();
    out.insert("eq19_l0", hs.values[0] as i128 + h_sum == 1);
    let sign = if (t + 1).is_multiple_of(2) { 1 } else { -1 };
    out.insert("star_h_t", hs.values[t] == sign * hv.values[t]);
    Ok(out)
}

/// The per-family JSON report: `{"t", "f", "h", "identities"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub t: u32,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub identities: IdentityMap,
}

impl FamilyReport {
    pub fn all_pass(&self) -> bool {
        self.identities.values().all(|&ok| ok)
    }
}

/// Vectors plus every applicable identity of [`check_h_identities`] and
/// [`check_star_relations`].
pub fn family_report(f: &SetFamily) -> Result<FamilyReport> {
    let fv = f_vector(f);
    let hv = h_from_f(&fv)?;
    let mut identities = check_h_identities(f)?;
    if f.t() <= MAX_DENSE_T {
        identities.extend(check_star_relations(f)?);
    }
    Ok(FamilyReport {
        t: f.t(),
        f: fv.counts,
        h: hv.values,
        identities,
    })
}
