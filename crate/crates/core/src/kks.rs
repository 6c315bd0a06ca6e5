//! Cascade (Macaulay) expansions, Kruskal–Katona–Schützenberger shadow
//! bounds, and the f-vector bound tables for star-self-dual complexes and
//! for up-families of self-dual clutters on an even ground set.

use serde::Serialize;

use crate::binom::{binom, binom_u128};
use crate::complexes::{is_star_self_dual, Complex};
use crate::error::{Error, Result};
use crate::sets::{is_self_dual, up_closure, Clutter, GroundSet};
use crate::vectors::LongFVector;

/// `m = C(a_k, k) + C(a_(k-1), k-1) + ... + C(a_j, j)` with
/// `a_k > a_(k-1) > ... > a_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CascadeExpansion {
    pub k: u32,
    /// `(a_i, i)` pairs, `i` descending from `k`.
    pub terms: Vec<(u64, u32)>,
}

impl CascadeExpansion {
    pub fn value(&self) -> u128 {
        self.terms
            .iter()
            .map(|&(a, i)| binom_u128(a, i as u64).expect("cascade term fits"))
            .sum()
    }

    /// `Σ C(a_i, i + shift)` with `shift` in `{-1, +1}`.
    fn shifted_sum(&self, up: bool) -> Result<i64> {
        let mut acc: u128 = 0;
        for &(a, i) in &self.terms {
            let j = if up { i as u64 + 1 } else { i as u64 - 1 };
            let c = binom_u128(a, j).ok_or(Error::Overflow)?;
            acc = acc.checked_add(c).ok_or(Error::Overflow)?;
        }
        i64::try_from(acc).map_err(|_| Error::Overflow)
    }
}

/// Largest `a >= i` with `C(a, i) <= m` (requires `m >= 1`).
fn largest_top(m: u64, i: u32) -> u64 {
    let i = i as u64;
    if i == 1 {
        return m;
    }
    let fits = |a: u64| binom_u128(a, i).is_some_and(|c| c <= m as u128);
    let mut lo = i;
    let mut hi = i + 1;
    while fits(hi) {
        lo = hi;
        hi = hi.saturating_mul(2);
    }
    // fits(lo), !fits(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy `k`-binomial expansion of `m`; `m = 0` gives no terms.
pub fn cascade(m: u64, k: u32) -> Result<CascadeExpansion> {
    if k < 1 {
        return Err(Error::InvalidLevel { k });
    }
    let mut terms = Vec::new();
    let mut rest = m;
    let mut level = k;
    while rest > 0 && level >= 1 {
        let a = largest_top(rest, level);
        rest -= binom_u128(a, level as u64).expect("bounded by m") as u64;
        terms.push((a, level));
        level -= 1;
    }
    debug_assert_eq!(rest, 0);
    Ok(CascadeExpansion { k, terms })
}

/// Minimum number of `(k-1)`-sets under `m` distinct `k`-sets:
/// `Σ C(a_i, i - 1)` over the cascade of `m`.
pub fn shadow_lower_bound(m: u64, k: u32) -> Result<i64> {
    cascade(m, k)?.shifted_sum(false)
}

/// Maximum number of `(k+1)`-faces of a complex with `m` faces of size `k`:
/// `Σ C(a_i, i + 1)` over the cascade of `m`.
pub fn shadow_upper_bound(m: u64, k: u32) -> Result<i64> {
    cascade(m, k)?.shifted_sum(true)
}

/// Which side of a row is constrained by the theorem being tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    Exact,
    AtLeast,
    AtMost,
}

/// Bounds on one entry `f_k`. Unconstrained sides hold `0` or `C(t, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub k: usize,
    pub exact: Option<i64>,
    pub lower: i64,
    pub upper: i64,
    #[serde(skip)]
    pub kind: RowKind,
}

/// `f_(t/2-k) + f_(t/2+k) = C(t, t/2-k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSum {
    pub offset: usize,
    pub total: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub t: u32,
    pub rows: Vec<BoundRow>,
    #[serde(skip)]
    pub pair_sums: Vec<PairSum>,
}

fn even_ground(t: u32) -> Result<usize> {
    GroundSet::new(t)?;
    if !t.is_multiple_of(2) {
        return Err(Error::OddGroundSet { t });
    }
    Ok(t as usize)
}

fn build_table(
    t: usize,
    first: i64,
    last: i64,
    below_middle: impl Fn(usize) -> BoundRow,
    above_middle: impl Fn(usize) -> BoundRow,
) -> BoundTable {
    let half = t / 2;
    let exact = |k: usize, v: i64| BoundRow {
        k,
        exact: Some(v),
        lower: v,
        upper: v,
        kind: RowKind::Exact,
    };
    let rows = (0..=t)
        .map(|k| {
            if k == 0 {
                exact(0, first)
            } else if k == t {
                exact(t, last)
            } else if k == half {
                exact(k, binom(t - 1, half))
            } else if k < half {
                below_middle(k)
            } else {
                above_middle(k)
            }
        })
        .collect();
    let pair_sums = (1..half)
        .map(|offset| PairSum {
            offset,
            total: binom(t, half - offset),
        })
        .collect();
    BoundTable {
        t: t as u32,
        rows,
        pair_sums,
    }
}

/// Bounds on `f(Δ; t)` for a complex with `Δ* = Δ` on an even ground set.
pub fn lemma2_table(t: u32) -> Result<BoundTable> {
    let t = even_ground(t)?;
    Ok(build_table(
        t,
        1,
        0,
        |k| BoundRow {
            k,
            exact: None,
            lower: binom(t - 1, k),
            upper: binom(t, k),
            kind: RowKind::AtLeast,
        },
        |k| BoundRow {
            k,
            exact: None,
            lower: 0,
            upper: binom(t - 1, k),
            kind: RowKind::AtMost,
        },
    ))
}

/// Bounds on `f(A^▽; t)` for a self-dual clutter on an even ground set.
pub fn theorem3_table(t: u32) -> Result<BoundTable> {
    let t = even_ground(t)?;
    Ok(build_table(
        t,
        0,
        1,
        |k| BoundRow {
            k,
            exact: None,
            lower: 0,
            upper: binom(t - 1, k - 1),
            kind: RowKind::AtMost,
        },
        |k| BoundRow {
            k,
            exact: None,
            lower: binom(t - 1, k - 1),
            upper: binom(t, k),
            kind: RowKind::AtLeast,
        },
    ))
}

/// Outcome for one row of a [`BoundTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub k: usize,
    pub value: i64,
    pub lower: i64,
    pub upper: i64,
    /// Distance to the constrained side; `None` for exact rows.
    pub slack: Option<i64>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub offset: usize,
    pub sum: i64,
    pub expected: i64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub t: u32,
    pub f: Vec<u64>,
    pub rows: Vec<RowCheck>,
    pub pair_sums: Vec<PairCheck>,
    pub passed: bool,
}

impl BoundReport {
    /// Every inequality row holds with equality.
    pub fn all_tight(&self) -> bool {
        self.rows.iter().all(|r| r.slack.is_none_or(|s| s == 0))
    }

    pub fn violations(&self) -> usize {
        self.rows.iter().filter(|r| !r.ok).count() + self.pair_sums.iter().filter(|p| !p.ok).count()
    }
}

impl BoundTable {
    pub fn check(&self, fv: &LongFVector) -> Result<BoundReport> {
        if fv.t() != self.t {
            return Err(Error::LengthMismatch {
                len: fv.counts().len(),
                t: self.t,
            });
        }
        let value = |k: usize| fv.get(k) as i64;
        let rows: Vec<RowCheck> = self
            .rows
            .iter()
            .map(|row| {
                let v = value(row.k);
                let slack = match row.kind {
                    RowKind::Exact => None,
                    RowKind::AtLeast => Some(v - row.lower),
                    RowKind::AtMost => Some(row.upper - v),
                };
                RowCheck {
                    k: row.k,
                    value: v,
                    lower: row.lower,
                    upper: row.upper,
                    slack,
                    ok: row.lower <= v && v <= row.upper,
                }
            })
            .collect();
        let half = self.t as usize / 2;
        let pair_sums: Vec<PairCheck> = self
            .pair_sums
            .iter()
            .map(|p| {
                let sum = value(half - p.offset) + value(half + p.offset);
                PairCheck {
                    offset: p.offset,
                    sum,
                    expected: p.total,
                    ok: sum == p.total,
                }
            })
            .collect();
        let passed = rows.iter().all(|r| r.ok) && pair_sums.iter().all(|p| p.ok);
        Ok(BoundReport {
            t: self.t,
            f: fv.counts().to_vec(),
            rows,
            pair_sums,
            passed,
        })
    }
}

/// Checks `f(A^▽; t)` against [`theorem3_table`] after re-certifying that
/// `a` is self-dual.
pub fn verify_theorem3(a: &Clutter) -> Result<BoundReport> {
    let table = theorem3_table(a.t())?;
    a.ground().require_dense()?;
    match is_self_dual(a) {
        Ok(true) => {}
        Ok(false) | Err(Error::TrivialClutter) => return Err(Error::NotSelfDual),
        Err(e) => return Err(e),
    }
    let counts = up_closure(a).dense()?.size_counts();
    table.check(&LongFVector::new(a.t(), counts)?)
}

/// Checks `f(Δ; t)` against [`lemma2_table`] after re-certifying `Δ* = Δ`.
pub fn verify_lemma2(c: &Complex) -> Result<BoundReport> {
    let table = lemma2_table(c.t())?;
    if !is_star_self_dual(c)? {
        return Err(Error::NotStarSelfDual);
    }
    table.check(&c.f_vector())
}
