//! Exhaustive enumeration of self-dual clutters on small ground sets, and the
//! verification harness run over everything enumerated.

use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{is_star_self_dual, verify_complex_bijection, Complex};
use crate::error::{Error, Result};
use crate::identities::{check_appendix, StarSelfDualFamily};
use crate::kks::{verify_lemma2, verify_theorem3};
use crate::sets::{blocker, is_self_dual, self_dual_criterion, up_closure, Clutter, GroundSet, SetFamily};

/// Largest ground set handled by [`enumerate_self_dual`]; the up-set of every
/// search node fits in one `u64`.
pub const MAX_ENUM_T: u32 = 6;

/// Every self-dual clutter on `E_t`, in canonical search order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub t: u32,
    pub clutters: Vec<Clutter>,
}

impl EnumerationResult {
    pub fn count(&self) -> usize {
        self.clutters.len()
    }
}

struct Search {
    t: u32,
    half: u32,
    /// Candidate generators ordered by (size, mask).
    order: Vec<u64>,
    /// `up[mask]`: bitset of all supersets of `mask`.
    up: Vec<u64>,
    /// `suffix[i]`: bitset of the candidates at rank `>= i`.
    suffix: Vec<u64>,
}

impl Search {
    fn new(t: u32) -> Self {
        let n = 1u64 << t;
        let mut order: Vec<u64> = (1..n).collect();
        order.sort_unstable_by_key(|m| (m.count_ones(), *m));
        let up = (0..n)
            .map(|m| (0..n).filter(|s| m & !s == 0).fold(0u64, |acc, s| acc | (1 << s)))
            .collect();
        let mut suffix = vec![0u64; order.len() + 1];
        for i in (0..order.len()).rev() {
            suffix[i] = suffix[i + 1] | (1 << order[i]);
        }
        Search {
            t,
            half: 1 << (t - 1),
            order,
            up,
            suffix,
        }
    }

    /// Bitset of `{full - S : S ∈ set}`.
    fn reflect(&self, set: u64) -> u64 {
        set.reverse_bits() >> (64 - (1u32 << self.t))
    }

    /// Up-set after adding candidate `i`, if the branch can still succeed.
    fn extend(&self, upset: u64, i: usize) -> Option<u64> {
        let c = self.order[i];
        if upset & (1 << c) != 0 {
            return None;
        }
        let next = upset | self.up[c as usize];
        let size = next.count_ones();
        if size > self.half {
            return None;
        }
        // A self-dual up-set never holds a set together with its complement.
        if next & self.reflect(next) != 0 {
            return None;
        }
        if size + (self.suffix[i + 1] & !next).count_ones() < self.half {
            return None;
        }
        Some(next)
    }

    fn descend(&self, start: usize, upset: u64, chosen: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if upset.count_ones() == self.half {
            out.push(chosen.clone());
            return;
        }
        for i in start..self.order.len() {
            if let Some(next) = self.extend(upset, i) {
                chosen.push(self.order[i]);
                self.descend(i + 1, next, chosen, out);
                chosen.pop();
            }
        }
    }

    fn subtree(&self, first: usize) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        if let Some(upset) = self.extend(0, first) {
            let mut chosen = vec![self.order[first]];
            self.descend(first + 1, upset, &mut chosen, &mut out);
        }
        out
    }
}

/// All self-dual clutters on `E_t` for `1 <= t <= 6`.
///
/// Depth-first over antichains with generators in (size, mask) order; a
/// branch is cut when its up-set exceeds `2^(t-1)` sets, contains a
/// complementary pair, or cannot reach `2^(t-1)` with the remaining
/// candidates. Each hit is certified by `B(A) = A`. Subtrees rooted at the
/// first generator run in parallel and are merged in order.
pub fn enumerate_self_dual(t: u32) -> Result<EnumerationResult> {
    let ground = GroundSet::new(t)?;
    ground.require_at_most(MAX_ENUM_T)?;
    let search = Search::new(t);
    let found: Vec<Vec<Vec<u64>>> = (0..search.order.len())
        .into_par_iter()
        .map(|first| search.subtree(first))
        .collect();
    let mut clutters = Vec::new();
    for masks in found.into_iter().flatten() {
        let clutter = Clutter::new(SetFamily::new(ground, masks)?)?;
        if blocker(&clutter) != clutter {
            return Err(Error::NotSelfDual);
        }
        clutters.push(clutter);
    }
    Ok(EnumerationResult { t, clutters })
}

/// `2^[t] - A^▽` for a clutter `a`.
pub fn complex_of(a: &Clutter) -> Result<Complex> {
    let up = up_closure(a).members()?;
    Complex::new(up.power_set_complement()?)
}

/// Complexes with `Δ* = Δ` on `E_t`, obtained as `2^[t] - A^▽` over the
/// self-dual clutters and each re-verified.
pub fn enumerate_star_selfdual_complexes(t: u32) -> Result<Vec<Complex>> {
    let clutters = enumerate_self_dual(t)?;
    clutters
        .clutters
        .par_iter()
        .map(|a| {
            let c = complex_of(a)?;
            if !is_star_self_dual(&c)? {
                return Err(Error::NotStarSelfDual);
            }
            Ok(c)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            passed: self.passed + other.passed,
            failed: self.failed + other.failed,
        }
    }
}

/// Verification results over every self-dual clutter on `E_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniverseReport {
    pub t: u32,
    pub count: u64,
    /// `B(A) = A` and `#A^▽ = 2^(t-1)` agree.
    pub criterion: Tally,
    /// `2^[t] - A^▽` is a complex fixed by the star operator and maps back.
    pub bijection: Tally,
    pub appendix: Tally,
    /// Even `t` only.
    pub theorem3: Option<Tally>,
    /// Even `t` only.
    pub lemma2: Option<Tally>,
}

impl UniverseReport {
    pub fn passed(&self) -> bool {
        let zero = |t: &Tally| t.failed == 0;
        zero(&self.criterion)
            && zero(&self.bijection)
            && zero(&self.appendix)
            && self.theorem3.as_ref().is_none_or(zero)
            && self.lemma2.as_ref().is_none_or(zero)
    }
}

#[derive(Default)]
struct Partial {
    criterion: Tally,
    bijection: Tally,
    appendix: Tally,
    theorem3: Tally,
    lemma2: Tally,
}

fn verify_one(a: &Clutter) -> Result<Partial> {
    let mut p = Partial::default();
    let even = a.t().is_multiple_of(2);
    p.criterion.record(is_self_dual(a)? && self_dual_criterion(a)?);

    let complex = complex_of(a)?;
    p.bijection.record(verify_complex_bijection(&complex, a)?);

    let up = up_closure(a).members()?;
    let appendix_ok = match StarSelfDualFamily::new(up) {
        Ok(f) => check_appendix(&f)?.passed(),
        Err(Error::NotStarSelfDual) => false,
        Err(e) => return Err(e),
    };
    p.appendix.record(appendix_ok);

    if even {
        p.theorem3.record(matches!(verify_theorem3(a), Ok(r) if r.passed));
        p.lemma2.record(matches!(verify_lemma2(&complex), Ok(r) if r.passed));
    }
    Ok(p)
}

/// Runs every applicable check over the enumeration for `t`.
pub fn verify_universe(t: u32) -> Result<UniverseReport> {
    verify_enumeration(&enumerate_self_dual(t)?)
}

/// As [`verify_universe`] on an existing enumeration.
pub fn verify_enumeration(result: &EnumerationResult) -> Result<UniverseReport> {
    let even = result.t.is_multiple_of(2);
    let total = result
        .clutters
        .par_iter()
        .map(verify_one)
        .try_reduce(Partial::default, |a, b| {
            Ok(Partial {
                criterion: a.criterion.merge(b.criterion),
                bijection: a.bijection.merge(b.bijection),
                appendix: a.appendix.merge(b.appendix),
                theorem3: a.theorem3.merge(b.theorem3),
                lemma2: a.lemma2.merge(b.lemma2),
            })
        })?;
    Ok(UniverseReport {
        t: result.t,
        count: result.count() as u64,
        criterion: total.criterion,
        bijection: total.bijection,
        appendix: total.appendix,
        theorem3: even.then_some(total.theorem3),
        lemma2: even.then_some(total.lemma2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_t() {
        let counts: Vec<usize> = (1..=6).map(|t| enumerate_self_dual(t).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 4, 12, 81, 2646]);
    }

    #[test]
    fn t3_list() {
        let r = enumerate_self_dual(3).unwrap();
        let g = GroundSet::new(3).unwrap();
        let expected = [
            Clutter::from_sets(g, &[&[1]]).unwrap(),
            Clutter::from_sets(g, &[&[2]]).unwrap(),
            Clutter::from_sets(g, &[&[3]]).unwrap(),
            Clutter::from_sets(g, &[&[1, 2], &[1, 3], &[2, 3]]).unwrap(),
        ];
        assert_eq!(r.clutters, expected);
    }

    #[test]
    fn rejects_large_t() {
        assert!(matches!(
            enumerate_self_dual(7),
            Err(Error::GroundSetTooLarge { t: 7, limit: 6 })
        ));
    }

    #[test]
    fn universe_t4() {
        let r = verify_universe(4).unwrap();
        assert_eq!(r.count, 12);
        assert_eq!(r.theorem3, Some(Tally { passed: 12, failed: 0 }));
        assert_eq!(r.lemma2, Some(Tally { passed: 12, failed: 0 }));
        assert!(r.passed());
    }

    #[test]
    fn universe_t5() {
        let r = verify_universe(5).unwrap();
        assert_eq!(r.count, 81);
        assert_eq!(r.appendix, Tally { passed: 81, failed: 0 });
        assert_eq!(r.criterion, Tally { passed: 81, failed: 0 });
        assert!(r.theorem3.is_none());
        assert!(r.passed());
    }

    #[test]
    fn universe_t6() {
        let r = verify_universe(6).unwrap();
        assert_eq!(r.count, 2646);
        assert!(r.passed(), "{r:?}");
    }
}
