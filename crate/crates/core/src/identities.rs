//! Identities satisfied by families with `F* = F`, checked numerically.
//!
//! Each check compares an f-side and an h-side evaluation (the h-vector is
//! always taken from the closed-form transform in [`crate::vectors`]).

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::binom::binom;
use crate::error::{Error, Result};
use crate::sets::{star, GroundSet, SetFamily};
use crate::vectors::{f_vector, h_from_f};

/// A family on `E_t` with `F* = F`: exactly one set of every complementary
/// pair is a member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarSelfDualFamily {
    family: SetFamily,
}

impl StarSelfDualFamily {
    pub fn new(family: SetFamily) -> Result<Self> {
        if star(&family)? != family {
            return Err(Error::NotStarSelfDual);
        }
        Ok(StarSelfDualFamily { family })
    }

    #[inline]
    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    #[inline]
    pub fn into_family(self) -> SetFamily {
        self.family
    }
}

/// Picks one set from each pair `{G, G^∁}` with a seeded coin.
pub fn random_star_selfdual(t: u32, seed: u64) -> Result<StarSelfDualFamily> {
    random_star_selfdual_stream(t, seed, 0)
}

/// As [`random_star_selfdual`], drawing from ChaCha stream `stream` so that
/// batch members are independent of each other and of thread scheduling.
pub fn random_star_selfdual_stream(t: u32, seed: u64, stream: u64) -> Result<StarSelfDualFamily> {
    let ground = GroundSet::new(t)?;
    ground.require_dense()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let full = ground.full_mask();
    let half = ground.power_set_len() / 2;
    let mut members = Vec::with_capacity(half as usize);
    // G < G^∁ exactly when G lacks the top element.
    for g in 0..half {
        members.push(if rng.random::<bool>() { g } else { full ^ g });
    }
    Ok(StarSelfDualFamily {
        family: SetFamily::new(ground, members)?,
    })
}

/// Result of one named check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    /// Failed, with the offending index when the check loops over one.
    Fail {
        index: Option<usize>,
    },
    NotApplicable,
}

impl CheckOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckOutcome::Pass => "pass",
            CheckOutcome::Fail { .. } => "fail",
            CheckOutcome::NotApplicable => "n/a",
        }
    }

    pub fn is_fail(self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }
}

impl Serialize for CheckOutcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Named outcomes for one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixReport {
    pub t: u32,
    pub checks: BTreeMap<&'static str, CheckOutcome>,
}

impl AppendixReport {
    /// No check failed (`n/a` counts as passing).
    pub fn passed(&self) -> bool {
        !self.checks.values().any(|c| c.is_fail())
    }

    pub fn failures(&self) -> Vec<(&'static str, Option<usize>)> {
        self.checks
            .iter()
            .filter_map(|(&name, &c)| match c {
                CheckOutcome::Fail { index } => Some((name, index)),
                _ => None,
            })
            .collect()
    }
}

impl Serialize for AppendixReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("t", &self.t)?;
        map.serialize_entry("checks", &self.checks)?;
        map.serialize_entry("passed", &self.passed())?;
        map.end()
    }
}

/// Every check name reported by [`check_appendix`].
pub const CHECK_NAMES: &[&str] = &[
    "size",
    "eq28",
    "h_pair_sum",
    "eq20_complemented",
    "eq21",
    "eq14",
    "delta_relation",
    "odd_t_block",
    "eq23",
    "eq24",
    "eq25",
    "eq25_rearranged",
    "odd_t_tail",
    "mid_relation",
    "eq27",
    "weighted_h_sum",
    "eq29",
    "eq9",
    "eq9_via_eq14",
    "eq27_eq9",
];

fn sign(n: usize) -> i128 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn c(n: usize, k: usize) -> i128 {
    binom(n, k) as i128
}

fn delta(l: usize) -> i128 {
    i128::from(l == 0)
}

fn for_all(range: impl IntoIterator<Item = usize>, mut ok: impl FnMut(usize) -> bool) -> CheckOutcome {
    for l in range {
        if !ok(l) {
            return CheckOutcome::Fail { index: Some(l) };
        }
    }
    CheckOutcome::Pass
}

fn holds(ok: bool) -> CheckOutcome {
    if ok {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail { index: None }
    }
}

fn when(applicable: bool, check: impl FnOnce() -> CheckOutcome) -> CheckOutcome {
    if applicable {
        check()
    } else {
        CheckOutcome::NotApplicable
    }
}

/// Runs every appendix identity on `f`, re-verifying `F* = F` first.
///
/// Checks conditioned on the parity of `t` report `n/a` on the other parity.
/// The relations at index `t/2` derived from the even-index identities
/// (`mid_relation`, `eq27`, `eq27_eq9`) need `t/2` even and are `n/a` when
/// `t ≡ 2 (mod 4)`.
pub fn check_appendix(f: &StarSelfDualFamily) -> Result<AppendixReport> {
    let family = &f.family;
    if star(family)? != *family {
        return Err(Error::NotStarSelfDual);
    }
    let t = family.t() as usize;
    let fv = f_vector(family);
    let hv = h_from_f(&fv)?;
    let fk: Vec<i128> = fv.counts().iter().map(|&x| x as i128).collect();
    let h: Vec<i128> = hv.values().iter().map(|&x| x as i128).collect();
    let even = t.is_multiple_of(2);
    let m = t / 2;

    let mut checks = BTreeMap::new();
    let mut put = |name: &'static str, outcome: CheckOutcome| {
        debug_assert!(CHECK_NAMES.contains(&name));
        checks.insert(name, outcome);
    };

    put("size", holds(family.len() as u64 == 1u64 << (t - 1)));

    put("eq28", for_all(0..=t, |l| fk[l] + fk[t - l] == c(t, l)));

    put(
        "h_pair_sum",
        for_all(0..=t, |l| {
            let left: i128 = (0..=l).map(|k| c(t - k, t - l) * h[k]).sum();
            let right: i128 = (0..=t - l).map(|j| c(t - j, l) * h[j]).sum();
            left + right == c(t, l)
        }),
    );

    put(
        "eq20_complemented",
        for_all(0..=t, |l| {
            let s: i128 = (0..=l).map(|k| sign(k) * c(t - k, t - l) * (c(t, k) - fk[t - k])).sum();
            h[l] == sign(l) * s
        }),
    );

    let eq21_tail = |l: usize| -> i128 { (t - l..=t).map(|j| sign(j) * c(j, t - l) * fk[j]).sum() };
    put(
        "eq21",
        for_all(0..=t, |l| h[l] == delta(l) - sign(t - l) * eq21_tail(l)),
    );

    put(
        "eq14",
        for_all(0..=t, |l| {
            let s: i128 = (0..=t - l).map(|j| c(t - j, l) * h[j]).sum();
            fk[l] == c(t, l) - s
        }),
    );

    put(
        "delta_relation",
        for_all(0..=t, |l| {
            let head: i128 = (0..=l).map(|k| sign(k) * c(t - k, t - l) * fk[k]).sum();
            sign(l) * head + sign(t - l) * eq21_tail(l) == delta(l)
        }),
    );

    put(
        "odd_t_block",
        when(!even, || {
            let q = (t - 1) / 2;
            // Alternating partial sum of row t: Σ_{k<=q} (-1)^k C(t,k) = (-1)^q C(t-1,q).
            let mid = sign(q) * c(t - 1, q);
            let low: i128 = (0..=q).map(|k| sign(k) * fk[k]).sum();
            let high: i128 = (q + 1..=t).map(|j| sign(j) * fk[j]).sum();
            let paired: i128 = -(0..=q).map(|k| sign(k) * (fk[k] - (c(t, k) - fk[k]))).sum::<i128>();
            let paired_high: i128 = -(q + 1..=t).map(|j| sign(j) * (fk[j] - (c(t, j) - fk[j]))).sum::<i128>();
            holds(
                h[t] == paired
                    && h[t] == mid - 2 * low
                    && h[t] == paired_high
                    && h[t] == -mid - 2 * high
                    && low == mid + high,
            )
        }),
    );

    put(
        "eq23",
        for_all(0..=t, |l| {
            let s: i128 = (l..=t).map(|k| c(k, l) * h[k]).sum();
            h[l] == delta(l) + sign(l + 1) * s
        }),
    );

    put("eq24", when(even, || holds(h[t] == 0)));

    let even_indices = (2..=t).step_by(2);
    put(
        "eq25",
        when(t >= 2, || {
            for_all(even_indices.clone(), |l| {
                (l..=t).map(|k| c(k, l - 1) * h[k]).sum::<i128>() == 0
            })
        }),
    );
    put(
        "eq25_rearranged",
        when(t >= 2, || {
            for_all(even_indices.clone(), |l| {
                let a: i128 = (l + 1..=t).map(|k| c(k, l - 1) * h[k]).sum();
                let b: i128 = (l + 1..=t).map(|k| c(k, l) * h[k]).sum();
                l as i128 * h[l] + a == 0 && 2 * h[l] + b == 0
            })
        }),
    );

    put(
        "odd_t_tail",
        when(!even && t >= 3, || {
            holds((t as i128 - 1) * h[t - 1] + c(t, 2) * h[t] == 0 && 2 * h[t - 1] + t as i128 * h[t] == 0)
        }),
    );

    let quarter = even && m.is_multiple_of(2) && t >= 4;
    put(
        "mid_relation",
        when(quarter, || {
            let s: i128 = (m + 1..t).map(|k| c(k, m - 1) * h[k]).sum();
            holds(m as i128 * h[m] + s == 0)
        }),
    );
    // `eq27` carries a factor 1/2; compared after doubling.
    let above_mid: i128 = if even {
        (m + 1..t).map(|k| c(k, m) * h[k]).sum()
    } else {
        0
    };
    put("eq27", when(quarter, || holds(2 * h[m] + above_mid == 0)));

    put(
        "weighted_h_sum",
        when(t >= 2, || {
            if even {
                holds(h[t] == 0 && (2..t).map(|k| k as i128 * h[k]).sum::<i128>() == 0)
            } else {
                holds((2..=t).map(|k| k as i128 * h[k]).sum::<i128>() == 0)
            }
        }),
    );

    let central = if even { c(t, m) } else { 0 };
    put("eq29", when(even, || holds(2 * fk[m] == central)));

    let below_mid: i128 = if even {
        (0..m).map(|k| c(t - k, m) * h[k]).sum()
    } else {
        0
    };
    put(
        "eq9",
        when(even, || {
            let full: i128 = (0..=m).map(|k| c(t - k, m) * h[k]).sum();
            holds(full == fk[m] && 2 * (h[m] + below_mid) == central)
        }),
    );
    put(
        "eq9_via_eq14",
        when(even, || {
            let s: i128 = (0..=m).map(|j| c(t - j, m) * h[j]).sum();
            holds(central - s == fk[m] && 2 * s == central)
        }),
    );
    put(
        "eq27_eq9",
        when(quarter, || {
            // 2A - B = C(t, t/2) and 4 h_(t/2) = C(t, t/2) - 2A - B.
            holds(2 * below_mid - above_mid == central && 4 * h[m] == central - 2 * below_mid - above_mid)
        }),
    );

    Ok(AppendixReport { t: t as u32, checks })
}

/// Summary of a seeded batch of random star-self-dual families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub t: u32,
    pub n: u64,
    pub seed: u64,
    pub passed: u64,
    /// `(family index, check name, offending index)` for each failure.
    pub failures: Vec<(u64, &'static str, Option<usize>)>,
}

/// Checks `n` random families; family `i` is drawn from stream `i` of `seed`.
pub fn sweep_random(t: u32, n: u64, seed: u64) -> Result<SweepSummary> {
    let reports: Vec<AppendixReport> = (0..n)
        .into_par_iter()
        .map(|i| check_appendix(&random_star_selfdual_stream(t, seed, i)?))
        .collect::<Result<_>>()?;
    let mut failures = Vec::new();
    let mut passed = 0;
    for (i, r) in reports.iter().enumerate() {
        if r.passed() {
            passed += 1;
        }
        failures.extend(r.failures().into_iter().map(|(name, idx)| (i as u64, name, idx)));
    }
    Ok(SweepSummary {
        t,
        n,
        seed,
        passed,
        failures,
    })
}
