//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use clutter_core::binom::binom;
use clutter_core::complexes::down_closure;
use clutter_core::enumerate::{complex_of, enumerate_self_dual};
use clutter_core::identities::{check_appendix, sweep_random, StarSelfDualFamily};
use clutter_core::kks::{cascade, shadow_lower_bound, verify_lemma2, verify_theorem3};
use clutter_core::vectors::{check_star_relations, f_from_h, f_vector, h_from_f};
use clutter_core::{
    blocker, is_self_dual, min_elements, self_dual_criterion, star, up_closure, Clutter, GroundSet, SetFamily,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Name, file contents, extra flags, expected f, expected h.
type Golden = (
    &'static str,
    &'static str,
    &'static [&'static str],
    &'static [i64],
    &'static [i64],
);
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn clutter(t: u32, sets: &[&[u32]]) -> Clutter {
    Clutter::from_sets(GroundSet::new(t).unwrap(), sets).unwrap()
}

fn run_cli(args: &[&str], file: &Path) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_clutter"))
        .args(args)
        .arg(file)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "{args:?} exited with {}", out.status);
    Ok(String::from_utf8(out.stdout)
        .map_err(|e| e.to_string())?
        .trim()
        .to_string())
}

fn vector(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn golden_vectors() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cases: [Golden; 9] = [
        (
            "i_a",
            "t: 3\n{1,2}\n{1,3}\n{2,3}\n",
            &["--upset"],
            &[0, 0, 3, 1],
            &[0, 0, 3, -2],
        ),
        (
            "i_b",
            "t: 4\n{1,2}\n{1,3}\n{2,3}\n",
            &["--upset"],
            &[0, 0, 3, 4, 1],
            &[0, 0, 3, -2, 0],
        ),
        ("ii_a", "t: 3\n{2}\n", &["--upset"], &[0, 1, 2, 1], &[0, 1, 0, 0]),
        ("ii_b", "t: 4\n{2}\n", &["--upset"], &[0, 1, 3, 3, 1], &[0, 1, 0, 0, 0]),
        (
            "iii",
            "t: 5\n{1,2,3,4}\n{1,5}\n{2,5}\n{3,5}\n{4,5}\n",
            &["--upset"],
            &[0, 0, 4, 6, 5, 1],
            &[0, 0, 4, -6, 5, -2],
        ),
        (
            "complex_i",
            "t: 4\nclosure: down\n{1,2}\n{1,3}\n{2,3}\n{4}\n",
            &[],
            &[1, 4, 3, 0, 0],
            &[1, 0, -3, 2, 0],
        ),
        (
            "complex_ii",
            "t: 4\nclosure: down\n{2,3,4}\n",
            &[],
            &[1, 3, 3, 1, 0],
            &[1, -1, 0, 0, 0],
        ),
        (
            "simplex_t4",
            "t: 4\nclosure: down\n{1,2,3}\n",
            &[],
            &[1, 3, 3, 1, 0],
            &[1, -1, 0, 0, 0],
        ),
        (
            "simplex_t6",
            "t: 6\nclosure: down\n{1,2,3,4,5}\n",
            &[],
            &[1, 5, 10, 10, 5, 1, 0],
            &[1, -1, 0, 0, 0, 0, 0],
        ),
    ];
    for (name, text, flags, f, h) in cases {
        let path = dir.path().join(format!("{name}.txt"));
        std::fs::write(&path, text).map_err(|e| e.to_string())?;
        let mut args = vec!["fvector"];
        args.extend_from_slice(flags);
        let got_f = run_cli(&args, &path)?;
        ensure!(got_f == vector(f), "{name}: f = {got_f}, expected {}", vector(f));
        args[0] = "hvector";
        let got_h = run_cli(&args, &path)?;
        ensure!(got_h == vector(h), "{name}: h = {got_h}, expected {}", vector(h));
    }
    Ok("9/9 f/h pairs reproduced by the CLI".into())
}

fn self_dual_certification() -> Outcome {
    let examples = [
        clutter(3, &[&[1, 2], &[1, 3], &[2, 3]]),
        clutter(3, &[&[2]]),
        clutter(5, &[&[1, 2, 3, 4], &[1, 5], &[2, 5], &[3, 5], &[4, 5]]),
    ];
    for a in &examples {
        let sd = blocker(a) == *a;
        let count = up_closure(a).count().map_err(|e| e.to_string())? == 1 << (a.t() - 1);
        ensure!(sd && count, "{a}: B(A)=A {sd}, count {count}");
        ensure!(
            is_self_dual(a) == Ok(true) && self_dual_criterion(a) == Ok(true),
            "{a}: checks disagree"
        );
    }
    Ok("3/3 clutters certified by both checks".into())
}

fn all_antichains(t: u32) -> Vec<Clutter> {
    fn go(n: u64, start: u64, chosen: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(chosen.clone());
        for c in start..n {
            if chosen.iter().all(|&s| s & !c != 0 && c & !s != 0) {
                chosen.push(c);
                go(n, c + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let g = GroundSet::new(t).unwrap();
    let mut out = Vec::new();
    go(1 << t, 0, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|m| Clutter::new(SetFamily::new(g, m).unwrap()).unwrap())
        .collect()
}

fn blocker_laws_hold(a: &Clutter) -> Result<(), String> {
    let b = blocker(a);
    ensure!(blocker(&b) == *a, "B(B(A)) != A for {a}");
    let lhs = up_closure(&b).members().map_err(|e| e.to_string())?;
    let rhs = star(&up_closure(a).members().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure!(lhs == rhs, "B(A)^▽ != (A^▽)* for {a}");
    Ok(())
}

fn blocker_laws() -> Outcome {
    let mut exhaustive = 0;
    for t in 1..=4 {
        for a in all_antichains(t).into_iter().filter(Clutter::is_nontrivial) {
            blocker_laws_hold(&a)?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut random = 0;
    while random < 10_000 {
        let t = rng.random_range(5..=10u32);
        let full = (1u64 << t) - 1;
        let n = rng.random_range(1..=12);
        let masks: Vec<u64> = (0..n).map(|_| rng.random::<u64>() & full).collect();
        let a = min_elements(&SetFamily::new(GroundSet::new(t).unwrap(), masks).unwrap());
        if !a.is_nontrivial() {
            continue;
        }
        blocker_laws_hold(&a)?;
        random += 1;
    }
    Ok(format!(
        "{exhaustive} exhaustive (t <= 4) + {random} random (5 <= t <= 10) clutters"
    ))
}

fn transforms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..10_000 {
        let t = rng.random_range(1..=12u32);
        let full = (1u64 << t) - 1;
        let density: f64 = rng.random();
        let masks: Vec<u64> = (0..=full).filter(|_| rng.random_bool(density)).collect();
        let f = SetFamily::new(GroundSet::new(t).unwrap(), masks).unwrap();
        let fv = f_vector(&f);
        let back = f_from_h(&h_from_f(&fv).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(back == fv, "family {i}: roundtrip changed {:?}", fv.counts());
        let rel = check_star_relations(&f).map_err(|e| e.to_string())?;
        ensure!(rel["eq19"] && rel["star_count"], "family {i}: {rel:?}");
    }
    Ok("10000 random families (t <= 12): roundtrip, h(F*) relation, #F* + #F = 2^t".into())
}

fn theorem3_at_scale() -> Outcome {
    let mut summary = Vec::new();
    for (t, expected) in [(4u32, 12usize), (6, 2646)] {
        let all = enumerate_self_dual(t).map_err(|e| e.to_string())?.clutters;
        ensure!(
            all.len() == expected,
            "t={t}: {} clutters, expected {expected}",
            all.len()
        );
        for a in &all {
            let r = verify_theorem3(a).map_err(|e| e.to_string())?;
            ensure!(r.violations() == 0, "t={t} {a}: {} violations", r.violations());
        }
        for e in 1..=t {
            let r = verify_theorem3(&clutter(t, &[&[e]])).map_err(|e| e.to_string())?;
            ensure!(r.passed && r.all_tight(), "t={t}: {{{{{e}}}}}^▽ not tight");
        }
        summary.push(format!("{expected}/{expected} at t={t}"));
    }
    Ok(format!("{}; principal witnesses tight", summary.join(", ")))
}

fn lemma2_at_scale() -> Outcome {
    let mut summary = Vec::new();
    for (t, expected) in [(4u32, 12usize), (6, 2646)] {
        let all = enumerate_self_dual(t).map_err(|e| e.to_string())?.clutters;
        let mut ok = 0;
        for a in &all {
            let c = complex_of(a).map_err(|e| e.to_string())?;
            let r = verify_lemma2(&c).map_err(|e| e.to_string())?;
            ensure!(r.passed, "t={t}: image of {a} fails");
            ok += 1;
        }
        ensure!(ok == expected, "t={t}: {ok} complexes");
        summary.push(format!("{ok}/{expected} at t={t}"));
    }
    for t in [4u32, 6, 8] {
        let g = GroundSet::new(t).unwrap();
        for a in 1..=t {
            let facet = g.subset((1..=t).filter(|&e| e != a)).unwrap();
            let simplex = down_closure(&SetFamily::from_subsets(g, [facet]).unwrap()).map_err(|e| e.to_string())?;
            let r = verify_lemma2(&simplex).map_err(|e| e.to_string())?;
            ensure!(r.passed && r.all_tight(), "t={t}: simplex without {a} not tight");
        }
    }
    Ok(format!(
        "{}; simplex witnesses tight at t = 4, 6, 8",
        summary.join(", ")
    ))
}

fn appendix_suite() -> Outcome {
    for t in [3u32, 4, 5, 6, 8] {
        let s = sweep_random(t, 1000, 2024).map_err(|e| e.to_string())?;
        ensure!(
            s.passed == 1000,
            "t={t}: {} passed, first failures {:?}",
            s.passed,
            &s.failures[..s.failures.len().min(3)]
        );
    }
    let all = enumerate_self_dual(5).map_err(|e| e.to_string())?.clutters;
    ensure!(all.len() == 81, "t=5: {} clutters", all.len());
    for a in &all {
        let up = up_closure(a).members().map_err(|e| e.to_string())?;
        let f = StarSelfDualFamily::new(up).map_err(|e| e.to_string())?;
        let r = check_appendix(&f).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{a}: {:?}", r.failures());
    }
    Ok("1000 random families at each t in {3,4,5,6,8}; 81/81 enumerated at t=5".into())
}

fn shadow(sets: &[u64]) -> usize {
    let mut s: Vec<u64> = sets
        .iter()
        .flat_map(|&x| (0..7).filter(move |b| x >> b & 1 == 1).map(move |b| x & !(1u64 << b)))
        .collect();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Minimum shadow over all `m`-subsets of `sets`, in lexicographic order.
fn min_shadow_exhaustive(sets: &[u64], m: usize) -> usize {
    let n = sets.len();
    let mut idx: Vec<usize> = (0..m).collect();
    let mut best = usize::MAX;
    let mut chosen = vec![0u64; m];
    loop {
        for (c, &i) in chosen.iter_mut().zip(&idx) {
            *c = sets[i];
        }
        best = best.min(shadow(&chosen));
        let mut i = m;
        while i > 0 && idx[i - 1] == n - m + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return best;
        }
        idx[i - 1] += 1;
        for j in i..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn choose_u128(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn kks_sanity() -> Outcome {
    for k in 2..=10u32 {
        for m in 0..=100_000u64 {
            let c = cascade(m, k).map_err(|e| e.to_string())?;
            ensure!(c.value() == m as u128, "cascade({m}, {k}) sums to {}", c.value());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut exhaustive, mut sampled) = (0, 0);
    for k in 1..=7u32 {
        let sets: Vec<u64> = (0..1u64 << 7).filter(|s| s.count_ones() == k).collect();
        let n = sets.len();
        ensure!(n as i64 == binom(7, k as usize), "k={k}");
        for m in 1..=n {
            let bound = shadow_lower_bound(m as u64, k).map_err(|e| e.to_string())? as usize;
            if choose_u128(n, m) <= 100_000 {
                let best = min_shadow_exhaustive(&sets, m);
                ensure!(bound <= best, "k={k} m={m}: bound {bound} > minimum {best}");
                ensure!(bound == best, "k={k} m={m}: bound {bound} not attained ({best})");
                exhaustive += 1;
            } else {
                let mut pool = sets.clone();
                for _ in 0..200 {
                    for i in 0..m {
                        let j = rng.random_range(i..n);
                        pool.swap(i, j);
                    }
                    let s = shadow(&pool[..m]);
                    ensure!(bound <= s, "k={k} m={m}: bound {bound} > sampled shadow {s}");
                }
                ensure!(
                    shadow(&sets[..m]) == bound,
                    "k={k} m={m}: colex prefix misses the bound"
                );
                sampled += 1;
            }
        }
    }
    Ok(format!(
        "cascade roundtrip for m <= 100000, k = 2..10; shadow bound on 7 points: {exhaustive} (k, m) exhaustive, {sampled} sampled"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("golden f/h vectors", golden_vectors),
        ("self-duality certification", self_dual_certification),
        ("blocker laws", blocker_laws),
        ("f/h transforms", transforms),
        ("up-family bounds at scale", theorem3_at_scale),
        ("complex bounds at scale", lemma2_at_scale),
        ("appendix identities", appendix_suite),
        ("KKS sanity", kks_sanity),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
