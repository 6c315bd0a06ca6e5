#![allow(dead_code)]

use clutter_core::{Clutter, GroundSet, SetFamily};

/// Every antichain of `2^[t]` by plain backtracking; only for tiny `t`.
pub fn all_antichains(t: u32) -> Vec<Clutter> {
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

pub fn fam(t: u32, sets: &[&[u32]]) -> SetFamily {
    let g = GroundSet::new(t).unwrap();
    SetFamily::from_subsets(g, sets.iter().map(|s| g.subset(s.iter().copied()).unwrap())).unwrap()
}

pub fn clutter(t: u32, sets: &[&[u32]]) -> Clutter {
    Clutter::new(fam(t, sets)).unwrap()
}

/// Applies a permutation of `0..t` (bit positions) to a mask.
pub fn permute(mask: u64, perm: &[u32]) -> u64 {
    perm.iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .fold(0, |acc, (_, &p)| acc | 1 << p)
}

pub fn permutations(t: u32) -> Vec<Vec<u32>> {
    fn go(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..t).collect(), &mut Vec::new(), &mut out);
    out
}
