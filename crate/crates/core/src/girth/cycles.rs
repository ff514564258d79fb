//! Shift sums of closed walks in the protograph.
//!
//! A walk check i_0 -> var j_0 -> check i_1 -> ... -> check i_0 that never
//! reuses an edge on consecutive steps (cyclically) lifts to a cycle-bearing
//! closed walk exactly when its alternating shift sum vanishes mod N.

use super::{Girth, GirthReport, Witness};
use crate::error::Result;
use crate::exponent::ExponentMatrix;
use std::collections::BTreeSet;

/// One protograph edge: (row, col, shift).
pub type Edge = (usize, usize, i64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSum {
    pub len: usize,
    pub sum: i64,
    pub walk: Vec<Edge>,
}

struct Graph {
    edges: Vec<Edge>,
    by_row: Vec<Vec<usize>>,
    by_col: Vec<Vec<usize>>,
}

impl Graph {
    fn new(e: &ExponentMatrix) -> Self {
        let mut edges = Vec::new();
        let mut by_row = vec![Vec::new(); e.rows()];
        let mut by_col = vec![Vec::new(); e.cols()];
        for r in 0..e.rows() {
            for c in 0..e.cols() {
                for &s in e.get(r, c).exps() {
                    by_row[r].push(edges.len());
                    by_col[c].push(edges.len());
                    edges.push((r, c, s));
                }
            }
        }
        Graph { edges, by_row, by_col }
    }
}

/// Visit every non-backtracking closed walk of length exactly `len` (even).
/// The callback receives the edge ids and the alternating sum; returning
/// `false` stops the enumeration.
fn for_each_walk(g: &Graph, len: usize, f: &mut dyn FnMut(&[usize], i64) -> bool) {
    fn step(g: &Graph, len: usize, walk: &mut Vec<usize>, sum: i64, f: &mut dyn FnMut(&[usize], i64) -> bool) -> bool {
        let k = walk.len();
        let last = *walk.last().expect("walk starts with an edge");
        let (r0, _, _) = g.edges[walk[0]];
        let (lr, lc, _) = g.edges[last];
        if k % 2 == 1 {
            // at variable lc, return to a check
            let closing = k + 1 == len;
            for &e in &g.by_col[lc] {
                if e == last || (closing && (e == walk[0] || g.edges[e].0 != r0)) {
                    continue;
                }
                let s = sum - g.edges[e].2;
                walk.push(e);
                let go = if closing { f(walk, s) } else { step(g, len, walk, s, f) };
                walk.pop();
                if !go {
                    return false;
                }
            }
        } else {
            let _ = lc;
            for &e in &g.by_row[lr] {
                if e == last {
                    continue;
                }
                walk.push(e);
                let go = step(g, len, walk, sum + g.edges[e].2, f);
                walk.pop();
                if !go {
                    return false;
                }
            }
        }
        true
    }
    let mut walk = Vec::with_capacity(len);
    for e0 in 0..g.edges.len() {
        walk.push(e0);
        let go = step(g, len, &mut walk, g.edges[e0].2, f);
        walk.pop();
        if !go {
            return;
        }
    }
}

/// Smallest representative over even rotations and reversal.
fn canonical(walk: &[usize]) -> Vec<usize> {
    let n = walk.len();
    let mut best: Option<Vec<usize>> = None;
    let rev: Vec<usize> = walk.iter().rev().copied().collect();
    for seq in [walk, &rev[..]] {
        for shift in (0..n).step_by(2) {
            let cand: Vec<usize> = (0..n).map(|i| seq[(i + shift) % n]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("non-empty walk")
}

/// Distinct closed walks (up to rotation and reversal) of length <= `max_len`,
/// with their sums over Z of the stored shifts.
pub fn cycle_sums(e: &ExponentMatrix, max_len: usize) -> Vec<CycleSum> {
    let g = Graph::new(e);
    let mut out = Vec::new();
    for len in (2..=max_len).step_by(2) {
        let mut seen = BTreeSet::new();
        for_each_walk(&g, len, &mut |walk, sum| {
            let c = canonical(walk);
            if c == walk && seen.insert(c) {
                out.push(CycleSum { len, sum, walk: walk.iter().map(|&i| g.edges[i]).collect() });
            }
            true
        });
    }
    out
}

/// Absolute values of all walk sums of length < `girth`, and whether some sum is 0 over Z.
pub fn sum_magnitudes(e: &ExponentMatrix, below: usize) -> (BTreeSet<u64>, Option<CycleSum>) {
    let g = Graph::new(e);
    let mut mags = BTreeSet::new();
    let mut zero = None;
    for len in (2..below).step_by(2) {
        for_each_walk(&g, len, &mut |walk, sum| {
            if sum == 0 {
                if zero.is_none() {
                    zero = Some(CycleSum { len, sum, walk: walk.iter().map(|&i| g.edges[i]).collect() });
                }
            } else {
                mags.insert(sum.unsigned_abs());
            }
            true
        });
    }
    (mags, zero)
}

/// Girth as the smallest walk length with a sum divisible by N, searching up to `cap`.
pub fn girth_via_cycle_sums(e: &ExponentMatrix, cap: usize) -> Result<GirthReport> {
    let n = e.require_n()? as i64;
    let g = Graph::new(e);
    for len in (2..=cap).step_by(2) {
        let mut hit = None;
        for_each_walk(&g, len, &mut |walk, sum| {
            if sum.rem_euclid(n) == 0 {
                hit = Some((walk.iter().map(|&i| g.edges[i]).collect::<Vec<_>>(), sum));
                false
            } else {
                true
            }
        });
        if let Some((edges, sum)) = hit {
            return Ok(GirthReport {
                girth: Girth::Finite(len),
                method: "cycles".into(),
                witness: Some(Witness::Walk { edges, sum }),
            });
        }
    }
    Ok(GirthReport { girth: Girth::Exceeds(cap), method: "cycles".into(), witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Entry;

    #[test]
    fn two_by_two_sums() {
        let e = ExponentMatrix::from_rows(&[vec![0, 0], vec![0, 3]]);
        let sums = cycle_sums(&e, 4);
        assert_eq!(sums.len(), 1);
        assert_eq!(sums[0].sum.abs(), 3);
    }

    #[test]
    fn parallel_edges_form_two_walks() {
        let e = ExponentMatrix::new(vec![vec![Entry::shifts(vec![0, 5])]]).unwrap();
        let sums = cycle_sums(&e, 2);
        assert_eq!(sums.len(), 1);
        assert_eq!(sums[0].sum.abs(), 5);
        let b = e.bind(7).unwrap();
        assert_eq!(girth_via_cycle_sums(&b, 14).unwrap().girth, Girth::Finite(14));
        assert_eq!(girth_via_cycle_sums(&b, 12).unwrap().girth, Girth::Exceeds(12));
    }

    #[test]
    fn doubled_walk_detected() {
        // 2 (i_2 - i_1) = 0 mod 4 closes an 8-cycle
        let e = ExponentMatrix::from_rows(&[vec![0, 0], vec![0, 2]]).bind(4).unwrap();
        assert_eq!(girth_via_cycle_sums(&e, 12).unwrap().girth, Girth::Finite(8));
    }
}
