//! Shortest-cycle search on the Tanner graph of a binary matrix.

use super::{Girth, GirthReport, Witness};
use crate::error::Result;
use crate::exponent::ExponentMatrix;
use crate::matrix::{IntMatrix, SparseBinary};
use rayon::prelude::*;
use std::sync::atomic::{AtomicUsize, Ordering};

const UNSEEN: u32 = u32::MAX;

/// Tanner graph in CSR form; check nodes come first.
pub struct Tanner {
    checks: usize,
    offsets: Vec<usize>,
    adj: Vec<u32>,
}

impl Tanner {
    pub fn new(h: &SparseBinary) -> Self {
        let m = h.rows();
        let cols = h.col_lists();
        let mut offsets = Vec::with_capacity(m + h.cols() + 1);
        let mut adj = Vec::with_capacity(2 * h.nnz());
        offsets.push(0);
        for r in 0..m {
            adj.extend(h.row(r).iter().map(|&c| (m + c) as u32));
            offsets.push(adj.len());
        }
        for col in &cols {
            adj.extend(col.iter().map(|&r| r as u32));
            offsets.push(adj.len());
        }
        Tanner { checks: m, offsets, adj }
    }

    pub fn nodes(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn checks(&self) -> usize {
        self.checks
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Shortest closed walk through `root` found by BFS, if shorter than `limit`.
    /// Returns (length, u, w) for the closing edge u-w.
    fn search(&self, root: usize, limit: usize, dist: &mut [u32], parent: &mut [u32], queue: &mut Vec<u32>) -> Option<(usize, u32, u32)> {
        queue.clear();
        dist[root] = 0;
        parent[root] = UNSEEN;
        queue.push(root as u32);
        let mut best: Option<(usize, u32, u32)> = None;
        let mut bound = limit;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u as usize] as usize;
            if 2 * du >= bound {
                break;
            }
            for &w in self.neighbors(u as usize) {
                if w == parent[u as usize] {
                    continue;
                }
                if dist[w as usize] == UNSEEN {
                    dist[w as usize] = du as u32 + 1;
                    parent[w as usize] = u;
                    queue.push(w);
                } else {
                    let len = du + dist[w as usize] as usize + 1;
                    if len < bound {
                        bound = len;
                        best = Some((len, u, w));
                    }
                }
            }
        }
        for &v in queue.iter() {
            dist[v as usize] = UNSEEN;
        }
        best
    }

    fn path_to_root(&self, mut v: u32, parent: &[u32]) -> Vec<usize> {
        let mut p = vec![v as usize];
        while parent[v as usize] != UNSEEN {
            v = parent[v as usize];
            p.push(v as usize);
        }
        p
    }

    fn witness_from(&self, root: usize, limit: usize) -> Option<Vec<usize>> {
        let n = self.nodes();
        let (mut dist, mut parent, mut queue) = (vec![UNSEEN; n], vec![UNSEEN; n], Vec::new());
        let (_, u, w) = self.search(root, limit, &mut dist, &mut parent, &mut queue)?;
        // parent pointers survive the distance reset
        let mut cycle = self.path_to_root(u, &parent);
        cycle.reverse();
        let back = self.path_to_root(w, &parent);
        cycle.extend(&back[..back.len() - 1]);
        Some(cycle)
    }

    /// Exact girth, searching only for cycles shorter than `cap + 1` when a cap is given.
    pub fn girth(&self, cap: Option<usize>) -> (Girth, Option<Vec<usize>>) {
        let n = self.nodes();
        let limit = cap.map_or(usize::MAX, |c| c + 1);
        let best = AtomicUsize::new(limit);
        (0..self.checks).into_par_iter().for_each_init(
            || (vec![UNSEEN; n], vec![UNSEEN; n], Vec::new()),
            |(dist, parent, queue), root| {
                let bound = best.load(Ordering::Relaxed);
                if let Some((len, _, _)) = self.search(root, bound, dist, parent, queue) {
                    best.fetch_min(len, Ordering::Relaxed);
                }
            },
        );
        let g = best.into_inner();
        if g == limit {
            return (cap.map_or(Girth::Infinite, Girth::Exceeds), None);
        }
        // deterministic witness: first root that reaches the minimum
        let cycle = (0..self.checks).find_map(|root| {
            self.witness_from(root, g + 1).filter(|c| c.len() == g)
        });
        (Girth::Finite(g), cycle)
    }
}

/// Exact girth of the Tanner graph of `h` (BFS from every check node).
pub fn girth_bfs_oracle(h: &SparseBinary) -> GirthReport {
    girth_bfs_capped(h, None)
}

pub fn girth_bfs_capped(h: &SparseBinary, cap: Option<usize>) -> GirthReport {
    let t = Tanner::new(h);
    let (girth, cycle) = t.girth(cap);
    GirthReport {
        girth,
        method: "bfs".into(),
        witness: cycle.map(|nodes| Witness::Cycle { checks: t.checks(), nodes }),
    }
}

/// Oracle girth of a bound exponent matrix; a lift with parallel edges has girth 2.
pub fn girth_of_exponents(e: &ExponentMatrix, cap: Option<usize>) -> Result<GirthReport> {
    let block = e.to_block()?;
    if block.max_coeff() >= 2 {
        return Ok(GirthReport { girth: Girth::Finite(2), method: "bfs".into(), witness: None });
    }
    Ok(girth_bfs_capped(&block.expand()?, cap))
}

/// Girth of an integer matrix read as a bipartite multigraph.
pub fn girth_of_int(m: &IntMatrix) -> Result<GirthReport> {
    if m.max_entry() >= 2 {
        return Ok(GirthReport { girth: Girth::Finite(2), method: "bfs".into(), witness: None });
    }
    Ok(girth_bfs_oracle(&m.to_sparse_binary()?))
}
