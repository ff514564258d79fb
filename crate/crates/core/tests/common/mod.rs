//! Shared test code: a girth oracle written directly on the expanded graph, and
//! invariant checks callable from proptest or from seeded loops.
#![allow(dead_code)]

use qcgirth::block::compute_ch;
use qcgirth::girth::bt::{girth_via_bt, BtForm};
use qcgirth::girth::conditions::{check_conditions_with, ConditionSystem};
use qcgirth::girth::relation::{girth_of_c_relation, girth_of_ch};
use qcgirth::girth::symbolic::Reading;
use qcgirth::girth::Girth;
use qcgirth::matrix::{triangle, IntMatrix};
use qcgirth::prelift::matrix_prelift;
use qcgirth::ExponentMatrix;
use rand::Rng;
use std::collections::{BTreeSet, VecDeque};

/// Ones of the expansion as (row, col), straight from the shifts.
pub fn ones(e: &ExponentMatrix) -> BTreeSet<(usize, usize)> {
    let n = e.n().expect("bound matrix");
    let mut out = BTreeSet::new();
    for r in 0..e.rows() {
        for c in 0..e.cols() {
            for &s in e.get(r, c).exps() {
                for i in 0..n {
                    out.insert((r * n + i, c * n + (i as i64 + s).rem_euclid(n as i64) as usize));
                }
            }
        }
    }
    out
}

/// Shortest cycle through any of `sources`; None for a forest.
fn shortest_cycle(adj: &[Vec<usize>], sources: &[usize]) -> Option<usize> {
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; adj.len()];
    let mut parent = vec![usize::MAX; adj.len()];
    for &s in sources {
        let mut seen = vec![s];
        let mut q = VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = q.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    seen.push(w);
                    q.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
        for v in seen {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Girth of the Tanner graph of a bound exponent matrix. Every circulant
/// shift is a graph automorphism, so one source per block row and block
/// column covers all cycles.
pub fn oracle_girth(e: &ExponentMatrix) -> Option<usize> {
    let n = e.n().expect("bound matrix");
    let m = e.rows() * n;
    let mut adj = vec![Vec::new(); m + e.cols() * n];
    for (r, c) in ones(e) {
        adj[r].push(m + c);
        adj[m + c].push(r);
    }
    let sources: Vec<usize> = (0..e.rows()).map(|r| r * n).chain((0..e.cols()).map(|c| m + c * n)).collect();
    shortest_cycle(&adj, &sources)
}

/// Girth of the Tanner graph of a dense non-negative matrix; an entry >= 2 is a 2-cycle.
pub fn dense_girth(a: &[Vec<u64>]) -> Option<usize> {
    if a.iter().flatten().any(|&x| x >= 2) {
        return Some(2);
    }
    let m = a.len();
    let k = a.first().map_or(0, |r| r.len());
    let mut adj = vec![Vec::new(); m + k];
    for (r, row) in a.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            if x == 1 {
                adj[r].push(m + c);
                adj[m + c].push(r);
            }
        }
    }
    let all: Vec<usize> = (0..m + k).collect();
    shortest_cycle(&adj, &all)
}

pub fn as_girth(g: Option<usize>) -> Girth {
    g.map_or(Girth::Infinite, Girth::Finite)
}

pub fn random_bound<R: Rng>(rng: &mut R, rows: (usize, usize), cols: (usize, usize), n: (usize, usize)) -> ExponentMatrix {
    let r = rng.gen_range(rows.0..=rows.1);
    let c = rng.gen_range(cols.0..=cols.1);
    let n = rng.gen_range(n.0..=n.1);
    let shifts: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(0..n as i64)).collect()).collect();
    ExponentMatrix::from_rows(&shifts).bind(n).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, m: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    for i in (1..m).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

pub type Check = Result<(), String>;

/// (A + B) triangle A == B triangle A, with the operator checked against its definition.
pub fn check_lemma1(a: &[Vec<u64>], b: &[Vec<u64>]) -> Check {
    let (ma, mb) = (IntMatrix::from_rows(a.to_vec()), IntMatrix::from_rows(b.to_vec()));
    let lhs = triangle(&ma.add(&mb).unwrap(), &ma).unwrap();
    let rhs = triangle(&mb, &ma).unwrap();
    if lhs != rhs {
        return Err(format!("(A+B) triangle A != B triangle A for A={:?} B={:?}", a, b));
    }
    for (r, row) in b.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            let want = u64::from(x >= 2 && a[r][c] == 0);
            if rhs.get(r, c) != want {
                return Err(format!("triangle entry ({}, {}) = {} for {} and {}", r, c, rhs.get(r, c), x, a[r][c]));
            }
        }
    }
    Ok(())
}

/// Both B_t forms agree with the graph oracle up to girth 24.
pub fn check_bt_vs_oracle(e: &ExponentMatrix) -> Check {
    let truth = as_girth(oracle_girth(e));
    let h = e.to_block().unwrap();
    for form in [BtForm::Power, BtForm::Raw] {
        let g = girth_via_bt(&h, 12, form).girth;
        if !g.agrees(&truth) {
            return Err(format!("{:?} gives {} but oracle {} for {:?}", form, g, truth, e));
        }
    }
    Ok(())
}

/// Every supported condition system passes exactly when the oracle girth reaches its target.
pub fn check_conditions_vs_oracle(e: &ExponentMatrix) -> Check {
    let truth = as_girth(oracle_girth(e));
    for g in [6, 8, 10, 12, 14] {
        if ConditionSystem::for_girth(e.rows(), e.cols(), g).is_err() {
            continue;
        }
        let pass = check_conditions_with(e, g, Reading::Triangle).unwrap().passed;
        if pass != truth.at_least(g) {
            return Err(format!("girth {} conditions {} but oracle {} for {:?}", g, pass, truth, e));
        }
    }
    Ok(())
}

/// girth([P_1 .. P_n; Q_1 .. Q_n]) = 2 girth(sum P_i Q_i^T) for permutation matrices.
pub fn check_two_row_relation(p: &[Vec<usize>], q: &[Vec<usize>]) -> Check {
    let m = p[0].len();
    let n = p.len();
    let mut h = vec![vec![0u64; n * m]; 2 * m];
    let mut c = vec![vec![0u64; m]; m];
    for i in 0..n {
        for k in 0..m {
            h[k][i * m + p[i][k]] = 1;
            h[m + k][i * m + q[i][k]] = 1;
        }
        // (P Q^T)[a][b] = sum_j P[a][j] Q[b][j]
        for a in 0..m {
            for b in 0..m {
                if p[i][a] == q[i][b] {
                    c[a][b] += 1;
                }
            }
        }
    }
    let (gh, gc) = (dense_girth(&h), dense_girth(&c));
    if gh != gc.map(|g| 2 * g) {
        return Err(format!("girth(H) = {:?}, girth(C) = {:?} for P={:?} Q={:?}", gh, gc, p, q));
    }
    Ok(())
}

/// The library's two-row relation on a circulant or pre-lifted 2-row matrix matches the oracle.
pub fn check_relation_library(e: &ExponentMatrix, group: usize) -> Check {
    let (gh, gc) = girth_of_c_relation(&e.to_block().unwrap(), group).map_err(|x| x.to_string())?;
    let truth = as_girth(oracle_girth(e));
    if !gh.girth.agrees(&truth) {
        return Err(format!("relation reports girth(H) {} but oracle {}", gh.girth, truth));
    }
    let doubled = match gc.girth {
        Girth::Finite(g) => Girth::Finite(2 * g),
        g => g,
    };
    if !doubled.agrees(&truth) {
        return Err(format!("girth(C) {} but oracle girth(H) {}", gc.girth, truth));
    }
    Ok(())
}

/// Expansion of the pre-lifted view, permuted by the stored maps, equals the original expansion.
pub fn check_prelift_equivalence(e: &ExponentMatrix, n1: usize) -> Check {
    let v = matrix_prelift(e, n1).map_err(|x| x.to_string())?;
    let moved: BTreeSet<(usize, usize)> = ones(&v.matrix).into_iter().map(|(r, c)| (v.row_perm[r], v.col_perm[c])).collect();
    if moved != ones(e) {
        return Err(format!("view of {:?} with N1 = {} is not a permutation of the original", e, n1));
    }
    if oracle_girth(&v.matrix) != oracle_girth(e) {
        return Err("view girth differs".into());
    }
    Ok(())
}

/// A circulant 2x3 all-one sub-protograph limits the girth to 12.
pub fn check_all_one_2x3(e: &ExponentMatrix) -> Check {
    let g = oracle_girth(e);
    if g.is_none_or(|g| g > 12) {
        return Err(format!("girth {:?} > 12 for {:?}", g, e));
    }
    Ok(())
}

/// HH^T with the diagonal removed, from the expansion.
pub fn ch_dense(e: &ExponentMatrix) -> Vec<Vec<u64>> {
    let m = e.rows() * e.n().unwrap();
    let mut rows = vec![Vec::new(); m];
    for (r, c) in ones(e) {
        rows[r].push(c);
    }
    let mut ch = vec![vec![0u64; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a != b {
                ch[a][b] = rows[a].iter().filter(|c| rows[b].contains(c)).count() as u64;
            }
        }
    }
    ch
}

/// girth(C_H) <= 6 for three block rows and <= 4 for four or more, by the oracle on HH^T - D.
pub fn check_ch_bound(e: &ExponentMatrix) -> Check {
    let ch = ch_dense(e);
    let bound = if e.rows() == 3 { 6 } else { 4 };
    let g = dense_girth(&ch);
    if g.is_none_or(|g| g > bound) {
        return Err(format!("girth(C_H) = {:?} above {} for {:?}", g, bound, e));
    }
    let lib = girth_of_ch(&e.to_block().unwrap()).girth;
    if lib != as_girth(g) {
        return Err(format!("library girth(C_H) {} vs oracle {:?}", lib, g));
    }
    let c = compute_ch(&e.to_block().unwrap()).expand_int();
    for (a, row) in ch.iter().enumerate() {
        if c.row(a) != row.as_slice() {
            return Err(format!("C_H row {} differs from HH^T - D", a));
        }
    }
    Ok(())
}
