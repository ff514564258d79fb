//! Exact minimum distance of small binary codes by nullspace enumeration.

use crate::matrix::SparseBinary;
use rayon::prelude::*;

pub const DEFAULT_MAX_DIM: usize = 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distance {
    /// Minimum weight over all non-zero codewords, with one such codeword.
    Exact { d: usize, k: usize, codeword: Vec<usize> },
    /// The code has only the zero codeword.
    Trivial,
    Infeasible { k: usize },
}

type Row = Vec<u64>;

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn get(r: &Row, i: usize) -> bool {
    r[i / 64] >> (i % 64) & 1 == 1
}

fn flip(r: &mut Row, i: usize) {
    r[i / 64] ^= 1 << (i % 64);
}

fn xor(a: &mut Row, b: &Row) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

fn weight(r: &Row) -> usize {
    r.iter().map(|w| w.count_ones() as usize).sum()
}

/// Basis of {x : H x = 0} over GF(2).
pub fn nullspace(h: &SparseBinary) -> Vec<Row> {
    let n = h.cols();
    let w = words(n);
    let mut rows: Vec<Row> = (0..h.rows())
        .map(|r| {
            let mut v = vec![0u64; w];
            for &c in h.row(r) {
                flip(&mut v, c);
            }
            v
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| get(&rows[r], col)) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && get(row, col) {
                xor(row, &pivot);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u64; w];
            flip(&mut v, f);
            for (r, &pc) in pivots.iter().enumerate() {
                if get(&rows[r], f) {
                    flip(&mut v, pc);
                }
            }
            v
        })
        .collect()
}

/// Minimum distance of the code with parity-check matrix `h`, enumerating
/// all 2^k - 1 non-zero codewords when k <= `max_dim`.
pub fn min_distance(h: &SparseBinary, max_dim: usize) -> Distance {
    let basis = nullspace(h);
    let k = basis.len();
    if k == 0 {
        return Distance::Trivial;
    }
    if k > max_dim {
        return Distance::Infeasible { k };
    }
    let w = words(h.cols());
    let high = k.min(8);
    let low = k - high;
    let best = (0u64..1 << high)
        .into_par_iter()
        .map(|chunk| {
            let mut cur = vec![0u64; w];
            for b in 0..high {
                if chunk >> b & 1 == 1 {
                    xor(&mut cur, &basis[low + b]);
                }
            }
            let mut best: Option<(usize, u64, u64)> = None;
            let mut consider = |cur: &Row, step: u64| {
                let wt = weight(cur);
                if wt > 0 && best.map_or(true, |b| wt < b.0) {
                    best = Some((wt, chunk, step));
                }
            };
            consider(&cur, 0);
            for step in 1u64..1 << low {
                xor(&mut cur, &basis[step.trailing_zeros() as usize]);
                consider(&cur, step);
            }
            best
        })
        .flatten()
        .min()
        .expect("k > 0 gives a non-zero codeword");
    let (d, chunk, step) = best;
    let gray = step ^ (step >> 1);
    let mut cw = vec![0u64; w];
    for b in 0..low {
        if gray >> b & 1 == 1 {
            xor(&mut cw, &basis[b]);
        }
    }
    for b in 0..high {
        if chunk >> b & 1 == 1 {
            xor(&mut cw, &basis[low + b]);
        }
    }
    let codeword = (0..h.cols()).filter(|&i| get(&cw, i)).collect();
    Distance::Exact { d, k, codeword }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::ExponentMatrix;

    #[test]
    fn hamming_7_4() {
        let h = SparseBinary::from_row_lists(7, vec![vec![0, 2, 4, 6], vec![1, 2, 5, 6], vec![3, 4, 5, 6]]);
        match min_distance(&h, 28) {
            Distance::Exact { d, k, codeword } => {
                assert_eq!((d, k), (3, 4));
                assert_eq!(codeword.len(), 3);
            }
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn circulant_simplex() {
        let e = ExponentMatrix::new(vec![vec![crate::exponent::Entry::shifts(vec![0, 1, 3])]]).unwrap();
        let h = e.bind(7).unwrap().to_block().unwrap().expand().unwrap();
        assert!(matches!(min_distance(&h, 28), Distance::Exact { d: 4, k: 3, .. }));
        assert_eq!(min_distance(&h, 2), Distance::Infeasible { k: 3 });
    }
}
