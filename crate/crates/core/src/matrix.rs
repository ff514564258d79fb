//! Scalar matrices: dense non-negative integer matrices and sparse binary ones.

use crate::error::{QcError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(QcError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b != 0 {
                        let v = out.get(r, c) + a.checked_mul(b).expect("coefficient overflow");
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(QcError::Dimension("matrix sum".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn max_entry(&self) -> u64 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    pub fn to_sparse_binary(&self) -> Result<SparseBinary> {
        let mut adj = vec![Vec::new(); self.rows];
        for (r, row_adj) in adj.iter_mut().enumerate() {
            for c in 0..self.cols {
                match self.get(r, c) {
                    0 => {}
                    1 => row_adj.push(c),
                    coeff => return Err(QcError::NotBinary { row: r, col: c, coeff }),
                }
            }
        }
        Ok(SparseBinary::from_row_lists(self.cols, adj))
    }
}

/// The triangle operation: 1 where `e >= 2` and `f == 0`, 0 elsewhere.
pub fn triangle(e: &IntMatrix, f: &IntMatrix) -> Result<IntMatrix> {
    if (e.rows, e.cols) != (f.rows, f.cols) {
        return Err(QcError::Dimension("triangle operands".into()));
    }
    let data = e.data.iter().zip(&f.data).map(|(&a, &b)| u64::from(a >= 2 && b == 0)).collect();
    Ok(IntMatrix { rows: e.rows, cols: e.cols, data })
}

/// Binary matrix stored as sorted column lists per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseBinary {
    cols: usize,
    rows: Vec<Vec<usize>>,
}

impl SparseBinary {
    pub fn from_row_lists(cols: usize, mut rows: Vec<Vec<usize>>) -> Self {
        for r in &mut rows {
            r.sort_unstable();
            r.dedup();
            assert!(r.last().map_or(true, |&c| c < cols), "column out of range");
        }
        SparseBinary { cols, rows }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].binary_search(&c).is_ok()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row lists of the transpose.
    pub fn col_lists(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.cols];
        for (r, row) in self.rows.iter().enumerate() {
            for &c in row {
                cols[c].push(r);
            }
        }
        cols
    }

    pub fn transpose(&self) -> Self {
        SparseBinary::from_row_lists(self.rows(), self.col_lists())
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows(), self.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for &c in row {
                m.set(r, c, 1);
            }
        }
        m
    }

    /// Apply index maps: entry (r, c) moves to (row_map[r], col_map[c]).
    pub fn permuted(&self, row_map: &[usize], col_map: &[usize]) -> Self {
        let mut rows = vec![Vec::new(); self.rows()];
        for (r, row) in self.rows.iter().enumerate() {
            rows[row_map[r]] = row.iter().map(|&c| col_map[c]).collect();
        }
        SparseBinary::from_row_lists(self.cols, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_marks_unmatched_repeats() {
        let e = IntMatrix::from_rows(vec![vec![2, 1], vec![3, 0]]);
        let f = IntMatrix::from_rows(vec![vec![0, 0], vec![1, 0]]);
        let t = triangle(&e, &f).unwrap();
        assert_eq!(t, IntMatrix::from_rows(vec![vec![1, 0], vec![0, 0]]));
    }

    #[test]
    fn triangle_ignores_added_support() {
        // (A + B) triangle A == B triangle A
        let a = IntMatrix::from_rows(vec![vec![1, 0, 2], vec![0, 1, 0]]);
        let b = IntMatrix::from_rows(vec![vec![3, 2, 0], vec![0, 2, 1]]);
        let lhs = triangle(&a.add(&b).unwrap(), &a).unwrap();
        assert_eq!(lhs, triangle(&b, &a).unwrap());
    }

    #[test]
    fn product_dimensions_checked() {
        let a = IntMatrix::zeros(2, 3);
        assert!(a.mul(&a).is_err());
    }
}
