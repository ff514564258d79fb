//! Matrices of circulants, i.e. block matrices over Z>=0[x]/(x^N - 1).

use crate::circ::CircPoly;
use crate::error::{QcError, Result};
use crate::matrix::{IntMatrix, SparseBinary};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    n: usize,
    rows: usize,
    cols: usize,
    cells: Vec<CircPoly>,
}

impl BlockMatrix {
    pub fn zeros(rows: usize, cols: usize, n: usize) -> Self {
        BlockMatrix { n, rows, cols, cells: vec![CircPoly::zero(n); rows * cols] }
    }

    pub fn identity(k: usize, n: usize) -> Self {
        let mut m = Self::zeros(k, k, n);
        for i in 0..k {
            m.set(i, i, CircPoly::one(n));
        }
        m
    }

    pub fn from_cells(rows: usize, cols: usize, n: usize, cells: Vec<CircPoly>) -> Result<Self> {
        if cells.len() != rows * cols {
            return Err(QcError::Dimension(format!("{} cells for {}x{}", cells.len(), rows, cols)));
        }
        if let Some(p) = cells.iter().find(|p| p.n() != n) {
            return Err(QcError::ModulusMismatch(n, p.n()));
        }
        Ok(BlockMatrix { n, rows, cols, cells })
    }

    /// Build from rows of exponent lists; an empty list is a zero cell.
    pub fn from_exponent_rows(n: usize, rows: &[Vec<Vec<i64>>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(QcError::Dimension("ragged rows".into()));
        }
        let cells = rows.iter().flatten().map(|e| CircPoly::from_exponents(n, e)).collect();
        Self::from_cells(r, c, n, cells)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CircPoly {
        &self.cells[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: CircPoly) {
        assert_eq!(p.n(), self.n, "circulant size mismatch");
        self.cells[r * self.cols + c] = p;
    }

    pub fn cells(&self) -> &[CircPoly] {
        &self.cells
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.n);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).transpose());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(QcError::ModulusMismatch(self.n, other.n));
        }
        if self.cols != other.rows {
            return Err(QcError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (rows, cols, n) = (self.rows, other.cols, self.n);
        let cells = (0..rows * cols)
            .into_par_iter()
            .map(|idx| {
                let (r, c) = (idx / cols, idx % cols);
                let mut acc = CircPoly::zero(n);
                for k in 0..self.cols {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc.add_assign(&a.checked_mul(b).expect("sizes checked"));
                }
                acc
            })
            .collect();
        Ok(BlockMatrix { n, rows, cols, cells })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(QcError::ModulusMismatch(self.n, other.n));
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(QcError::Dimension("block sum".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.cells.iter_mut().zip(&other.cells) {
            a.add_assign(b);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(CircPoly::is_zero)
    }

    pub fn max_coeff(&self) -> u64 {
        self.cells.iter().map(CircPoly::max_coeff).max().unwrap_or(0)
    }

    /// Sum of block weights along block row `r`.
    pub fn row_weight(&self, r: usize) -> u64 {
        (0..self.cols).map(|c| self.get(r, c).weight()).sum()
    }

    /// Block rows `rows` restricted to block columns `cols`.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len(), self.n);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Scalar (rows*N) x (cols*N) integer matrix.
    pub fn expand_int(&self) -> IntMatrix {
        let n = self.n;
        let mut m = IntMatrix::zeros(self.rows * n, self.cols * n);
        for br in 0..self.rows {
            for bc in 0..self.cols {
                for (e, &c) in self.get(br, bc).coeffs().iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for k in 0..n {
                        m.set(br * n + k, bc * n + (k + e) % n, c);
                    }
                }
            }
        }
        m
    }

    /// Scalar binary expansion; fails if any coefficient exceeds 1.
    pub fn expand(&self) -> Result<SparseBinary> {
        let n = self.n;
        let mut rows = vec![Vec::new(); self.rows * n];
        for br in 0..self.rows {
            for bc in 0..self.cols {
                let p = self.get(br, bc);
                for e in p.support() {
                    let coeff = p.coeffs()[e];
                    if coeff > 1 {
                        return Err(QcError::NotBinary { row: br * n, col: bc * n + e, coeff });
                    }
                    for k in 0..n {
                        rows[br * n + k].push(bc * n + (k + e) % n);
                    }
                }
            }
        }
        Ok(SparseBinary::from_row_lists(self.cols * n, rows))
    }
}

/// Block-level triangle: coefficientwise `e >= 2 && f == 0`.
pub fn triangle_blocks(e: &BlockMatrix, f: &BlockMatrix) -> Result<BlockMatrix> {
    check_same_shape(e, f)?;
    let cells = e
        .cells
        .iter()
        .zip(&f.cells)
        .map(|(a, b)| {
            let c = a.coeffs().iter().zip(b.coeffs()).map(|(&x, &y)| u64::from(x >= 2 && y == 0));
            CircPoly::from_coeffs(c.collect())
        })
        .collect();
    Ok(BlockMatrix { n: e.n, rows: e.rows, cols: e.cols, cells })
}

/// First position where `e triangle f` is non-zero: (block row, block col, exponent).
pub fn triangle_violation(e: &BlockMatrix, f: &BlockMatrix) -> Result<Option<(usize, usize, usize)>> {
    check_same_shape(e, f)?;
    for (idx, (a, b)) in e.cells.iter().zip(&f.cells).enumerate() {
        let hit = a.coeffs().iter().zip(b.coeffs()).position(|(&x, &y)| x >= 2 && y == 0);
        if let Some(exp) = hit {
            return Ok(Some((idx / e.cols, idx % e.cols, exp)));
        }
    }
    Ok(None)
}

fn check_same_shape(e: &BlockMatrix, f: &BlockMatrix) -> Result<()> {
    if e.n != f.n {
        return Err(QcError::ModulusMismatch(e.n, f.n));
    }
    if (e.rows, e.cols) != (f.rows, f.cols) {
        return Err(QcError::Dimension("triangle operands".into()));
    }
    Ok(())
}

/// H H^T with the row weight removed from each diagonal block.
pub fn compute_ch(h: &BlockMatrix) -> BlockMatrix {
    let mut c = h.mul(&h.transpose()).expect("H times its transpose");
    for i in 0..h.rows() {
        let d = h.row_weight(i);
        let mut p = c.get(i, i).clone();
        let mut coeffs = p.coeffs().to_vec();
        coeffs[0] = coeffs[0].checked_sub(d).expect("diagonal contains the row weight");
        p = CircPoly::from_coeffs(coeffs);
        c.set(i, i, p);
    }
    c
}
