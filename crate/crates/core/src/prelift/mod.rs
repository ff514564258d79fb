//! Two-step lifting: rewriting a lift of size N = N1 N2 as an N1 pre-lift
//! followed by circulants of size N2.

mod repair;
mod structures;

pub use repair::{find_blocking_entry, repair_girth, Repair};
pub use structures::{prelift_admits_girth, scan_structures, support_pattern, Admission, Occurrence, Structure, StructureScan, Verdict};

use crate::circ::CircPoly;
use crate::error::{QcError, Result};
use crate::exponent::{Entry, ExponentMatrix};

/// Split g(x) = sum_r x^r g_r(x^N1) into the N1 x N1 grid with g_{p-q} on
/// and below the diagonal and x g_{N1+p-q} above it.
pub fn poly_prelift(g: &CircPoly, n1: usize) -> Result<Vec<Vec<CircPoly>>> {
    let n = g.n();
    if n1 == 0 || n % n1 != 0 {
        return Err(QcError::Invalid(format!("pre-lift size {} does not divide N = {}", n1, n)));
    }
    let n2 = n / n1;
    let mut parts = vec![vec![0u64; n2]; n1];
    for (e, &c) in g.coeffs().iter().enumerate() {
        parts[e % n1][e / n1] += c;
    }
    let parts: Vec<CircPoly> = parts.into_iter().map(CircPoly::from_coeffs).collect();
    let x = CircPoly::monomial(n2, 1);
    Ok((0..n1)
        .map(|p| {
            (0..n1)
                .map(|q| if p >= q { parts[p - q].clone() } else { x.checked_mul(&parts[n1 + p - q]).expect("same modulus") })
                .collect()
        })
        .collect())
}

/// Pre-lifted form of a bound exponent matrix, with the index maps back to
/// the original expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreliftView {
    pub n1: usize,
    pub n2: usize,
    pub matrix: ExponentMatrix,
    /// Original row index of each expanded view row.
    pub row_perm: Vec<usize>,
    /// Original column index of each expanded view column.
    pub col_perm: Vec<usize>,
}

/// View position (block p, offset alpha) inside one protograph cell maps to
/// original offset N1 alpha - p mod N.
fn index_map(blocks: usize, n1: usize, n2: usize) -> Vec<usize> {
    let n = n1 * n2;
    let mut map = Vec::with_capacity(blocks * n);
    for b in 0..blocks {
        for p in 0..n1 {
            for alpha in 0..n2 {
                map.push(b * n + (n1 * alpha + n - p) % n);
            }
        }
    }
    map
}

impl PreliftView {
    /// Wrap an already pre-lifted matrix over N2 whose protograph cells are N1 x N1 groups.
    pub fn from_view(matrix: ExponentMatrix, n1: usize) -> Result<Self> {
        let n2 = matrix.require_n()?;
        if n1 == 0 || matrix.rows() % n1 != 0 || matrix.cols() % n1 != 0 {
            return Err(QcError::Dimension(format!("{}x{} view is not a grid of {}x{} groups", matrix.rows(), matrix.cols(), n1, n1)));
        }
        let row_perm = index_map(matrix.rows() / n1, n1, n2);
        let col_perm = index_map(matrix.cols() / n1, n1, n2);
        Ok(PreliftView { n1, n2, matrix, row_perm, col_perm })
    }

    pub fn n(&self) -> usize {
        self.n1 * self.n2
    }

    /// Inverse maps: view index of each original row and column.
    pub fn inverse(&self) -> (Vec<usize>, Vec<usize>) {
        let inv = |p: &[usize]| {
            let mut v = vec![0; p.len()];
            for (i, &o) in p.iter().enumerate() {
                v[o] = i;
            }
            v
        };
        (inv(&self.row_perm), inv(&self.col_perm))
    }

    /// Collapse the view back to a circulant matrix over N = N1 N2 when every
    /// N1 x N1 group has the pre-lift layout.
    pub fn collapse(&self) -> Result<ExponentMatrix> {
        let (n1, n2) = (self.n1, self.n2);
        let mut rows = Vec::new();
        for br in 0..self.matrix.rows() / n1 {
            let mut row = Vec::new();
            for bc in 0..self.matrix.cols() / n1 {
                let mut exps = Vec::new();
                for r in 0..n1 {
                    let e = self.matrix.get(br * n1, bc * n1 + (n1 - r) % n1);
                    for &a in e.exps() {
                        // above-diagonal entries carry an extra factor x
                        let a = if r == 0 { a } else { (a - 1).rem_euclid(n2 as i64) };
                        exps.push(a * n1 as i64 + r as i64);
                    }
                }
                let entry = if exps.is_empty() { Entry::Zero } else { Entry::shifts(exps) };
                row.push(entry);
            }
            rows.push(row);
        }
        let e = ExponentMatrix::new(rows)?.bind(n1 * n2)?;
        if matrix_prelift(&e, n1)?.matrix != self.matrix {
            return Err(QcError::Invalid("view groups are not block circulant".into()));
        }
        Ok(e)
    }
}

/// Apply `poly_prelift` cellwise.
pub fn matrix_prelift(e: &ExponentMatrix, n1: usize) -> Result<PreliftView> {
    let n = e.require_n()?;
    if n1 == 0 || n % n1 != 0 {
        return Err(QcError::Invalid(format!("pre-lift size {} does not divide N = {}", n1, n)));
    }
    let n2 = n / n1;
    let mut cells = vec![vec![Entry::Zero; e.cols() * n1]; e.rows() * n1];
    for r in 0..e.rows() {
        for c in 0..e.cols() {
            let g = CircPoly::from_exponents(n, e.get(r, c).exps());
            for (p, line) in poly_prelift(&g, n1)?.into_iter().enumerate() {
                for (q, poly) in line.into_iter().enumerate() {
                    if !poly.is_zero() {
                        let exps = poly.support().into_iter().map(|k| k as i64).collect();
                        cells[r * n1 + p][c * n1 + q] = Entry::shifts(exps);
                    }
                }
            }
        }
    }
    PreliftView::from_view(ExponentMatrix::new(cells)?.bind(n2)?, n1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(n: usize, e: i64) -> CircPoly {
        CircPoly::monomial(n, e)
    }

    #[test]
    fn two_fold_monomials() {
        let a = 5;
        let g = poly_prelift(&mono(22, 2 * a), 2).unwrap();
        assert_eq!(g, vec![vec![mono(11, a), CircPoly::zero(11)], vec![CircPoly::zero(11), mono(11, a)]]);
        let g = poly_prelift(&mono(22, 2 * a + 1), 2).unwrap();
        assert_eq!(g, vec![vec![CircPoly::zero(11), mono(11, a + 1)], vec![mono(11, a), CircPoly::zero(11)]]);
    }

    #[test]
    fn three_fold_sum() {
        let g = CircPoly::from_exponents(21, &[0, 2, 3]);
        let p = |e: &[i64]| CircPoly::from_exponents(7, e);
        let want = vec![
            vec![p(&[0, 1]), p(&[1]), p(&[])],
            vec![p(&[]), p(&[0, 1]), p(&[1])],
            vec![p(&[0]), p(&[]), p(&[0, 1])],
        ];
        assert_eq!(poly_prelift(&g, 3).unwrap(), want);
        assert!(poly_prelift(&g, 4).is_err());
    }

    #[test]
    fn view_expands_to_original() {
        let e = ExponentMatrix::from_rows(&[vec![0, 0, 0], vec![0, 5, 13], vec![3, 7, 11]]).bind(18).unwrap();
        for n1 in [1, 2, 3, 6] {
            let v = matrix_prelift(&e, n1).unwrap();
            let orig = e.to_block().unwrap().expand().unwrap();
            let view = v.matrix.to_block().unwrap().expand().unwrap();
            assert_eq!(view.permuted(&v.row_perm, &v.col_perm), orig, "N1 = {}", n1);
            assert_eq!(v.collapse().unwrap(), e);
        }
        assert_eq!(matrix_prelift(&e, 1).unwrap().matrix, e);
    }
}
