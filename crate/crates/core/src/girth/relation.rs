//! Girth relations between H and derived matrices.

use super::bfs::girth_of_int;
use super::{Girth, GirthReport};
use crate::block::{compute_ch, BlockMatrix};
use crate::error::{QcError, Result};
use crate::matrix::IntMatrix;

/// For H = [P_1 .. P_n; Q_1 .. Q_n] with permutation blocks, the matrix
/// C = sum_i P_i Q_i^T satisfies girth(H) = 2 girth(C).
///
/// `group` is the number of block rows forming one permutation row (1 for plain
/// circulants, N1 for a pre-lifted view). Returns (girth of H, girth of C).
pub fn girth_of_c_relation(h: &BlockMatrix, group: usize) -> Result<(GirthReport, GirthReport)> {
    if group == 0 || h.rows() != 2 * group || h.cols() % group != 0 {
        return Err(QcError::Dimension(format!(
            "{}x{} blocks do not form two permutation rows of size {}",
            h.rows(),
            h.cols(),
            group
        )));
    }
    let full = h.expand_int();
    let m = group * h.n();
    let blocks = h.cols() / group;
    let mut c = IntMatrix::zeros(m, m);
    for b in 0..blocks {
        let p = permutation_of(&full, 0, b * m, m)?;
        let q = permutation_of(&full, m, b * m, m)?;
        // P Q^T joins the top and bottom rows that share a column
        let mut top = vec![0; m];
        for (k, &j) in p.iter().enumerate() {
            top[j] = k;
        }
        for (k, &j) in q.iter().enumerate() {
            c.set(top[j], k, c.get(top[j], k) + 1);
        }
    }
    let gh = girth_of_int(&full)?;
    let gc = girth_of_int(&c)?;
    Ok((gh, gc))
}

/// Column index of the single 1 in each row of an m x m block; errors unless a permutation.
fn permutation_of(full: &IntMatrix, r0: usize, c0: usize, m: usize) -> Result<Vec<usize>> {
    let mut perm = Vec::with_capacity(m);
    let mut seen = vec![false; m];
    for r in 0..m {
        let ones: Vec<usize> = (0..m).filter(|&c| full.get(r0 + r, c0 + c) != 0).collect();
        match ones.as_slice() {
            [c] if full.get(r0 + r, c0 + c) == 1 && !seen[*c] => {
                seen[*c] = true;
                perm.push(*c);
            }
            _ => return Err(QcError::Invalid(format!("block at row {} column {} is not a permutation", r0, c0))),
        }
    }
    Ok(perm)
}

/// Girth of the expanded C_H matrix (2 when C_H has a coefficient >= 2).
pub fn girth_of_ch(h: &BlockMatrix) -> GirthReport {
    let c = compute_ch(h);
    if c.max_coeff() >= 2 {
        return GirthReport { girth: Girth::Finite(2), method: "bfs".into(), witness: None };
    }
    girth_of_int(&c.expand_int()).expect("binary after coefficient check")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::ExponentMatrix;

    #[test]
    fn two_row_relation() {
        let h = ExponentMatrix::from_rows(&[vec![0, 0, 0], vec![0, 1, 3]]).bind(7).unwrap().to_block().unwrap();
        let (gh, gc) = girth_of_c_relation(&h, 1).unwrap();
        assert_eq!(gc.girth, Girth::Finite(6));
        assert_eq!(gh.girth, Girth::Finite(12));
    }

    #[test]
    fn non_permutation_rejected() {
        let h = BlockMatrix::from_exponent_rows(3, &[vec![vec![0, 1]], vec![vec![0]]]).unwrap();
        assert!(girth_of_c_relation(&h, 1).is_err());
    }
}
