//! The 4 x 8 multi-edge protograph [A | B] with double edges on the diagonal
//! of A and zeros on the diagonal of B.

use crate::block::BlockMatrix;
use crate::circ::{reduce, CircPoly};
use crate::error::{QcError, Result};
use crate::exponent::{Entry, ExponentMatrix};
use crate::girth::{Girth, GirthReport, Witness};
use std::collections::HashMap;

const ROW_NAMES: [char; 4] = ['a', 'b', 'c', 'd'];

/// Shifts a_1..a_8, b_1..b_8, c_1..c_8, d_1..d_8. Entry (i, 4 + i) is a
/// zero block and its stored value is ignored; (i, i) is 1 + x^{shift}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcsdsForm {
    pub shifts: [[i64; 8]; 4],
    pub n: usize,
}

/// The (128,64) code at N = 16.
pub const CCSDS_128_64: CcsdsForm = CcsdsForm {
    shifts: [
        [7, 2, 14, 6, 0, 0, 13, 0],
        [6, 15, 0, 1, 0, 0, 0, 7],
        [4, 1, 15, 14, 11, 0, 0, 3],
        [0, 1, 9, 13, 14, 1, 0, 0],
    ],
    n: 16,
};

fn name(i: usize, k: usize) -> String {
    format!("{}_{}", ROW_NAMES[i], k + 1)
}

impl CcsdsForm {
    /// Whether the reduced-form identities hold (a_8 = b_5 = c_6 = d_7 = 0).
    pub fn is_reduced(&self) -> bool {
        [(0, 7), (1, 4), (2, 5), (3, 6)].iter().all(|&(i, k)| reduce(self.shifts[i][k], self.n) == 0)
    }

    /// Fails when a diagonal shift is 0, which makes 1 + x^0 a double edge.
    pub fn to_exponent_matrix(&self) -> Result<ExponentMatrix> {
        let rows = (0..4)
            .map(|i| {
                (0..8)
                    .map(|k| match k {
                        _ if k == i => Entry::shifts(vec![0, self.shifts[i][k]]),
                        _ if k == 4 + i => Entry::Zero,
                        _ => Entry::single(self.shifts[i][k]),
                    })
                    .collect()
            })
            .collect();
        ExponentMatrix::new(rows)
    }

    /// Bound form; fails when a diagonal shift is 0 mod N (double edge collapses).
    pub fn to_bound(&self) -> Result<ExponentMatrix> {
        self.to_exponent_matrix()?.bind(self.n)
    }

    /// Exponents of C_{ij}, i != j: -r_j[i], r_i[j] and r_i[k] - r_j[k] over
    /// the columns where both rows are non-zero.
    fn off_diagonal(&self, i: usize, j: usize) -> Vec<(i64, String)> {
        let (ri, rj) = (&self.shifts[i], &self.shifts[j]);
        let mut out = vec![(-rj[i], format!("-{}", name(j, i))), (ri[j], name(i, j))];
        for k in (0..8).filter(|&k| k != 4 + i && k != 4 + j) {
            out.push((ri[k] - rj[k], format!("{}-{}", name(i, k), name(j, k))));
        }
        out
    }

    /// C_H = HH^T - 8I from the closed forms.
    pub fn ch(&self) -> BlockMatrix {
        let n = self.n;
        let mut cells = Vec::with_capacity(16);
        for i in 0..4 {
            for j in 0..4 {
                let mut p = CircPoly::zero(n);
                let mut add = |e: i64| p.add_assign(&CircPoly::monomial(n, e));
                if i == j {
                    add(self.shifts[i][i]);
                    add(-self.shifts[i][i]);
                } else {
                    for (e, _) in self.off_diagonal(i, j) {
                        add(e);
                    }
                }
                cells.push(p);
            }
        }
        BlockMatrix::from_cells(4, 4, n, cells).expect("uniform modulus")
    }

    /// Girth-6 conditions: 2a_1, 2b_2, 2c_3, 2d_4 non-zero mod N and the six
    /// off-diagonal exponent sets free of repeats mod N.
    pub fn girth6_check(&self) -> GirthReport {
        let n = self.n;
        let report = |girth, witness| GirthReport { girth, method: "ccsds".into(), witness };
        for i in 0..4 {
            if reduce(self.shifts[i][i], n) == 0 {
                let w = Witness::Collision { set: "diagonal".into(), first: name(i, i), second: "0".into(), value: 0 };
                return report(Girth::Finite(2), Some(w));
            }
        }
        for i in 0..4 {
            if reduce(2 * self.shifts[i][i], n) == 0 {
                let w = Witness::Collision { set: "doubled".into(), first: format!("2{}", name(i, i)), second: "0".into(), value: 0 };
                return report(Girth::Finite(4), Some(w));
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                let mut seen: HashMap<usize, String> = HashMap::new();
                for (e, tag) in self.off_diagonal(i, j) {
                    let v = reduce(e, n);
                    if let Some(first) = seen.get(&v) {
                        let w = Witness::Collision {
                            set: format!("C{}{}", i + 1, j + 1),
                            first: first.clone(),
                            second: tag,
                            value: v as i64,
                        };
                        return report(Girth::Finite(4), Some(w));
                    }
                    seen.insert(v, tag);
                }
            }
        }
        report(Girth::Exceeds(4), None)
    }
}

/// Read a 4 x 8 exponent matrix with the CCSDS support back into shift form.
pub fn ccsds_from_exponent_matrix(e: &ExponentMatrix) -> Result<CcsdsForm> {
    let n = e.require_n()?;
    if e.rows() != 4 || e.cols() != 8 {
        return Err(QcError::Dimension(format!("expected 4 x 8, got {} x {}", e.rows(), e.cols())));
    }
    let mut shifts = [[0i64; 8]; 4];
    for (i, row) in shifts.iter_mut().enumerate() {
        for (k, s) in row.iter_mut().enumerate() {
            let cell = e.get(i, k).exps();
            *s = match (k, cell) {
                _ if k == 4 + i && cell.is_empty() => 0,
                _ if k == i && cell.len() == 2 && cell[0] == 0 => cell[1],
                _ if k != i && k != 4 + i && cell.len() == 1 => cell[0],
                _ => return Err(QcError::Invalid(format!("cell ({}, {}) does not fit the CCSDS support", i, k))),
            };
        }
    }
    Ok(CcsdsForm { shifts, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::compute_ch;

    #[test]
    fn builtin_diagonal() {
        let ch = CCSDS_128_64.ch();
        let want = [[7, 9], [15, 1], [15, 1], [13, 3]];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(ch.get(i, i), &CircPoly::from_exponents(16, w));
        }
        assert!(CCSDS_128_64.is_reduced());
    }

    #[test]
    fn closed_form_matches_block_product() {
        let h = CCSDS_128_64.to_bound().unwrap().to_block().unwrap();
        assert_eq!(compute_ch(&h), CCSDS_128_64.ch());
    }

    #[test]
    fn doubled_violation() {
        let mut m = CCSDS_128_64;
        m.shifts[0][0] = 8;
        let r = m.girth6_check();
        assert_eq!(r.girth, Girth::Finite(4));
        assert!(matches!(r.witness, Some(Witness::Collision { ref first, .. }) if first == "2a_1"));
    }

    #[test]
    fn collision_on_bind() {
        let mut m = CCSDS_128_64;
        m.n = 7;
        m.shifts[0][0] = 7;
        assert!(m.to_bound().is_err());
    }

    #[test]
    fn round_trip() {
        let e = CCSDS_128_64.to_bound().unwrap();
        assert_eq!(ccsds_from_exponent_matrix(&e).unwrap(), CCSDS_128_64);
    }
}
