//! Locating and re-choosing the shifts that hold the girth down.

use crate::error::{QcError, Result};
use crate::exponent::{Entry, ExponentMatrix};
use crate::girth::bfs::girth_of_exponents;
use crate::girth::Girth;
use rayon::prelude::*;

fn raises(e: &ExponentMatrix, current: usize) -> Result<bool> {
    Ok(girth_of_exponents(e, Some(current))?.girth.at_least(current + 2))
}

/// Non-zero cells whose masking lifts the oracle girth above `current`.
///
/// Columns are probed first: if dropping some column raises the girth, only
/// cells of such columns are tried.
pub fn find_blocking_entry(e: &ExponentMatrix, current: usize) -> Result<Vec<(usize, usize)>> {
    let cols: Vec<usize> = (0..e.cols()).collect();
    let dropping: Vec<bool> = cols
        .par_iter()
        .map(|&c| {
            let keep: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            raises(&e.select_cols(&keep), current)
        })
        .collect::<Result<_>>()?;
    let focus: Vec<usize> = if dropping.iter().any(|&d| d) {
        cols.iter().copied().filter(|&c| dropping[c]).collect()
    } else {
        cols
    };
    let cells: Vec<(usize, usize)> = (0..e.rows())
        .flat_map(|r| focus.iter().map(move |&c| (r, c)))
        .filter(|&(r, c)| !e.get(r, c).is_zero())
        .collect();
    let hits = cells
        .par_iter()
        .map(|&(r, c)| raises(&e.with_entry(r, c, Entry::Zero)?, current))
        .collect::<Result<Vec<bool>>>()?;
    Ok(cells.into_iter().zip(hits).filter(|(_, h)| *h).map(|(cell, _)| cell).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Repair {
    pub matrix: ExponentMatrix,
    pub girth: Girth,
    /// (row, col, old shift, new shift) in the order applied.
    pub changes: Vec<(usize, usize, i64, i64)>,
    pub evaluations: usize,
    pub reached: bool,
}

/// Greedily re-choose single shifts of blocking cells until the oracle girth
/// reaches `target` or `budget` oracle evaluations are spent. Candidates for a
/// cell are tried in ascending order starting at `seed mod N`; a change is
/// kept only if it raises the girth.
pub fn repair_girth(e: &ExponentMatrix, target: usize, budget: usize, seed: u64) -> Result<Repair> {
    let n = e.require_n()?;
    let mut cur = e.clone();
    let mut girth = girth_of_exponents(&cur, Some(target))?.girth;
    let mut out = Repair { matrix: cur.clone(), girth, changes: Vec::new(), evaluations: 1, reached: false };
    let start = (seed % n as u64) as i64;
    'outer: while !girth.at_least(target) {
        let Some(g) = girth.value() else { break };
        let mut cells = find_blocking_entry(&cur, g)?;
        out.evaluations += cur.cols() + cells.len();
        if cells.is_empty() {
            cells = (0..cur.rows()).flat_map(|r| (0..cur.cols()).map(move |c| (r, c))).collect();
        }
        for (r, c) in cells {
            let old = match cur.get(r, c) {
                Entry::Shifts(v) if v.len() == 1 => v[0],
                _ => continue,
            };
            for k in 0..n as i64 {
                if out.evaluations >= budget {
                    break 'outer;
                }
                let cand = (start + k) % n as i64;
                if cand == old {
                    continue;
                }
                let next = cur.with_entry(r, c, Entry::single(cand))?;
                out.evaluations += 1;
                let ng = girth_of_exponents(&next, Some(target))?.girth;
                if ng.at_least(g + 2) {
                    cur = next;
                    girth = ng;
                    out.changes.push((r, c, old, cand));
                    continue 'outer;
                }
            }
        }
        break;
    }
    out.reached = girth.at_least(target);
    out.matrix = cur;
    out.girth = girth;
    if !out.reached && out.changes.is_empty() && out.evaluations < budget {
        return Err(QcError::Invalid(format!("no single-shift change raises the girth above {}", girth)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn satisfied_input_unchanged() {
        let e = ExponentMatrix::from_rows(&[vec![0; 4], vec![0, 1, 3, 7]]).bind(15).unwrap();
        let r = repair_girth(&e, 12, 100, 0).unwrap();
        assert!(r.reached && r.changes.is_empty());
        assert_eq!(r.matrix, e);
        assert!(find_blocking_entry(&e, 12).unwrap().is_empty());
    }

    #[test]
    fn fixes_four_cycle() {
        let e = ExponentMatrix::from_rows(&[vec![0, 0, 0], vec![0, 2, 2]]).bind(7).unwrap();
        let cells = find_blocking_entry(&e, 4).unwrap();
        assert!(cells.contains(&(1, 2)));
        let r = repair_girth(&e, 8, 1000, 0).unwrap();
        assert!(r.reached);
        assert!(r.girth.at_least(8));
    }
}
