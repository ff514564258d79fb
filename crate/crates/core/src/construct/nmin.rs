//! Smallest circulant size achieving a target girth.

use crate::error::Result;
use crate::exponent::ExponentMatrix;
use crate::girth::bt::{girth_via_bt, BtForm};
use crate::girth::cycles::{sum_magnitudes, CycleSum};
use crate::girth::GirthReport;
use rayon::prelude::*;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nmin {
    /// Smallest valid N together with the algebraic check at that N.
    Found { n: usize, report: GirthReport },
    /// A closed walk shorter than the target sums to zero over Z.
    NoN(CycleSum),
    NotFound(usize),
}

impl Nmin {
    pub fn value(&self) -> Option<usize> {
        match self {
            Nmin::Found { n, .. } => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for Nmin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nmin::Found { n, .. } => write!(f, "n_min {}", n),
            Nmin::NoN(c) => write!(f, "NoN: vanishing cycle sum over Z (length {})", c.len),
            Nmin::NotFound(cap) => write!(f, "NotFound: no N <= {}", cap),
        }
    }
}

/// Smallest N <= cap with no closed walk of length < g summing to 0 mod N.
pub fn nmin_search(e: &ExponentMatrix, g: usize, cap: usize) -> Result<Nmin> {
    let e = e.unbind();
    let (mags, zero) = sum_magnitudes(&e, g);
    if let Some(z) = zero {
        return Ok(Nmin::NoN(z));
    }
    let mags: Vec<u64> = mags.into_iter().collect();
    let found = (1..=cap).into_par_iter().find_first(|&n| {
        let m = n as u64;
        mags.iter().all(|&s| s % m != 0) && e.bind(n).is_ok()
    });
    let Some(n) = found else { return Ok(Nmin::NotFound(cap)) };
    let bound = e.bind(n)?;
    let l_max = (g / 2).saturating_sub(1).max(2);
    let report = girth_via_bt(&bound.to_block()?, l_max, BtForm::Power);
    debug_assert!(report.girth.at_least(g), "cycle sums and B_t disagree at N = {}", n);
    Ok(Nmin::Found { n, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::girth::bfs::girth_bfs_capped;

    #[test]
    fn two_row_examples() {
        let e = ExponentMatrix::from_rows(&[vec![0; 8], vec![0, 1, 2, 3, 4, 5, 6, 7]]);
        assert_eq!(nmin_search(&e, 8, 100).unwrap().value(), Some(8));
        assert!(matches!(nmin_search(&e, 10, 100).unwrap(), Nmin::NoN(_)));
    }

    #[test]
    fn smaller_n_falls_short() {
        let e = ExponentMatrix::from_rows(&[vec![0; 4], vec![0, 1, 3, 7]]);
        let n = nmin_search(&e, 12, 200).unwrap().value().unwrap();
        for m in 1..n {
            if let Ok(b) = e.bind(m) {
                let r = girth_bfs_capped(&b.to_block().unwrap().expand().unwrap(), Some(12));
                assert!(!r.girth.at_least(12), "N = {}", m);
            }
        }
        let b = e.bind(n).unwrap().to_block().unwrap().expand().unwrap();
        assert!(girth_bfs_capped(&b, Some(12)).girth.at_least(12));
    }

    #[test]
    fn not_found() {
        let e = ExponentMatrix::from_rows(&[vec![0; 4], vec![0, 1, 3, 7]]);
        assert_eq!(nmin_search(&e, 12, 5).unwrap(), Nmin::NotFound(5));
    }
}
