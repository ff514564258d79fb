//! Closed-form doubling constructions.

use super::{Construction, Draft, ExponentSelector};
use crate::error::{QcError, Result};

/// i_1 = 0, i_l = 1 + 2 i_{l-1}.
pub fn doubling_row(n_v: usize) -> Vec<i64> {
    let mut row = vec![0i64];
    while row.len() < n_v {
        row.push(1 + 2 * row[row.len() - 1]);
    }
    row.truncate(n_v);
    row
}

/// Third row on top of the doubling row: j_2 = 1 + i_2 + 2 i_{n_v}, j_l = 1 + 2 j_{l-1} + i_l.
pub fn girth10_row(n_v: usize) -> Vec<i64> {
    let i = doubling_row(n_v);
    let mut j = vec![0i64];
    for l in 1..n_v {
        j.push(if l == 1 { 1 + i[1] + 2 * i[n_v - 1] } else { 1 + 2 * j[l - 1] + i[l] });
    }
    j
}

fn check(name: &str, n_c: usize, n_v: usize, want: usize) -> Result<()> {
    if n_c != want || n_v < 2 {
        return Err(QcError::Unsupported(format!("{} builds {} x n_v matrices with n_v >= 2", name, want)));
    }
    Ok(())
}

/// Two rows, girth 12.
pub struct Doubling;

impl Construction for Doubling {
    fn name(&self) -> &'static str {
        "doubling"
    }

    fn describe(&self) -> &'static str {
        "two rows, each shift one more than twice the previous"
    }

    fn supports(&self, n_c: usize, g: usize) -> bool {
        n_c == 2 && g <= 12
    }

    fn build(&self, n_c: usize, n_v: usize, _g: usize, _sel: &mut dyn ExponentSelector, _monotone: bool) -> Result<Draft> {
        check(self.name(), n_c, n_v, 2)?;
        Ok(Draft { rows: vec![vec![0; n_v], doubling_row(n_v)], steps: Vec::new() })
    }
}

/// Three rows, girth 10.
pub struct Girth10Recursive;

impl Construction for Girth10Recursive {
    fn name(&self) -> &'static str {
        "girth10-recursive"
    }

    fn describe(&self) -> &'static str {
        "three rows, doubling recursions on both rows"
    }

    fn supports(&self, n_c: usize, g: usize) -> bool {
        n_c == 3 && g <= 10
    }

    fn build(&self, n_c: usize, n_v: usize, _g: usize, _sel: &mut dyn ExponentSelector, _monotone: bool) -> Result<Draft> {
        check(self.name(), n_c, n_v, 3)?;
        Ok(Draft { rows: vec![vec![0; n_v], doubling_row(n_v), girth10_row(n_v)], steps: Vec::new() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows() {
        assert_eq!(doubling_row(8), vec![0, 1, 3, 7, 15, 31, 63, 127]);
        assert_eq!(doubling_row(2), vec![0, 1]);
        assert_eq!(girth10_row(7), vec![0, 128, 260, 528, 1072, 2176, 4416]);
    }
}
