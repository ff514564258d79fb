//! Linear forms over protograph shifts and sets of such forms whose values
//! must not collide.

use std::collections::HashMap;
use std::fmt;

/// Sum of coef * e[row][col].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Lin(Vec<(u16, u16, i32)>);

impl Lin {
    pub fn zero() -> Self {
        Lin(Vec::new())
    }

    pub fn var(row: usize, col: usize) -> Self {
        Lin(vec![(row as u16, col as u16, 1)])
    }

    fn normalize(mut terms: Vec<(u16, u16, i32)>) -> Self {
        terms.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut out: Vec<(u16, u16, i32)> = Vec::with_capacity(terms.len());
        for (r, c, k) in terms {
            match out.last_mut() {
                Some(last) if (last.0, last.1) == (r, c) => last.2 += k,
                _ => out.push((r, c, k)),
            }
        }
        out.retain(|t| t.2 != 0);
        Lin(out)
    }

    pub fn plus(&self, other: &Lin) -> Lin {
        Lin::normalize(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn minus(&self, other: &Lin) -> Lin {
        Lin::normalize(self.0.iter().copied().chain(other.0.iter().map(|&(r, c, k)| (r, c, -k))).collect())
    }

    pub fn vars(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|&(r, c, _)| (r as usize, c as usize))
    }

    pub fn coeff_of(&self, row: usize, col: usize) -> i64 {
        self.0.iter().find(|&&(r, c, _)| (r as usize, c as usize) == (row, col)).map_or(0, |t| t.2 as i64)
    }

    /// Value when every variable is assigned.
    pub fn eval(&self, grid: &Grid) -> Option<i64> {
        let mut v = 0i64;
        for &(r, c, k) in &self.0 {
            v += k as i64 * grid.get(r as usize, c as usize)?;
        }
        Some(v)
    }
}

impl fmt::Display for Lin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (idx, &(r, c, k)) in self.0.iter().enumerate() {
            let sign = if k < 0 { "-" } else if idx > 0 { "+" } else { "" };
            let mag = k.abs();
            if mag == 1 {
                write!(f, "{}e{}{}", sign, r, c)?;
            } else {
                write!(f, "{}{}e{}{}", sign, mag, r, c)?;
            }
        }
        Ok(())
    }
}

/// Partially assigned shift grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    cols: usize,
    vals: Vec<Option<i64>>,
}

impl Grid {
    pub fn empty(rows: usize, cols: usize) -> Self {
        Grid { cols, vals: vec![None; rows * cols] }
    }

    pub fn full(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Grid { cols, vals: rows.iter().flatten().map(|&v| Some(v)).collect() }
    }

    pub fn rows(&self) -> usize {
        if self.cols == 0 {
            0
        } else {
            self.vals.len() / self.cols
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Option<i64> {
        self.vals.get(r * self.cols + c).copied().flatten()
    }

    pub fn set(&mut self, r: usize, c: usize, v: Option<i64>) {
        self.vals[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows()).map(|r| (0..self.cols).map(|c| self.get(r, c)).collect()).collect()
    }
}

/// Whether a collision landing on a right-hand-side value is tolerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Reading {
    /// Triangle semantics: repeats are allowed at values of the exempt forms.
    #[default]
    Triangle,
    /// Every set must have pairwise distinct values.
    Strict,
}

#[derive(Clone, Debug)]
pub struct Term {
    pub form: Lin,
    pub tag: String,
}

#[derive(Clone, Debug)]
pub struct CondSet {
    pub label: String,
    pub terms: Vec<Term>,
    pub exempt: Vec<Lin>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub set: String,
    pub first: String,
    pub second: String,
    pub value: i64,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} = {} = {}", self.set, self.first, self.second, self.value)
    }
}

impl CondSet {
    pub fn new(label: impl Into<String>) -> Self {
        CondSet { label: label.into(), terms: Vec::new(), exempt: Vec::new() }
    }

    pub fn push(&mut self, form: Lin, tag: impl Into<String>) {
        self.terms.push(Term { form, tag: tag.into() });
    }

    pub fn involves(&self, row: usize, col: usize) -> bool {
        self.terms.iter().any(|t| t.form.coeff_of(row, col) != 0)
    }

    /// First collision among terms whose variables are all assigned.
    pub fn violation(&self, grid: &Grid, modulus: Option<usize>, reading: Reading) -> Option<Violation> {
        let norm = |v: i64| modulus.map_or(v, |n| v.rem_euclid(n as i64));
        let exempt: Vec<i64> = match reading {
            Reading::Strict => Vec::new(),
            Reading::Triangle => self.exempt.iter().filter_map(|f| f.eval(grid)).map(norm).collect(),
        };
        let mut seen: HashMap<i64, usize> = HashMap::with_capacity(self.terms.len());
        for (idx, t) in self.terms.iter().enumerate() {
            let Some(v) = t.form.eval(grid).map(norm) else { continue };
            if let Some(&first) = seen.get(&v) {
                if !exempt.contains(&v) {
                    return Some(Violation {
                        set: self.label.clone(),
                        first: self.terms[first].tag.clone(),
                        second: t.tag.clone(),
                        value: v,
                    });
                }
            } else {
                seen.insert(v, idx);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms_cancel() {
        let a = Lin::var(1, 2).plus(&Lin::var(0, 0));
        let b = a.minus(&Lin::var(0, 0));
        assert_eq!(b, Lin::var(1, 2));
        assert_eq!(a.minus(&a), Lin::zero());
    }

    #[test]
    fn exempt_values_tolerated() {
        let mut s = CondSet::new("s");
        s.push(Lin::var(0, 0), "a");
        s.push(Lin::var(0, 1), "b");
        s.exempt.push(Lin::var(0, 2));
        let grid = Grid::full(&[vec![3, 3, 3]]);
        assert!(s.violation(&grid, None, Reading::Triangle).is_none());
        assert!(s.violation(&grid, None, Reading::Strict).is_some());
        let grid = Grid::full(&[vec![3, 10, 3]]);
        assert!(s.violation(&grid, Some(7), Reading::Triangle).is_none());
        let grid = Grid::full(&[vec![3, 10, 4]]);
        assert!(s.violation(&grid, Some(7), Reading::Triangle).is_some());
    }
}
