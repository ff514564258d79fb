//! Exponent matrices: the shift description of a QC protograph.

use crate::block::BlockMatrix;
use crate::circ::{reduce, CircPoly};
use crate::error::{QcError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    /// Sorted, distinct, non-empty.
    Shifts(Vec<i64>),
}

impl Entry {
    pub fn single(e: i64) -> Self {
        Entry::Shifts(vec![e])
    }

    /// Sorted; a repeated shift is a double edge and is rejected by the matrix constructors.
    pub fn shifts(mut exps: Vec<i64>) -> Self {
        exps.sort_unstable();
        if exps.is_empty() {
            Entry::Zero
        } else {
            Entry::Shifts(exps)
        }
    }

    pub fn exps(&self) -> &[i64] {
        match self {
            Entry::Zero => &[],
            Entry::Shifts(v) => v,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Entry::Zero)
    }

    pub fn weight(&self) -> usize {
        self.exps().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Entry>,
    n: Option<usize>,
}

fn normalized(e: Entry, row: usize, col: usize) -> Result<Entry> {
    let e = match e {
        Entry::Shifts(v) => Entry::shifts(v),
        z => z,
    };
    if let Some(w) = e.exps().windows(2).find(|w| w[0] == w[1]) {
        return Err(QcError::Invalid(format!("cell ({}, {}) repeats shift {}", row, col, w[0])));
    }
    Ok(e)
}

impl ExponentMatrix {
    pub fn new(rows: Vec<Vec<Entry>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(QcError::Dimension("empty exponent matrix".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(QcError::Dimension("ragged rows".into()));
        }
        let cells = rows
            .into_iter()
            .flatten()
            .enumerate()
            .map(|(idx, e)| normalized(e, idx / c, idx % c))
            .collect::<Result<_>>()?;
        Ok(ExponentMatrix { rows: r, cols: c, cells, n: None })
    }

    /// All-one protograph with a single shift per cell.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&e| Entry::single(e)).collect()).collect())
            .expect("well-formed rows")
    }

    /// `None` marks a zero cell.
    pub fn from_optional_rows(rows: &[Vec<Option<i64>>]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|e| e.map_or(Entry::Zero, Entry::single)).collect())
                .collect(),
        )
        .expect("well-formed rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n(&self) -> Option<usize> {
        self.n
    }

    pub fn require_n(&self) -> Result<usize> {
        self.n.ok_or(QcError::Unbound)
    }

    pub fn get(&self, r: usize, c: usize) -> &Entry {
        &self.cells[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: Entry) -> Result<()> {
        self.cells[r * self.cols + c] = normalized(e, r, c)?;
        if let Some(n) = self.n {
            *self = self.unbind().bind(n)?;
        }
        Ok(())
    }

    pub fn with_entry(&self, r: usize, c: usize, e: Entry) -> Result<Self> {
        let mut m = self.clone();
        m.set(r, c, e)?;
        Ok(m)
    }

    /// Reduce every shift mod `n`; shifts of a cell must stay distinct.
    pub fn bind(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(QcError::Invalid("circulant size must be positive".into()));
        }
        let mut cells = Vec::with_capacity(self.cells.len());
        for (idx, e) in self.cells.iter().enumerate() {
            match e {
                Entry::Zero => cells.push(Entry::Zero),
                Entry::Shifts(v) => {
                    let mut red: Vec<(i64, i64)> = v.iter().map(|&x| (reduce(x, n) as i64, x)).collect();
                    red.sort_unstable();
                    if let Some(w) = red.windows(2).find(|w| w[0].0 == w[1].0) {
                        return Err(QcError::ExponentCollision {
                            row: idx / self.cols,
                            col: idx % self.cols,
                            a: w[0].1,
                            b: w[1].1,
                            n,
                        });
                    }
                    cells.push(Entry::Shifts(red.into_iter().map(|(r, _)| r).collect()));
                }
            }
        }
        Ok(ExponentMatrix { rows: self.rows, cols: self.cols, cells, n: Some(n) })
    }

    pub fn unbind(&self) -> Self {
        ExponentMatrix { n: None, ..self.clone() }
    }

    pub fn to_block(&self) -> Result<BlockMatrix> {
        let n = self.require_n()?;
        let cells = self.cells.iter().map(|e| CircPoly::from_exponents(n, e.exps())).collect();
        BlockMatrix::from_cells(self.rows, self.cols, n, cells)
    }

    /// Single-shift grid when every cell holds exactly one shift.
    pub fn single_shifts(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| match self.get(r, c).exps() {
                        [e] => Some(*e),
                        _ => None,
                    })
                    .collect()
            })
            .collect()
    }

    /// Cell weights (0 for a zero cell, k for k parallel shifts).
    pub fn protograph(&self) -> Vec<Vec<usize>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c).weight()).collect()).collect()
    }

    pub fn has_multi_edges(&self) -> bool {
        self.cells.iter().any(|e| e.weight() > 1)
    }

    pub fn has_zero_cells(&self) -> bool {
        self.cells.iter().any(Entry::is_zero)
    }

    pub fn max_abs_exponent(&self) -> i64 {
        self.cells.iter().flat_map(|e| e.exps().iter().map(|x| x.abs())).max().unwrap_or(0)
    }

    /// Row subset, keeping the binding.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let cells = rows
            .iter()
            .flat_map(|&r| (0..self.cols).map(move |c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        ExponentMatrix { rows: rows.len(), cols: self.cols, cells, n: self.n }
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let cells = (0..self.rows)
            .flat_map(|r| cols.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        ExponentMatrix { rows: self.rows, cols: cols.len(), cells, n: self.n }
    }
}
