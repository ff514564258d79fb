//! Exponent-matrix files.
//!
//! ```text
//! # optional comments
//! 77 2 8            (or "unbound 2 8"; optionally "prelift K" at the end)
//! 0 0 0 0 0 0 0 0
//! 0 1 3 7 12 20 30 44
//! ```
//! A cell is "." for a zero block or comma-separated shifts.

use crate::error::{QcError, Result};
use crate::exponent::{Entry, ExponentMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcFile {
    pub matrix: ExponentMatrix,
    /// Group size when the matrix is a pre-lift view.
    pub prelift: Option<usize>,
}

impl QcFile {
    pub fn new(matrix: ExponentMatrix) -> Self {
        QcFile { matrix, prelift: None }
    }
}

fn err(line: usize, msg: impl Into<String>) -> QcError {
    QcError::Parse { line, msg: msg.into() }
}

fn num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| err(line, format!("bad {} '{}'", what, tok)))
}

pub fn parse_qc(text: &str) -> Result<QcFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (n, n_c, n_v, prelift) = match toks.as_slice() {
        [n, r, c, rest @ ..] => {
            let n = if *n == "unbound" { None } else { Some(num::<usize>(n, hl, "circulant size")?) };
            let prelift = match rest {
                [] => None,
                ["prelift", k] => Some(num::<usize>(k, hl, "pre-lift size")?),
                _ => return Err(err(hl, format!("unexpected header tail '{}'", rest.join(" ")))),
            };
            (n, num::<usize>(r, hl, "row count")?, num::<usize>(c, hl, "column count")?, prelift)
        }
        _ => return Err(err(hl, "header needs 'N|unbound n_c n_v'")),
    };
    if n == Some(0) || n_c == 0 || n_v == 0 {
        return Err(err(hl, "sizes must be positive"));
    }
    let mut rows = Vec::with_capacity(n_c);
    for (ln, line) in lines {
        if rows.len() == n_c {
            return Err(err(ln, format!("more than {} rows", n_c)));
        }
        let cells: Vec<&str> = line.split_whitespace().collect();
        if cells.len() != n_v {
            return Err(err(ln, format!("expected {} cells, found {}", n_v, cells.len())));
        }
        let mut row = Vec::with_capacity(n_v);
        for cell in cells {
            if cell == "." {
                row.push(Entry::Zero);
                continue;
            }
            let exps = cell.split(',').map(|t| num::<i64>(t, ln, "shift")).collect::<Result<Vec<_>>>()?;
            let mut sorted = exps.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != exps.len() {
                return Err(err(ln, format!("repeated shift in cell '{}'", cell)));
            }
            row.push(Entry::shifts(exps));
        }
        rows.push(row);
    }
    if rows.len() != n_c {
        return Err(err(text.lines().count(), format!("expected {} rows, found {}", n_c, rows.len())));
    }
    let mut matrix = ExponentMatrix::new(rows)?;
    if let Some(n) = n {
        matrix = matrix.bind(n)?;
    }
    if let Some(k) = prelift {
        if k == 0 || n_c % k != 0 || n_v % k != 0 {
            return Err(err(hl, format!("pre-lift size {} does not divide {} x {}", k, n_c, n_v)));
        }
    }
    Ok(QcFile { matrix, prelift })
}

fn cell_text(e: &Entry) -> String {
    match e {
        Entry::Zero => ".".into(),
        Entry::Shifts(v) => v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
    }
}

pub fn render_qc(f: &QcFile) -> String {
    let m = &f.matrix;
    let mut out = match m.n() {
        Some(n) => format!("{} {} {}", n, m.rows(), m.cols()),
        None => format!("unbound {} {}", m.rows(), m.cols()),
    };
    if let Some(k) = f.prelift {
        out.push_str(&format!(" prelift {}", k));
    }
    out.push('\n');
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|r| (0..m.cols()).map(|c| cell_text(m.get(r, c))).collect()).collect();
    let widths: Vec<usize> = (0..m.cols()).map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(1)).collect();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{:>w$}", s, w = w)).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}
