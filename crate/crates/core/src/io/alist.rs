//! MacKay alist: "cols rows", max degrees, degree lists, then 1-based
//! neighbour lists per column and per row, zero padded.

use crate::error::{QcError, Result};
use crate::matrix::SparseBinary;
use std::fmt::Write;

fn line_of(v: &[usize], width: usize) -> String {
    let mut items: Vec<String> = v.iter().map(|x| (x + 1).to_string()).collect();
    items.resize(width, "0".into());
    items.join(" ")
}

pub fn render_alist(h: &SparseBinary) -> String {
    let cols = h.col_lists();
    let rows: Vec<&[usize]> = (0..h.rows()).map(|r| h.row(r)).collect();
    let max_c = cols.iter().map(|c| c.len()).max().unwrap_or(0);
    let max_r = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut out = String::new();
    let join = |v: Vec<usize>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(out, "{} {}", h.cols(), h.rows()).unwrap();
    writeln!(out, "{} {}", max_c, max_r).unwrap();
    writeln!(out, "{}", join(cols.iter().map(|c| c.len()).collect())).unwrap();
    writeln!(out, "{}", join(rows.iter().map(|r| r.len()).collect())).unwrap();
    for c in &cols {
        writeln!(out, "{}", line_of(c, max_c)).unwrap();
    }
    for r in &rows {
        writeln!(out, "{}", line_of(r, max_r)).unwrap();
    }
    out
}

pub fn parse_alist(text: &str) -> Result<SparseBinary> {
    let mut toks = text.split_whitespace().map(|t| {
        t.parse::<usize>().map_err(|_| QcError::Parse { line: 0, msg: format!("bad alist token '{}'", t) })
    });
    let mut next = || toks.next().unwrap_or_else(|| Err(QcError::Parse { line: 0, msg: "truncated alist".into() }));
    let (n, m) = (next()?, next()?);
    let (max_c, max_r) = (next()?, next()?);
    let col_deg = (0..n).map(|_| next()).collect::<Result<Vec<_>>>()?;
    let row_deg = (0..m).map(|_| next()).collect::<Result<Vec<_>>>()?;
    let mut col_lists = Vec::with_capacity(n);
    for &d in &col_deg {
        let v: Vec<usize> = (0..max_c).map(|_| next()).collect::<Result<Vec<_>>>()?.into_iter().filter(|&x| x > 0).map(|x| x - 1).collect();
        if v.len() != d || v.iter().any(|&r| r >= m) {
            return Err(QcError::Parse { line: 0, msg: "column list disagrees with its degree".into() });
        }
        col_lists.push(v);
    }
    let mut rows = Vec::with_capacity(m);
    for &d in &row_deg {
        let mut v: Vec<usize> = (0..max_r).map(|_| next()).collect::<Result<Vec<_>>>()?.into_iter().filter(|&x| x > 0).map(|x| x - 1).collect();
        v.sort_unstable();
        if v.len() != d || v.iter().any(|&c| c >= n) {
            return Err(QcError::Parse { line: 0, msg: "row list disagrees with its degree".into() });
        }
        rows.push(v);
    }
    let h = SparseBinary::from_row_lists(n, rows);
    let mut from_cols = h.col_lists();
    for c in &mut from_cols {
        c.sort_unstable();
    }
    for c in &mut col_lists {
        c.sort_unstable();
    }
    if from_cols != col_lists {
        return Err(QcError::Parse { line: 0, msg: "row and column lists disagree".into() });
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::BlockMatrix;
    use crate::circ::CircPoly;

    #[test]
    fn projective_plane() {
        let h = BlockMatrix::from_cells(1, 1, 7, vec![CircPoly::from_exponents(7, &[0, 1, 3])]).unwrap().expand().unwrap();
        let text = render_alist(&h);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("7 7"));
        assert_eq!(lines.next(), Some("3 3"));
        assert_eq!(lines.next(), Some("3 3 3 3 3 3 3"));
        assert_eq!(parse_alist(&text).unwrap(), h);
    }

    #[test]
    fn padding_and_errors() {
        let h = SparseBinary::from_row_lists(3, vec![vec![0, 1, 2], vec![1]]);
        let text = render_alist(&h);
        assert!(text.contains("2 0 0\n"));
        assert_eq!(parse_alist(&text).unwrap(), h);
        assert!(parse_alist("3 2\n2 3\n").is_err());
        let bad = text.replacen("2 0 0", "1 0 0", 1);
        assert!(parse_alist(&bad).is_err());
    }
}
