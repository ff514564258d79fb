//! Small sub-patterns of a pre-lift protograph that cap the achievable girth.

use crate::error::Result;
use crate::exponent::ExponentMatrix;
use crate::girth::bfs::girth_bfs_oracle;
use crate::girth::Girth;
use crate::matrix::SparseBinary;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Structure {
    AllOne2x3,
    X,
    Y,
    Z,
    T,
}

impl Structure {
    pub const ALL: [Structure; 5] = [Structure::AllOne2x3, Structure::X, Structure::Y, Structure::Z, Structure::T];

    pub fn pattern(self) -> &'static [&'static [u8]] {
        match self {
            Structure::AllOne2x3 => &[&[1, 1, 1], &[1, 1, 1]],
            Structure::X => &[&[1, 1, 1], &[1, 1, 0], &[1, 0, 1]],
            Structure::Y => &[&[1, 1], &[1, 1]],
            Structure::Z => &[&[1, 1, 1, 1], &[1, 1, 0, 0], &[0, 0, 1, 1]],
            Structure::T => &[&[1, 1, 1, 0], &[1, 1, 0, 1], &[0, 0, 1, 1]],
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::AllOne2x3 => write!(f, "2x3 all-one"),
            s => write!(f, "{:?}", s),
        }
    }
}

/// Rows and columns of the pattern, listed in the structure's own order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Occurrence {
    pub kind: Structure,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureScan {
    pub found: Vec<Occurrence>,
}

impl StructureScan {
    pub fn contains(&self, s: Structure) -> bool {
        self.found.iter().any(|o| o.kind == s)
    }

    pub fn count(&self, s: Structure) -> usize {
        self.found.iter().filter(|o| o.kind == s).count()
    }
}

/// Support of an exponent matrix: true where the cell is non-zero.
pub fn support_pattern(e: &ExponentMatrix) -> Vec<Vec<bool>> {
    e.protograph().into_iter().map(|r| r.into_iter().map(|w| w > 0).collect()).collect()
}

fn ordered_tuples(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut dyn FnMut(&[usize])) {
    if prefix.len() == k {
        out(prefix);
        return;
    }
    for i in 0..n {
        if !prefix.contains(&i) {
            prefix.push(i);
            ordered_tuples(n, k, prefix, out);
            prefix.pop();
        }
    }
}

fn assign_cols(cands: &[Vec<usize>], used: &mut Vec<usize>, out: &mut dyn FnMut(&[usize])) {
    if used.len() == cands.len() {
        out(used);
        return;
    }
    for &c in &cands[used.len()] {
        if !used.contains(&c) {
            used.push(c);
            assign_cols(cands, used, out);
            used.pop();
        }
    }
}

/// Every placement of each structure whose ones land on ones of `p`, up to
/// row and column permutation. Each distinct row/column set is listed once.
pub fn scan_structures(p: &[Vec<bool>]) -> StructureScan {
    let rows = p.len();
    let cols = p.first().map_or(0, |r| r.len());
    let mut found = BTreeSet::new();
    for kind in Structure::ALL {
        let pat = kind.pattern();
        let mut seen = BTreeSet::new();
        ordered_tuples(rows, pat.len(), &mut Vec::new(), &mut |rs| {
            let cands: Vec<Vec<usize>> = (0..pat[0].len())
                .map(|j| (0..cols).filter(|&c| (0..pat.len()).all(|i| pat[i][j] == 0 || p[rs[i]][c])).collect())
                .collect();
            if cands.iter().any(|c| c.is_empty()) {
                return;
            }
            assign_cols(&cands, &mut Vec::new(), &mut |cs| {
                let mut key = (rs.to_vec(), cs.to_vec());
                key.0.sort_unstable();
                key.1.sort_unstable();
                if seen.insert(key) {
                    found.insert(Occurrence { kind, rows: rs.to_vec(), cols: cs.to_vec() });
                }
            });
        });
    }
    StructureScan { found: found.into_iter().collect() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A sufficient condition holds: some N reaches the target.
    Guaranteed,
    /// No sufficient condition applies; the target may still be reachable.
    NotGuaranteed,
    /// A 2x3 all-one block caps every circulant completion at girth 12.
    Blocked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admission {
    pub target: usize,
    pub verdict: Verdict,
    pub pattern_girth: Girth,
    pub reason: String,
}

impl Admission {
    pub fn admits(&self) -> bool {
        self.verdict == Verdict::Guaranteed
    }
}

impl fmt::Display for Admission {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.verdict {
            Verdict::Guaranteed => "guaranteed",
            Verdict::NotGuaranteed => "not guaranteed",
            Verdict::Blocked => "blocked",
        };
        write!(f, "girth-{} {} ({})", self.target, v, self.reason)
    }
}

/// Sufficient conditions on the pre-lift pattern for reaching girth `g` > 12.
pub fn prelift_admits_girth(p: &[Vec<bool>], g: usize) -> Result<Admission> {
    let rows: Vec<Vec<usize>> = p.iter().map(|r| (0..r.len()).filter(|&c| r[c]).collect()).collect();
    let cols = p.first().map_or(0, |r| r.len());
    let b = SparseBinary::from_row_lists(cols, rows);
    let pattern_girth = girth_bfs_oracle(&b).girth;
    let pg = match pattern_girth {
        Girth::Finite(x) => format!("pre-lift girth {}", x),
        _ => "pre-lift acyclic".to_string(),
    };
    let done = |verdict, reason: String| Ok(Admission { target: g, verdict, pattern_girth, reason });
    if g > 12 && has_all_one_2x3(p) {
        return done(Verdict::Blocked, "2x3 all-one present".into());
    }
    let row_deg: BTreeSet<usize> = (0..b.rows()).map(|r| b.row(r).len()).collect();
    let col_deg: BTreeSet<usize> = b.col_lists().iter().map(|c| c.len()).collect();
    if row_deg.len() > 1 || col_deg.len() > 1 {
        return done(Verdict::NotGuaranteed, format!("irregular pattern, {}", pg));
    }
    let need = match g {
        14 | 16 | 18 => 6,
        20 | 22 => 8,
        _ => return done(Verdict::NotGuaranteed, format!("no sufficient condition for girth {}, {}", g, pg)),
    };
    if pattern_girth.at_least(need) {
        done(Verdict::Guaranteed, pg)
    } else {
        done(Verdict::NotGuaranteed, pg)
    }
}

fn has_all_one_2x3(p: &[Vec<bool>]) -> bool {
    (0..p.len()).any(|a| (a + 1..p.len()).any(|b| p[a].iter().zip(&p[b]).filter(|(x, y)| **x && **y).count() >= 3))
}
