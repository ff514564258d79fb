//! Literal forbidden sets of the row-by-row exponent algorithms.
//!
//! Rows are indexed 0..n_c with row 0 all zero; `i`, `j`, `k` are rows 1, 2, 3.

use super::select::Forbidden;
use std::ops::{Add, Neg, Sub};

/// Affine value c + m*x where x is the shift being chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Af(i64, i64);

impl Add for Af {
    type Output = Af;
    fn add(self, o: Af) -> Af {
        Af(self.0 + o.0, self.1 + o.1)
    }
}

impl Sub for Af {
    type Output = Af;
    fn sub(self, o: Af) -> Af {
        Af(self.0 - o.0, self.1 - o.1)
    }
}

impl Neg for Af {
    type Output = Af;
    fn neg(self) -> Af {
        Af(-self.0, -self.1)
    }
}

/// Forbid x = f, i.e. (1 - m) x != c.
fn forbid(out: &mut Forbidden, f: Af) {
    match 1 - f.1 {
        1 => {
            out.values.insert(f.0);
        }
        2 => {
            out.doubled.insert(f.0);
        }
        _ => {}
    }
}

/// Read access to a partially filled matrix; the cell being chosen reads as x.
struct View<'a> {
    rows: &'a [Vec<i64>],
    row: usize,
    col: usize,
}

impl View<'_> {
    fn at(&self, r: usize, c: usize) -> Af {
        if r == self.row && c == self.col {
            Af(0, 1)
        } else {
            Af(self.rows[r][c], 0)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Shifts in the row are distinct.
    Distinct,
    /// Differences within the row are distinct.
    Sidon,
    /// Rows 2 and 3 avoiding 4-cycles against earlier rows.
    NoFour,
    /// Rows 2 and 3 avoiding 4- and 6-cycles.
    NoSix,
    /// Row 2 avoiding cycles up to length 8.
    NoEight,
    /// Row 2 avoiding cycles up to length 10.
    NoTen,
}

impl Rule {
    /// Forbidden values for cell (row, col), all earlier cells assigned.
    pub fn forbidden(self, rows: &[Vec<i64>], row: usize, col: usize, monotone: bool) -> Forbidden {
        let v = View { rows, row, col };
        let n_v = rows[1].len();
        let l = col;
        let mut out = Forbidden::default();
        let f = &mut out;
        match (self, row) {
            (Rule::Distinct, _) => {
                for a in 0..l {
                    forbid(f, v.at(row, a));
                }
            }
            (Rule::Sidon, _) => {
                for u in 0..l {
                    for s in 0..l {
                        for t in 0..l {
                            forbid(f, v.at(row, u) + v.at(row, s) - v.at(row, t));
                        }
                    }
                }
            }
            (Rule::NoFour, 2) => {
                let (i, j) = (|c| v.at(1, c), |c| v.at(2, c));
                for a in 0..l {
                    forbid(f, j(a));
                    forbid(f, i(l) + j(a) - i(a));
                }
            }
            (Rule::NoFour, 3) => {
                let (i, j, k) = (|c| v.at(1, c), |c| v.at(2, c), |c| v.at(3, c));
                for a in 0..l {
                    forbid(f, k(a));
                    forbid(f, i(l) + k(a) - i(a));
                    forbid(f, j(l) + k(a) - j(a));
                }
            }
            (Rule::NoSix, 2) => {
                let (i, j) = (|c| v.at(1, c), |c| v.at(2, c));
                for a in 0..l {
                    forbid(f, j(a));
                    for t in 0..n_v {
                        forbid(f, i(t) + j(a) - i(a));
                        forbid(f, i(l) + j(a) - i(t));
                    }
                }
            }
            (Rule::NoSix, 3) => {
                let (i, j, k) = (|c| v.at(1, c), |c| v.at(2, c), |c| v.at(3, c));
                for s in 0..l {
                    for t in 0..n_v {
                        forbid(f, i(l) + (k(s) - i(t)));
                        forbid(f, j(l) + (k(s) - j(t)));
                        forbid(f, i(t) + (k(s) - i(s)));
                        forbid(f, j(t) + (k(s) - j(s)));
                        forbid(f, j(l) + (k(s) - i(s)) + (i(t) - j(t)));
                        forbid(f, i(l) + (k(s) - j(s)) + (j(t) - i(t)));
                    }
                }
            }
            (Rule::NoEight, 2) => {
                let (i, j) = (|c| v.at(1, c), |c| v.at(2, c));
                let tn = if monotone { l } else { l + 1 };
                for u in 0..l {
                    for a in 0..n_v {
                        for b in 0..n_v {
                            forbid(f, j(u) + i(a) - i(b));
                            forbid(f, i(l) + i(a) - i(b) + (j(u) - i(u)));
                        }
                    }
                    for s in 0..l {
                        for t in 0..tn {
                            forbid(f, j(u) + j(s) - j(t));
                            forbid(f, j(u) + (j(s) - i(s)) - (j(t) - i(t)));
                            forbid(f, i(l) + (j(u) - i(u)) + (j(s) - i(s)) - (j(t) - i(t)));
                            forbid(f, i(l) + j(s) - j(t) + (j(u) - i(u)));
                        }
                    }
                }
            }
            (Rule::NoTen, 2) => {
                let (i, j) = (|c| v.at(1, c), |c| v.at(2, c));
                let tn = if monotone { l } else { l + 1 };
                for s in 0..l {
                    for a in 0..n_v {
                        for b in 0..n_v {
                            forbid(f, i(a) - i(b) + j(s));
                            for c in 0..n_v {
                                forbid(f, i(a) + i(b) - i(c) + (j(s) - i(s)));
                                forbid(f, i(l) + i(a) - i(b) - i(c) + j(s));
                            }
                        }
                    }
                    for u in 0..l {
                        for t in 0..tn {
                            forbid(f, j(s) - (j(t) - i(t)) + (j(u) - i(u)));
                            forbid(f, j(s) + j(u) - j(t));
                            for a in 0..n_v {
                                forbid(f, i(a) + j(s) - j(t) + (j(u) - i(u)));
                                forbid(f, -i(a) + j(s) + j(u) - (j(t) - i(t)));
                                forbid(f, i(a) + (j(s) - i(s)) - (j(t) - i(t)) + (j(u) - i(u)));
                                forbid(f, i(l) + i(a) - j(t) + (j(s) - i(s)) + (j(u) - i(u)));
                                forbid(f, i(l) - i(a) + j(s) - (j(t) - i(t)) + (j(u) - i(u)));
                                forbid(f, i(l) - i(a) + j(s) + j(u) - j(t));
                            }
                        }
                    }
                }
            }
            _ => {}
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_forbid() {
        let mut f = Forbidden::default();
        forbid(&mut f, Af(4, 0));
        forbid(&mut f, Af(6, -1));
        forbid(&mut f, Af(9, 1));
        assert!(f.contains(4) && f.contains(3));
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn sidon_prefix() {
        let rows = vec![vec![0; 4], vec![0, 1, 3, 0]];
        let f = Rule::Sidon.forbidden(&rows, 1, 3, true);
        let vals: Vec<i64> = f.values.into_iter().filter(|&v| v > 0).collect();
        assert_eq!(vals, vec![1, 2, 3, 4, 5, 6]);
    }
}
