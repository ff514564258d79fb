//! Closed-form girth conditions for all-one protographs with one shift per cell.
//!
//! Every condition is a set of linear forms in the (reduced) shifts whose values
//! must be pairwise distinct, mod N for a bound matrix or over Z otherwise.

use super::symbolic::{CondSet, Grid, Lin, Reading, Violation};
use crate::error::{QcError, Result};
use crate::exponent::ExponentMatrix;

#[derive(Clone, Debug)]
pub struct ConditionSystem {
    pub rows: usize,
    pub cols: usize,
    pub girth: usize,
    pub sets: Vec<CondSet>,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub girth: usize,
    pub passed: bool,
    pub violation: Option<Violation>,
    pub sets_checked: usize,
    pub source: String,
}

/// Shift of row `rows[a]` relative to row `rows[0]`, normalised so column 0 is zero.
fn rel(rows: &[usize], a: usize, c: usize) -> Lin {
    if a == 0 {
        return Lin::zero();
    }
    let (r0, ra) = (rows[0], rows[a]);
    Lin::var(ra, c).minus(&Lin::var(r0, c)).minus(&Lin::var(ra, 0)).plus(&Lin::var(r0, 0))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn row_label(rows: &[usize]) -> String {
    let r: Vec<String> = rows.iter().map(|x| (x + 1).to_string()).collect();
    format!("rows {{{}}}", r.join(","))
}

/// {e_b - e_a} distinct over the columns.
fn pair_sets(rows: &[usize], n_v: usize, out: &mut Vec<CondSet>) {
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            let pair = [rows[a], rows[b]];
            let mut s = CondSet::new(format!("{} shifts", row_label(&pair)));
            for c in 0..n_v {
                s.push(rel(&pair, 1, c), format!("col {}", c + 1));
            }
            out.push(s);
        }
    }
}

/// Two rows: {i_u - i_v | u != v} distinct.
fn difference_set(rows: &[usize], n_v: usize, out: &mut Vec<CondSet>) {
    let i = |c| rel(rows, 1, c);
    let mut s = CondSet::new(format!("{} differences", row_label(rows)));
    for u in 0..n_v {
        for v in 0..n_v {
            if u != v {
                s.push(i(u).minus(&i(v)), format!("i{}-i{}", u + 1, v + 1));
            }
        }
    }
    s.exempt.push(Lin::zero());
    out.push(s);
}

/// Two rows, no 12-cycles: {i_u - i_v + i_w | u != v, v != w} distinct apart from single shifts.
fn triple_set(rows: &[usize], n_v: usize, out: &mut Vec<CondSet>) {
    let i = |c| rel(rows, 1, c);
    let mut s = CondSet::new(format!("{} alternating triples", row_label(rows)));
    for u in 0..n_v {
        for v in 0..n_v {
            for w in 0..n_v {
                if u != v && v != w {
                    s.push(i(u).minus(&i(v)).plus(&i(w)), format!("i{}-i{}+i{}", u + 1, v + 1, w + 1));
                }
            }
        }
    }
    s.exempt = (0..n_v).map(i).collect();
    out.push(s);
}

/// No 6-cycles among three or four rows: for each column l the sets
/// {x_l - x_s}, and for each non-zero row y, {y_s} together with {y_s - z_s + z_l}.
fn six_cycle_sets(rows: &[usize], n_v: usize, out: &mut Vec<CondSet>) {
    let k = rows.len();
    let names = ["0", "i", "j", "k"];
    let x = |a: usize, c: usize| rel(rows, a, c);
    for l in 0..n_v {
        let mut s = CondSet::new(format!("{} column {} differences", row_label(rows), l + 1));
        for a in 1..k {
            for sc in (0..n_v).filter(|&sc| sc != l) {
                s.push(x(a, l).minus(&x(a, sc)), format!("{n}{}-{n}{}", l + 1, sc + 1, n = names[a]));
            }
        }
        s.exempt.push(Lin::zero());
        out.push(s);
        for y in 1..k {
            let mut s = CondSet::new(format!("{} column {} row {}", row_label(rows), l + 1, names[y]));
            for sc in (0..n_v).filter(|&sc| sc != l) {
                s.push(x(y, sc), format!("{}{}", names[y], sc + 1));
                for z in (1..k).filter(|&z| z != y) {
                    let f = x(y, sc).minus(&x(z, sc)).plus(&x(z, l));
                    s.push(f, format!("{y}{s}-{z}{s}+{z}{l}", y = names[y], z = names[z], s = sc + 1, l = l + 1));
                }
            }
            s.exempt.push(x(y, l));
            out.push(s);
        }
    }
}

/// Three rows, no 8-cycles: three pooled difference sets.
fn eight_cycle_sets(rows: &[usize], n_v: usize, out: &mut Vec<CondSet>) {
    let i = |c| rel(rows, 1, c);
    let j = |c| rel(rows, 2, c);
    let ij = |c: usize| i(c).minus(&j(c));
    type F<'a> = (&'a str, Box<dyn Fn(usize) -> Lin + 'a>);
    let pools: [[F; 2]; 3] = [
        [("i", Box::new(i)), ("j", Box::new(j))],
        [("i", Box::new(i)), ("(i-j)", Box::new(ij))],
        [("j", Box::new(j)), ("(i-j)", Box::new(ij))],
    ];
    for (idx, pool) in pools.iter().enumerate() {
        let mut s = CondSet::new(format!("{} pooled differences {}", row_label(rows), idx + 1));
        for (name, f) in pool {
            for u in 0..n_v {
                for v in (0..n_v).filter(|&v| v != u) {
                    s.push(f(u).minus(&f(v)), format!("{n}{}-{n}{}", u + 1, v + 1, n = name));
                }
            }
        }
        s.exempt.push(Lin::zero());
        out.push(s);
    }
}

/// Three rows, no 10-cycles: for each column l three groups of four sets,
/// generated over u != v with the index of a difference term != l.
fn ten_cycle_sets(rows: &[usize], n_v: usize, out: &mut Vec<CondSet>) {
    let i = |c| rel(rows, 1, c);
    let j = |c| rel(rows, 2, c);
    let pairs: Vec<(usize, usize)> = (0..n_v).flat_map(|u| (0..n_v).map(move |v| (u, v))).filter(|(u, v)| u != v).collect();
    for l in 0..n_v {
        let lab = |g: usize| format!("{} column {} group {}", row_label(rows), l + 1, g);
        let t = |u: usize, v: usize| format!("u={},v={}", u + 1, v + 1);

        let mut s = CondSet::new(lab(1));
        for &(u, v) in &pairs {
            if u != l {
                s.push(i(u).minus(&i(v)), format!("i_u-i_v {}", t(u, v)));
                s.push(j(u).minus(&j(v)), format!("j_u-j_v {}", t(u, v)));
            }
            if v != l {
                s.push(i(l).minus(&i(v)).plus(&j(v)).minus(&j(u)), format!("i_l-i_v+j_v-j_u {}", t(u, v)));
                s.push(j(l).minus(&j(v)).plus(&i(v)).minus(&i(u)), format!("j_l-j_v+i_v-i_u {}", t(u, v)));
            }
        }
        s.exempt.push(Lin::zero());
        for u in 0..n_v {
            s.exempt.push(i(l).minus(&i(u)));
            s.exempt.push(j(l).minus(&j(u)));
        }
        out.push(s);

        let mut s = CondSet::new(lab(2));
        for &(u, v) in pairs.iter().filter(|&&(_, v)| v != l) {
            s.push(i(u).minus(&j(u)).plus(&j(v)), format!("i_u-j_u+j_v {}", t(u, v)));
            s.push(i(u).minus(&i(v)).plus(&i(l)), format!("i_u-i_v+i_l {}", t(u, v)));
            s.push(i(u).minus(&j(u)).minus(&i(v)).plus(&j(v)).plus(&i(l)), format!("i_u-j_u-i_v+j_v+i_l {}", t(u, v)));
            s.push(i(u).minus(&j(v)).plus(&j(l)), format!("i_u-j_v+j_l {}", t(u, v)));
        }
        s.exempt.push(i(l));
        for u in 0..n_v {
            s.exempt.push(i(u));
            s.exempt.push(j(l).plus(&i(u)).minus(&j(u)));
        }
        out.push(s);

        let mut s = CondSet::new(lab(3));
        for &(u, v) in pairs.iter().filter(|&&(_, v)| v != l) {
            s.push(j(u).minus(&i(u)).plus(&i(v)), format!("j_u-i_u+i_v {}", t(u, v)));
            s.push(j(u).minus(&i(v)).plus(&i(l)), format!("j_u-i_v+i_l {}", t(u, v)));
            s.push(j(u).minus(&j(v)).plus(&j(l)), format!("j_u-j_v+j_l {}", t(u, v)));
            s.push(j(u).minus(&i(u)).plus(&i(v)).minus(&j(v)).plus(&j(l)), format!("j_u-i_u+i_v-j_v+j_l {}", t(u, v)));
        }
        s.exempt.push(j(l));
        for u in 0..n_v {
            s.exempt.push(j(u));
            s.exempt.push(i(l).plus(&j(u)).minus(&i(u)));
        }
        out.push(s);
    }
}

/// Expansion of C^m H^p triangle (I + ... + C^(m-1)) H^p, block by block, for
/// t = 2m + p from 2 up to `t_max`.
pub fn expansion_sets(rows: &[usize], n_v: usize, t_max: usize, out: &mut Vec<CondSet>) {
    let k = rows.len();
    let r = |a: usize, c: usize| rel(rows, a, c);
    // walks[m] = (start, end, form, tag) for products of m C-blocks
    let mut walks: Vec<Vec<(usize, usize, Lin, String)>> = vec![(0..k).map(|a| (a, a, Lin::zero(), format!("{}", a + 1))).collect()];
    for m in 1..=t_max / 2 {
        let mut next = Vec::new();
        for (s, e, f, tag) in &walks[m - 1] {
            for x in (0..k).filter(|&x| x != *e) {
                for u in 0..n_v {
                    let g = f.plus(&r(*e, u)).minus(&r(x, u));
                    next.push((*s, x, g, format!("{}>{}[{}]", tag, x + 1, u + 1)));
                }
            }
        }
        walks.push(next);
    }
    for t in 2..=t_max {
        let (m, odd) = (t / 2, t % 2 == 1);
        let targets = if odd { n_v } else { k };
        for a in 0..k {
            for b in 0..targets {
                let close = |e: usize, f: &Lin| -> Option<Lin> {
                    if odd {
                        Some(f.plus(&r(e, b)))
                    } else if e == b {
                        Some(f.clone())
                    } else {
                        None
                    }
                };
                let kind = if odd { "col" } else { "row" };
                let mut s = CondSet::new(format!("{} t={} block (row {}, {} {})", row_label(rows), t, a + 1, kind, b + 1));
                for (st, e, f, tag) in &walks[m] {
                    if *st == a {
                        if let Some(g) = close(*e, f) {
                            s.push(g, tag.clone());
                        }
                    }
                }
                for lower in &walks[..m] {
                    for (st, e, f, _) in lower {
                        if *st == a {
                            if let Some(g) = close(*e, f) {
                                s.exempt.push(g);
                            }
                        }
                    }
                }
                // terms identical to a right-hand monomial can never violate
                let exempt: std::collections::HashSet<&Lin> = s.exempt.iter().collect();
                let terms = std::mem::take(&mut s.terms);
                s.terms = terms.into_iter().filter(|t| !exempt.contains(&t.form)).collect();
                if s.terms.len() > 1 {
                    out.push(s);
                }
            }
        }
    }
}

impl ConditionSystem {
    /// Condition sets for girth >= g of an n_c x n_v all-one protograph.
    pub fn for_girth(n_c: usize, n_v: usize, g: usize) -> Result<Self> {
        if g < 4 || g % 2 == 1 {
            return Err(QcError::Invalid(format!("girth target {} must be even and at least 4", g)));
        }
        let mut sets = Vec::new();
        let mut source = String::from("trivial");
        if n_c >= 2 && n_v >= 2 && g > 4 {
            let m = g / 2 - 1;
            let size = m.min(n_c);
            source = match (size, g) {
                (2, 6 | 8) => "2-row shift sets".into(),
                (2, 10 | 12) => "2-row difference sets".into(),
                (2, 14) => "2-row difference and triple sets".into(),
                (3, 8) | (4, 8) => "6-cycle column sets".into(),
                (3, 10) => "3-row pooled difference sets".into(),
                (3, 12) => "3-row pooled difference and column group sets".into(),
                (4, 10 | 12) | (5, 12) => "block expansion of C_H powers".into(),
                _ => return Err(QcError::Unsupported(format!("condition sets for n_c = {}, girth {}", n_c, g))),
            };
            for rows in subsets(n_c, size) {
                pair_sets(&rows, n_v, &mut sets);
                match (size, g) {
                    (2, 10 | 12) => difference_set(&rows, n_v, &mut sets),
                    (2, 14) => {
                        difference_set(&rows, n_v, &mut sets);
                        triple_set(&rows, n_v, &mut sets);
                    }
                    (3, 8) | (4, 8) => six_cycle_sets(&rows, n_v, &mut sets),
                    (3, 10) => eight_cycle_sets(&rows, n_v, &mut sets),
                    (3, 12) => {
                        eight_cycle_sets(&rows, n_v, &mut sets);
                        ten_cycle_sets(&rows, n_v, &mut sets);
                    }
                    (4, _) | (5, _) => expansion_sets(&rows, n_v, g / 2 - 1, &mut sets),
                    _ => {}
                }
            }
        }
        Ok(ConditionSystem { rows: n_c, cols: n_v, girth: g, sets, source })
    }

    /// The C_H power expansion for every row subset, valid for any girth target.
    pub fn expansion(n_c: usize, n_v: usize, g: usize) -> Self {
        let mut sets = Vec::new();
        if n_c >= 2 && g > 4 {
            let m = g / 2 - 1;
            for rows in subsets(n_c, m.min(n_c)) {
                expansion_sets(&rows, n_v, m, &mut sets);
            }
        }
        ConditionSystem { rows: n_c, cols: n_v, girth: g, sets, source: "block expansion of C_H powers".into() }
    }

    pub fn first_violation(&self, grid: &Grid, modulus: Option<usize>, reading: Reading) -> Option<Violation> {
        self.sets.iter().find_map(|s| s.violation(grid, modulus, reading))
    }

    /// Indices of sets that mention the shift at (row, col).
    pub fn sets_involving(&self, row: usize, col: usize) -> Vec<usize> {
        (0..self.sets.len()).filter(|&i| self.sets[i].involves(row, col)).collect()
    }

    pub fn violation_in(&self, which: &[usize], grid: &Grid, modulus: Option<usize>, reading: Reading) -> Option<Violation> {
        which.iter().find_map(|&i| self.sets[i].violation(grid, modulus, reading))
    }
}

/// Evaluate the closed-form conditions for girth >= g.
pub fn check_conditions(e: &ExponentMatrix, g: usize) -> Result<ConditionReport> {
    check_conditions_with(e, g, Reading::default())
}

pub fn check_conditions_with(e: &ExponentMatrix, g: usize, reading: Reading) -> Result<ConditionReport> {
    let shifts = e.single_shifts().ok_or_else(|| {
        QcError::Unsupported("condition sets need an all-one protograph with one shift per cell".into())
    })?;
    let system = ConditionSystem::for_girth(e.rows(), e.cols(), g)?;
    Ok(evaluate(&system, &shifts, e.n(), reading))
}

pub fn evaluate(system: &ConditionSystem, shifts: &[Vec<i64>], modulus: Option<usize>, reading: Reading) -> ConditionReport {
    let grid = Grid::full(shifts);
    let violation = system.first_violation(&grid, modulus, reading);
    ConditionReport {
        girth: system.girth,
        passed: violation.is_none(),
        violation,
        sets_checked: system.sets.len(),
        source: system.source.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(rows: &[Vec<i64>], n: Option<usize>, g: usize) -> bool {
        let mut e = ExponentMatrix::from_rows(rows);
        if let Some(n) = n {
            e = e.bind(n).unwrap();
        }
        check_conditions(&e, g).unwrap().passed
    }

    #[test]
    fn two_rows() {
        let r = vec![vec![0; 8], vec![0, 1, 2, 3, 4, 5, 6, 7]];
        assert!(check(&r, Some(8), 8));
        assert!(!check(&r, Some(8), 10));
        let r = vec![vec![0; 8], vec![0, 1, 3, 7, 12, 20, 30, 44]];
        assert!(check(&r, Some(77), 12));
        assert!(check(&r, None, 12));
        assert!(!check(&r, None, 14));
    }

    #[test]
    fn four_cycle_reported() {
        let r = vec![vec![0, 0, 0], vec![0, 2, 2]];
        let rep = check_conditions(&ExponentMatrix::from_rows(&r), 6).unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.violation.unwrap().value, 2);
    }

    #[test]
    fn unsupported_shapes() {
        let e = ExponentMatrix::from_rows(&[vec![0, 0], vec![0, 1], vec![0, 2]]);
        assert!(matches!(check_conditions(&e, 14), Err(QcError::Unsupported(_))));
        let masked = ExponentMatrix::from_optional_rows(&[vec![Some(0), None], vec![Some(0), Some(1)]]);
        assert!(check_conditions(&masked, 6).is_err());
    }
}
