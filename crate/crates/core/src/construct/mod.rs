//! Exponent-matrix constructions meeting a target girth.

mod nmin;
mod recursive;
mod rules;
mod select;

pub use nmin::{nmin_search, Nmin};
pub use recursive::{Doubling, Girth10Recursive};
pub use rules::Rule;
pub use select::{selector_by_name, AboveMax, ExponentSelector, Forbidden, RandomFree, SmallestFree, SELECTOR_NAMES};

use crate::error::{QcError, Result};
use crate::exponent::ExponentMatrix;
use crate::girth::conditions::{evaluate, ConditionReport, ConditionSystem};
use crate::girth::symbolic::{Grid, Reading};

pub const DEFAULT_NMIN_CAP: usize = 20_000;

/// One chosen shift with the values it had to avoid.
#[derive(Clone, Debug)]
pub struct Step {
    pub row: usize,
    pub col: usize,
    pub value: i64,
    pub forbidden: Forbidden,
    /// Free values rejected by the exact condition check.
    pub rejected: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct Draft {
    pub rows: Vec<Vec<i64>>,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub matrix: ExponentMatrix,
    pub target_girth: usize,
    pub algorithm: String,
    pub strategy: String,
    pub monotone: bool,
    pub n_min: Nmin,
    pub steps: Vec<Step>,
    pub conditions: ConditionReport,
}

/// Fills rows left to right: literal forbidden set first, then the exact
/// condition sets touching the cell, evaluated over Z on what is assigned.
pub(crate) struct Filler {
    system: ConditionSystem,
    grid: Grid,
    rows: Vec<Vec<i64>>,
    steps: Vec<Step>,
}

impl Filler {
    pub(crate) fn new(n_c: usize, n_v: usize, g: usize) -> Result<Self> {
        if n_c < 2 || n_v < 2 {
            return Err(QcError::Invalid("need at least 2 rows and 2 columns".into()));
        }
        let system = ConditionSystem::for_girth(n_c, n_v, g)?;
        let mut grid = Grid::empty(n_c, n_v);
        let mut rows = vec![Vec::new(); n_c];
        rows[0] = vec![0; n_v];
        for c in 0..n_v {
            grid.set(0, c, Some(0));
        }
        for (r, row) in rows.iter_mut().enumerate().skip(1) {
            grid.set(r, 0, Some(0));
            row.push(0);
        }
        Ok(Filler { system, grid, rows, steps: Vec::new() })
    }

    pub(crate) fn fill_row(&mut self, row: usize, rule: Option<Rule>, sel: &mut dyn ExponentSelector, monotone: bool) {
        let n_v = self.rows[0].len();
        for col in 1..n_v {
            let forbidden = match rule {
                Some(r) => {
                    let mut probe = self.rows.clone();
                    probe[row].push(0);
                    r.forbidden(&probe, row, col, monotone)
                }
                None => Forbidden::default(),
            };
            let involved = self.system.sets_involving(row, col);
            let mut rejected = Vec::new();
            let (system, grid) = (&self.system, &mut self.grid);
            let value = sel.pick(&forbidden, &mut |c| {
                grid.set(row, col, Some(c));
                let ok = system.violation_in(&involved, grid, None, Reading::Triangle).is_none();
                if !ok {
                    rejected.push(c);
                }
                ok
            });
            self.grid.set(row, col, Some(value));
            self.rows[row].push(value);
            self.steps.push(Step { row, col, value, forbidden, rejected });
        }
    }

    pub(crate) fn finish(self) -> Draft {
        Draft { rows: self.rows, steps: self.steps }
    }
}

/// An exponent-matrix construction selectable by name.
pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn supports(&self, n_c: usize, g: usize) -> bool;
    fn build(&self, n_c: usize, n_v: usize, g: usize, sel: &mut dyn ExponentSelector, monotone: bool) -> Result<Draft>;
}

/// Row-by-row algorithm with a literal rule for each non-trivial row.
pub struct RowAlgorithm {
    name: &'static str,
    describe: &'static str,
    rules: &'static [Rule],
    girths: &'static [usize],
}

impl Construction for RowAlgorithm {
    fn name(&self) -> &'static str {
        self.name
    }

    fn describe(&self) -> &'static str {
        self.describe
    }

    fn supports(&self, n_c: usize, g: usize) -> bool {
        n_c == self.rules.len() + 1 && self.girths.contains(&g)
    }

    fn build(&self, n_c: usize, n_v: usize, g: usize, sel: &mut dyn ExponentSelector, monotone: bool) -> Result<Draft> {
        if !self.supports(n_c, g) {
            return Err(QcError::Unsupported(format!("{} for n_c = {}, girth {}", self.name, n_c, g)));
        }
        let mut f = Filler::new(n_c, n_v, g)?;
        for (r, &rule) in self.rules.iter().enumerate() {
            f.fill_row(r + 1, Some(rule), sel, monotone);
        }
        Ok(f.finish())
    }
}

pub const A2_G4: RowAlgorithm = RowAlgorithm {
    name: "a2-g4",
    describe: "two rows, distinct shifts (girth 8)",
    rules: &[Rule::Distinct],
    girths: &[6, 8],
};

pub const A2_G8: RowAlgorithm = RowAlgorithm {
    name: "a2-g8",
    describe: "two rows, distinct differences (girth 12)",
    rules: &[Rule::Sidon],
    girths: &[6, 8, 10, 12],
};

pub const A3_G4: RowAlgorithm = RowAlgorithm {
    name: "a3-g4",
    describe: "three rows, no 4-cycles",
    rules: &[Rule::Distinct, Rule::NoFour],
    girths: &[6],
};

pub const A4_G4: RowAlgorithm = RowAlgorithm {
    name: "a4-g4",
    describe: "four rows, no 4-cycles",
    rules: &[Rule::Distinct, Rule::NoFour, Rule::NoFour],
    girths: &[6],
};

pub const A3_G6: RowAlgorithm = RowAlgorithm {
    name: "a3-g6",
    describe: "three rows, no 4- or 6-cycles",
    rules: &[Rule::Distinct, Rule::NoSix],
    girths: &[6, 8],
};

pub const A4_G6: RowAlgorithm = RowAlgorithm {
    name: "a4-g6",
    describe: "four rows, no 4- or 6-cycles",
    rules: &[Rule::Distinct, Rule::NoSix, Rule::NoSix],
    girths: &[6, 8],
};

pub const A3_G8: RowAlgorithm = RowAlgorithm {
    name: "a3-g8",
    describe: "three rows, girth 10",
    rules: &[Rule::Sidon, Rule::NoEight],
    girths: &[6, 8, 10],
};

pub const A3_G10: RowAlgorithm = RowAlgorithm {
    name: "a3-g10",
    describe: "three rows, girth 12",
    rules: &[Rule::Sidon, Rule::NoTen],
    girths: &[6, 8, 10, 12],
};

/// Start from the best literal algorithm for the first rows, then add rows by
/// testing candidates against the full condition system.
pub struct Inductive;

impl Inductive {
    fn base(n_c: usize, g: usize) -> &'static [Rule] {
        match (n_c.min(3), g) {
            (2, 6 | 8) => A2_G4.rules,
            (2, 10 | 12) => A2_G8.rules,
            (3, 6) => A3_G4.rules,
            (3, 8) => A3_G6.rules,
            (3, 10) => A3_G8.rules,
            (3, 12) => A3_G10.rules,
            _ => &[],
        }
    }
}

impl Construction for Inductive {
    fn name(&self) -> &'static str {
        "inductive"
    }

    fn describe(&self) -> &'static str {
        "literal rows, then rows chosen against the full condition sets"
    }

    fn supports(&self, n_c: usize, g: usize) -> bool {
        n_c >= 2 && ConditionSystem::for_girth(n_c, 2, g).is_ok()
    }

    fn build(&self, n_c: usize, n_v: usize, g: usize, sel: &mut dyn ExponentSelector, monotone: bool) -> Result<Draft> {
        let mut f = Filler::new(n_c, n_v, g)?;
        let base = Self::base(n_c, g);
        for r in 1..n_c {
            f.fill_row(r, base.get(r - 1).copied(), sel, monotone);
        }
        Ok(f.finish())
    }
}

pub struct ConstructionRegistry {
    items: Vec<Box<dyn Construction>>,
}

impl Default for ConstructionRegistry {
    fn default() -> Self {
        let mut r = ConstructionRegistry { items: Vec::new() };
        for a in [A2_G4, A2_G8, A3_G4, A3_G6, A3_G8, A3_G10, A4_G4, A4_G6] {
            r.register(Box::new(a));
        }
        r.register(Box::new(Inductive));
        r.register(Box::new(Doubling));
        r.register(Box::new(Girth10Recursive));
        r
    }
}

impl ConstructionRegistry {
    pub fn register(&mut self, c: Box<dyn Construction>) {
        self.items.retain(|x| x.name() != c.name());
        self.items.push(c);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Construction> {
        self.items
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| QcError::Invalid(format!("unknown construction '{}' (known: {})", name, self.names().join(", "))))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.items.iter().map(|c| c.name()).collect()
    }

    /// Default algorithm for a shape and girth target.
    pub fn default_for(&self, n_c: usize, g: usize) -> Result<&dyn Construction> {
        let name = match (n_c, g) {
            (2, 6 | 8) => "a2-g4",
            (2, 10 | 12) => "a2-g8",
            (3, 6) => "a3-g4",
            (3, 8) => "a3-g6",
            (3, 10) => "a3-g8",
            (3, 12) => "a3-g10",
            (4, 6) => "a4-g4",
            (4, 8) => "a4-g6",
            _ => "inductive",
        };
        let c = self.get(name)?;
        if !c.supports(n_c, g) {
            return Err(QcError::Unsupported(format!("no construction for n_c = {}, girth {}", n_c, g)));
        }
        Ok(c)
    }
}

/// Run a construction, certify it over Z and search its smallest N.
pub fn construct(
    c: &dyn Construction,
    n_c: usize,
    n_v: usize,
    g: usize,
    sel: &mut dyn ExponentSelector,
    monotone: bool,
    cap: usize,
) -> Result<ConstructionResult> {
    let draft = c.build(n_c, n_v, g, sel, monotone)?;
    certify(draft, c.name(), sel.name(), monotone, g, cap)
}

pub(crate) fn certify(draft: Draft, algorithm: &str, strategy: &str, monotone: bool, g: usize, cap: usize) -> Result<ConstructionResult> {
    let matrix = ExponentMatrix::from_rows(&draft.rows);
    let system = ConditionSystem::for_girth(matrix.rows(), matrix.cols(), g)?;
    let conditions = evaluate(&system, &draft.rows, None, Reading::Triangle);
    if !conditions.passed {
        return Err(QcError::Invalid(format!(
            "{} output fails the girth {} conditions: {}",
            algorithm,
            g,
            conditions.violation.as_ref().map(|v| v.to_string()).unwrap_or_default()
        )));
    }
    let n_min = nmin_search(&matrix, g, cap)?;
    Ok(ConstructionResult {
        matrix,
        target_girth: g,
        algorithm: algorithm.to_string(),
        strategy: strategy.to_string(),
        monotone,
        n_min,
        steps: draft.steps,
        conditions,
    })
}
