//! Girth methods selectable by name.

use super::bfs::girth_bfs_capped;
use super::bt::{girth_via_bt, BtForm};
use super::conditions::{check_conditions, ConditionSystem};
use super::cycles::girth_via_cycle_sums;
use super::{Girth, GirthReport};
use crate::error::{QcError, Result};
use crate::exponent::ExponentMatrix;

pub trait GirthMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    /// Girth of a bound matrix, searching cycles up to length `max_girth`.
    fn girth(&self, h: &ExponentMatrix, max_girth: usize) -> Result<GirthReport>;
}

pub struct Bt(pub BtForm);

impl GirthMethod for Bt {
    fn name(&self) -> &'static str {
        match self.0 {
            BtForm::Power => "bt",
            BtForm::Raw => "bt-raw",
        }
    }

    fn describe(&self) -> &'static str {
        match self.0 {
            BtForm::Power => "triangle test on powers of C_H",
            BtForm::Raw => "triangle test on the B_t recursion",
        }
    }

    fn girth(&self, h: &ExponentMatrix, max_girth: usize) -> Result<GirthReport> {
        Ok(girth_via_bt(&h.to_block()?, max_girth / 2, self.0))
    }
}

pub struct Bfs;

impl GirthMethod for Bfs {
    fn name(&self) -> &'static str {
        "bfs"
    }

    fn describe(&self) -> &'static str {
        "breadth-first search on the expanded Tanner graph"
    }

    fn girth(&self, h: &ExponentMatrix, max_girth: usize) -> Result<GirthReport> {
        let block = h.to_block()?;
        if block.max_coeff() >= 2 {
            return Ok(GirthReport { girth: Girth::Finite(2), method: "bfs".into(), witness: None });
        }
        Ok(girth_bfs_capped(&block.expand()?, Some(max_girth)))
    }
}

pub struct CycleSums;

impl GirthMethod for CycleSums {
    fn name(&self) -> &'static str {
        "cycles"
    }

    fn describe(&self) -> &'static str {
        "closed-walk shift sums in the protograph"
    }

    fn girth(&self, h: &ExponentMatrix, max_girth: usize) -> Result<GirthReport> {
        girth_via_cycle_sums(h, max_girth)
    }
}

pub struct Conditions;

impl GirthMethod for Conditions {
    fn name(&self) -> &'static str {
        "conditions"
    }

    fn describe(&self) -> &'static str {
        "closed-form condition sets (all-one protographs)"
    }

    fn girth(&self, h: &ExponentMatrix, max_girth: usize) -> Result<GirthReport> {
        h.require_n()?;
        let mut last_pass = 4;
        for g in (6..=max_girth).step_by(2) {
            if ConditionSystem::for_girth(h.rows(), h.cols(), g).is_err() {
                break;
            }
            let rep = check_conditions(h, g)?;
            if !rep.passed {
                let witness = rep.violation.map(|v| super::Witness::Collision {
                    set: v.set,
                    first: v.first,
                    second: v.second,
                    value: v.value,
                });
                return Ok(GirthReport { girth: Girth::Finite(g - 2), method: "conditions".into(), witness });
            }
            last_pass = g;
        }
        Ok(GirthReport { girth: Girth::Exceeds(last_pass - 2).capped(max_girth), method: "conditions".into(), witness: None })
    }
}

pub struct GirthRegistry {
    methods: Vec<Box<dyn GirthMethod>>,
}

impl Default for GirthRegistry {
    fn default() -> Self {
        let mut r = GirthRegistry { methods: Vec::new() };
        r.register(Box::new(Bt(BtForm::Power)));
        r.register(Box::new(Bt(BtForm::Raw)));
        r.register(Box::new(Bfs));
        r.register(Box::new(CycleSums));
        r.register(Box::new(Conditions));
        r
    }
}

impl GirthRegistry {
    pub fn register(&mut self, m: Box<dyn GirthMethod>) {
        self.methods.retain(|x| x.name() != m.name());
        self.methods.push(m);
    }

    pub fn get(&self, name: &str) -> Result<&dyn GirthMethod> {
        self.methods
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
            .ok_or_else(|| QcError::Invalid(format!("unknown girth method '{}' (known: {})", name, self.names().join(", "))))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }
}
