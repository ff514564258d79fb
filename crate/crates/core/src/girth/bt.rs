//! Girth from the matrices B_t = (H H^T)^floor(t/2) H^(t mod 2):
//! girth(H) > 2l iff B_t triangle B_{t-2} = 0 for t = 2..l.

use super::{Girth, GirthReport, Witness};
use crate::block::{compute_ch, triangle_violation, BlockMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BtForm {
    /// C_H^m H^p triangle (I + C_H + ... + C_H^(m-1)) H^p.
    Power,
    /// The B_t recursion itself.
    Raw,
}

pub fn girth_via_bt(h: &BlockMatrix, l_max: usize, form: BtForm) -> GirthReport {
    let method = match form {
        BtForm::Power => "bt",
        BtForm::Raw => "bt-raw",
    };
    let report = |girth, witness| GirthReport { girth, method: method.into(), witness };
    for (idx, p) in h.cells().iter().enumerate() {
        if let Some(e) = p.coeffs().iter().position(|&c| c >= 2) {
            let w = Witness::ParallelEdges { block_row: idx / h.cols(), block_col: idx % h.cols(), exponent: e };
            return report(Girth::Finite(2), Some(w));
        }
    }
    let steps: Box<dyn Iterator<Item = (usize, BlockMatrix, BlockMatrix)>> = match form {
        BtForm::Power => Box::new(PowerSteps::new(h)),
        BtForm::Raw => Box::new(RawSteps::new(h)),
    };
    for (t, lhs, rhs) in steps.take(l_max.saturating_sub(1)) {
        if let Some((block_row, block_col, exponent)) = triangle_violation(&lhs, &rhs).expect("same shape") {
            return report(Girth::Finite(2 * t), Some(Witness::Triangle { t, block_row, block_col, exponent }));
        }
    }
    report(Girth::Exceeds(2 * l_max), None)
}

/// Yields (t, left, right) for t = 2, 3, ... in the C_H power form.
struct PowerSteps<'a> {
    h: &'a BlockMatrix,
    c: BlockMatrix,
    t: usize,
    pow: BlockMatrix,
    sum: BlockMatrix,
    pow_h: Option<BlockMatrix>,
    sum_h: Option<BlockMatrix>,
}

impl<'a> PowerSteps<'a> {
    fn new(h: &'a BlockMatrix) -> Self {
        let c = compute_ch(h);
        let id = BlockMatrix::identity(h.rows(), h.n());
        PowerSteps { h, pow: c.clone(), c, t: 1, sum: id, pow_h: None, sum_h: None }
    }
}

impl Iterator for PowerSteps<'_> {
    type Item = (usize, BlockMatrix, BlockMatrix);

    fn next(&mut self) -> Option<Self::Item> {
        self.t += 1;
        let t = self.t;
        if t % 2 == 0 {
            if t > 2 {
                self.sum = self.sum.add(&self.pow).ok()?;
                self.pow = self.pow.mul(&self.c).ok()?;
            }
            Some((t, self.pow.clone(), self.sum.clone()))
        } else {
            let ph = self.pow.mul(self.h).ok()?;
            let sh = match (&self.sum_h, &self.pow_h) {
                (Some(s), Some(p)) => s.add(p).ok()?,
                _ => self.h.clone(),
            };
            self.pow_h = Some(ph.clone());
            self.sum_h = Some(sh.clone());
            Some((t, ph, sh))
        }
    }
}

struct RawSteps {
    g: BlockMatrix,
    t: usize,
    even: (BlockMatrix, BlockMatrix),
    odd: (BlockMatrix, BlockMatrix),
}

impl RawSteps {
    fn new(h: &BlockMatrix) -> Self {
        let g = h.mul(&h.transpose()).expect("H H^T");
        let id = BlockMatrix::identity(h.rows(), h.n());
        RawSteps { g, t: 1, even: (id.clone(), id), odd: (h.clone(), h.clone()) }
    }
}

impl Iterator for RawSteps {
    type Item = (usize, BlockMatrix, BlockMatrix);

    fn next(&mut self) -> Option<Self::Item> {
        self.t += 1;
        let t = self.t;
        let (prev, cur) = if t % 2 == 0 { &mut self.even } else { &mut self.odd };
        let next = self.g.mul(cur).ok()?;
        *prev = std::mem::replace(cur, next);
        Some((t, cur.clone(), prev.clone()))
    }
}
