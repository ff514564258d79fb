//! Exponent selection strategies over a forbidden set.

use crate::error::{QcError, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Values a new shift c must avoid: c itself in `values`, or 2c in `doubled`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Forbidden {
    pub values: BTreeSet<i64>,
    pub doubled: BTreeSet<i64>,
}

impl Forbidden {
    pub fn contains(&self, c: i64) -> bool {
        self.values.contains(&c) || self.doubled.contains(&(2 * c))
    }

    /// Largest forbidden value, if any.
    pub fn max(&self) -> Option<i64> {
        let a = self.values.last().copied();
        let b = self.doubled.last().map(|d| d.div_euclid(2));
        a.max(b)
    }

    pub fn len(&self) -> usize {
        self.values.len() + self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub trait ExponentSelector: Send {
    fn name(&self) -> &'static str;
    /// Pick a positive shift outside `forbidden` for which `accept` holds.
    fn pick(&mut self, forbidden: &Forbidden, accept: &mut dyn FnMut(i64) -> bool) -> i64;
}

fn scan_from(start: i64, forbidden: &Forbidden, accept: &mut dyn FnMut(i64) -> bool) -> i64 {
    (start.max(1)..).find(|&c| !forbidden.contains(c) && accept(c)).expect("unbounded search")
}

/// The smallest positive integer not forbidden.
pub struct SmallestFree;

impl ExponentSelector for SmallestFree {
    fn name(&self) -> &'static str {
        "smallest"
    }

    fn pick(&mut self, forbidden: &Forbidden, accept: &mut dyn FnMut(i64) -> bool) -> i64 {
        scan_from(1, forbidden, accept)
    }
}

/// A uniformly random free value up to one past the largest forbidden value.
pub struct RandomFree {
    rng: ChaCha8Rng,
}

impl RandomFree {
    pub fn new(seed: u64) -> Self {
        RandomFree { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl ExponentSelector for RandomFree {
    fn name(&self) -> &'static str {
        "random"
    }

    fn pick(&mut self, forbidden: &Forbidden, accept: &mut dyn FnMut(i64) -> bool) -> i64 {
        let hi = forbidden.max().unwrap_or(0).max(0) + 1;
        for _ in 0..256 {
            let c = self.rng.gen_range(1..=hi);
            if !forbidden.contains(c) && accept(c) {
                return c;
            }
        }
        scan_from(hi, forbidden, accept)
    }
}

/// One more than the largest forbidden value.
pub struct AboveMax;

impl ExponentSelector for AboveMax {
    fn name(&self) -> &'static str {
        "abovemax"
    }

    fn pick(&mut self, forbidden: &Forbidden, accept: &mut dyn FnMut(i64) -> bool) -> i64 {
        scan_from(forbidden.max().unwrap_or(0) + 1, forbidden, accept)
    }
}

pub const SELECTOR_NAMES: [&str; 3] = ["smallest", "random", "abovemax"];

/// Selector by name; `seed` feeds the random strategy.
pub fn selector_by_name(name: &str, seed: u64) -> Result<Box<dyn ExponentSelector>> {
    match name {
        "smallest" => Ok(Box::new(SmallestFree)),
        "random" => Ok(Box::new(RandomFree::new(seed))),
        "abovemax" => Ok(Box::new(AboveMax)),
        _ => Err(QcError::Invalid(format!(
            "unknown strategy '{}' (known: {})",
            name,
            SELECTOR_NAMES.join(", ")
        ))),
    }
}
