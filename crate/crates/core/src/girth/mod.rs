//! Girth computation: the algebraic B_t test, a graph oracle, cycle sums and
//! closed-form condition sets.

pub mod bfs;
pub mod bt;
pub mod conditions;
pub mod cycles;
pub mod distance;
pub mod methods;
pub mod relation;
pub mod symbolic;

use std::fmt;

/// Default number of B_t steps; covers girth up to 22.
pub const DEFAULT_L_MAX: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    /// No cycle of length <= the bound was found; the bound is not exceeded by search.
    Exceeds(usize),
    Infinite,
}

impl Girth {
    pub fn value(&self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(*g),
            _ => None,
        }
    }

    /// Whether the girth is known to be at least `g`.
    pub fn at_least(&self, g: usize) -> bool {
        match *self {
            Girth::Finite(x) => x >= g,
            Girth::Exceeds(b) => b + 2 >= g,
            Girth::Infinite => true,
        }
    }

    /// Two results are consistent when neither contradicts the other.
    pub fn agrees(&self, other: &Girth) -> bool {
        use Girth::*;
        match (*self, *other) {
            (Finite(a), Finite(b)) => a == b,
            (Finite(a), Exceeds(b)) | (Exceeds(b), Finite(a)) => a > b,
            (Finite(_), Infinite) | (Infinite, Finite(_)) => false,
            _ => true,
        }
    }

    /// Clip to a search cap: anything above `cap` becomes `Exceeds(cap)`.
    pub fn capped(&self, cap: usize) -> Girth {
        match *self {
            Girth::Finite(g) if g <= cap => Girth::Finite(g),
            Girth::Exceeds(b) if b <= cap => Girth::Exceeds(b),
            _ => Girth::Exceeds(cap),
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{}", g),
            Girth::Exceeds(b) => write!(f, ">{}", b),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Node sequence of a cycle; checks are `0..m`, variables `m..m+n`.
    Cycle { checks: usize, nodes: Vec<usize> },
    /// Non-zero entry of B_t triangle B_{t-2}.
    Triangle { t: usize, block_row: usize, block_col: usize, exponent: usize },
    /// Coefficient >= 2 in a block of H.
    ParallelEdges { block_row: usize, block_col: usize, exponent: usize },
    /// Closed walk in the protograph whose shift sum vanishes mod N.
    Walk { edges: Vec<(usize, usize, i64)>, sum: i64 },
    /// Condition set with two colliding terms.
    Collision { set: String, first: String, second: String, value: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GirthReport {
    pub girth: Girth,
    pub method: String,
    pub witness: Option<Witness>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Cycle { checks, nodes } => {
                let parts: Vec<String> = nodes
                    .iter()
                    .map(|&v| if v < *checks { format!("c{}", v) } else { format!("v{}", v - checks) })
                    .collect();
                write!(f, "cycle {}", parts.join("-"))
            }
            Witness::Triangle { t, block_row, block_col, exponent } => write!(
                f,
                "B_{} triangle B_{} non-zero at block ({}, {}), x^{}",
                t,
                t - 2,
                block_row,
                block_col,
                exponent
            ),
            Witness::ParallelEdges { block_row, block_col, exponent } => {
                write!(f, "parallel edges at block ({}, {}), x^{}", block_row, block_col, exponent)
            }
            Witness::Walk { edges, sum } => {
                let parts: Vec<String> = edges.iter().map(|(r, c, s)| format!("({},{}:{})", r, c, s)).collect();
                write!(f, "closed walk {} with sum {}", parts.join(" "), sum)
            }
            Witness::Collision { set, first, second, value } => {
                write!(f, "{}: {} and {} both equal {}", set, first, second, value)
            }
        }
    }
}
