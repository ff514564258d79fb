//! Girth analysis and construction of quasi-cyclic LDPC codes.
//!
//! Parity-check matrices are arrays of N x N circulants, described either by an
//! [`ExponentMatrix`] of shifts or by a [`BlockMatrix`] of polynomials in
//! Z>=0[x]/(x^N - 1). Girth is computed algebraically, by graph search on the
//! expanded Tanner graph, from protograph cycle sums, or by closed-form
//! condition sets.

pub mod block;
pub mod catalog;
pub mod circ;
pub mod construct;
pub mod error;
pub mod exponent;
pub mod girth;
pub mod io;
pub mod matrix;
pub mod multiedge;
pub mod prelift;

pub use block::BlockMatrix;
pub use circ::CircPoly;
pub use error::{QcError, Result};
pub use exponent::{Entry, ExponentMatrix};
pub use girth::{Girth, GirthReport};
pub use matrix::{IntMatrix, SparseBinary};
