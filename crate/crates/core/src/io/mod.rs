//! Text formats: the exponent-matrix file and MacKay alist.

mod alist;
mod qc;

pub use alist::{parse_alist, render_alist};
pub use qc::{parse_qc, render_qc, QcFile};
