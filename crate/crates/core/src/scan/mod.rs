//! Parametric analysis: one weight becomes an indeterminate `t`, the
//! cocycle system is solved over Q(t), and the finitely many values of `t`
//! where the dimension jumps are located exactly.

mod classify;
mod engine;
mod problem;
mod report;

pub use classify::{
    candidate_lines, classify, classify_algebra, scan_line, Classification, ClassifyError, Family, LineOrigin, LineScan, Point,
};
pub use engine::{dims_at_rational, generic_rank, special_values};
pub use problem::{Promotion, ScanError, ScanProblem};
pub use report::{clear_denominators, specialize_witness, Dims, ScanReport, SpecialValue};
