//! Exact dense linear algebra over any [`Field`], plus fraction-free
//! elimination over `Q[t]`.

mod bareiss;
mod matrix;

pub use bareiss::{bareiss, BareissResult};
pub use matrix::{nullspace, Matrix};
