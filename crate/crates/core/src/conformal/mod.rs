//! Lie conformal algebras W(b) and Vir, their rank-one modules, and an exact
//! checker for the conformal module axioms.

mod algebra;
mod model;
mod module;

pub use algebra::{AlgebraSpec, ConformalError, Generator};
pub use model::{check_model, BasisKind, Element, ModuleModel, Residual};
pub use module::{check_module_axioms, check_algebra, AxiomVerdict, ModuleKind, ModuleSpec};
