//! Cocycle identities for extensions of rank-one modules, their solution by
//! exact linear algebra, and the quotient by coboundaries.

mod coboundary;
mod equations;
mod problem;
mod solve;
mod unknowns;
mod verify;

pub use coboundary::{coboundary_generators, coboundary_image};
pub use equations::{assemble_linear_system, build_equations, identity_residuals, Identity};
pub use problem::{Algebra, Caps, CocycleWitness, ExtProblem, Func, ProblemError, Sector, Shape, Unknown};
pub use solve::{
    ext_class, ext_dim_only, linear_data, solve_ext, solve_ext_with, Diagnostics, ExtSolution, LinearData, SolveError, SolveOptions,
    Stabilization,
};
pub use unknowns::UnknownSpace;
pub use verify::{extension_model, verify_witness, WitnessVerdict};

/// Coboundaries of `p` that fit inside its caps.
pub fn coboundary_basis<C: crate::arith::Field>(p: &ExtProblem<C>) -> Vec<CocycleWitness<C>> {
    solve_ext_with(p, SolveOptions { stabilize: false }).map(|s| s.coboundaries).unwrap_or_default()
}

#[cfg(test)]
mod tests;
