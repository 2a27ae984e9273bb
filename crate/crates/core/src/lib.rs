//! Exact extension spaces between conformal modules over the Lie conformal
//! algebras `W(b)` (`b ≠ 0`) and the Virasoro conformal algebra.
//!
//! The algebra `W(b)` has basis `L, H` over `ℂ[∂]` with
//!
//! ```text
//! [L_λ L] = (∂ + 2λ) L    [L_λ H] = (∂ + (1 - b)λ) H    [H_λ H] = 0
//! ```
//!
//! Its finite irreducible modules are the free rank-one `M(α, Δ)` and the
//! one-dimensional `ℂc_γ`. An extension between two of them is a cocycle
//! datum `(f, g, h)`; this crate writes the cocycle identities as a linear
//! system in the unknown coefficients, solves it over ℚ (or `ℚ(√d)`, or
//! `ℚ(t)`), and quotients by coboundaries.
//!
//! ```
//! use wbext::{int, solve_ext, Algebra, ExtProblem, Shape};
//!
//! let p = ExtProblem::new(
//!     Algebra::W(int(1)),
//!     Shape::Type3 { alpha: int(0), abar: int(0), delta: int(3), dbar: int(1) },
//! );
//! let sol = solve_ext(&p).unwrap();
//! assert_eq!(sol.ext_dim, 2);
//! ```
//!
//! Modules:
//! * [`arith`]: rationals, quadratic fields, rational functions, polynomials.
//! * [`linalg`]: exact elimination and fraction-free rank over `ℚ[t]`.
//! * [`conformal`]: algebra and module data, axiom checks.
//! * [`cocycle`]: cocycle identities, coboundaries, `Ext` solver.
//! * [`scan`]: parametric scans over a weight and per-`b` classification.
//! * [`replay`]: the published classification tables as checkable cases.

pub mod arith;
pub mod cocycle;
pub mod conformal;
pub mod linalg;
pub mod replay;
pub mod scan;

pub use arith::{int, parse_rational, rat, ArithError, Field, MultiPoly, QuadExt, RatFunc, Rational, UniPoly};
pub use cocycle::{
    solve_ext, solve_ext_with, verify_witness, Algebra, Caps, CocycleWitness, ExtProblem, ExtSolution, Sector, Shape,
    SolveError, SolveOptions, Stabilization,
};
pub use conformal::{check_module_axioms, AlgebraSpec, ConformalError, ModuleSpec};
pub use scan::{classify, special_values, Classification, Promotion, ScanProblem, ScanReport};
