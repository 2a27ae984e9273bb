//! Exact arithmetic: rationals, quadratic fields, rational functions and
//! polynomials over the fixed variables (∂, λ, μ, t).

mod factor;
mod field;
pub mod format;
mod poly;
mod quad;
mod ratfunc;
mod uni;

use num_bigint::BigInt;
use thiserror::Error;

pub use factor::{simplest_between, uni_factor_special, uni_factor_special_parts, SpecialFactorization};
pub use field::{int, parse_rational, rat, render_rational, Field, Rational};
pub use poly::{build, Monomial, MultiPoly, Var};
pub use quad::{quadratic_roots, square_free_decompose, QuadExt};
pub use ratfunc::RatFunc;
pub use uni::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("malformed rational `{0}` (expected p/q or an integer)")]
    MalformedRational(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("radicand {0} is not square-free or is a perfect square")]
    BadRadicand(BigInt),
    #[error("mixed quadratic fields sqrt({0}) and sqrt({1})")]
    FieldMismatch(BigInt, BigInt),
    #[error("polynomials have coefficients in incompatible fields")]
    IncompatibleCoefficients,
    #[error("square root coefficient in a rational polynomial")]
    IrrationalInRationalField,
    #[error("shift of `{0}` by an expression mentioning `{0}`")]
    ShiftMentionsTarget(char),
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("malformed polynomial `{input}` at byte {pos}: expected {expected}")]
    MalformedPolynomial { input: String, pos: usize, expected: String },
}
