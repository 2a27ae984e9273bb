use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{render_rational, Field, Rational};
use crate::cocycle::{ExtProblem, Shape};

/// Which weight becomes the scan variable `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Promotion {
    /// `Δ = t`, other weights as given.
    Delta,
    /// `Δ̄ = t`, `Δ` as given.
    Dbar,
    /// `Δ̄ = t` and `Δ = t + s`.
    DbarOnLine(Rational),
    /// `Δ = t` and `Δ̄ = t - s`.
    DeltaOnLine(Rational),
    /// `Δ = Δ̄ + t` with `Δ̄` as given.
    Difference,
}

impl fmt::Display for Promotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Promotion::Delta => f.write_str("delta = t"),
            Promotion::Dbar => f.write_str("dbar = t"),
            Promotion::DbarOnLine(s) => write!(f, "dbar = t, delta = t{}", offset(s)),
            Promotion::DeltaOnLine(s) => write!(f, "delta = t, dbar = t{}", offset(&-s)),
            Promotion::Difference => f.write_str("delta - dbar = t"),
        }
    }
}

/// ` + s`, ` - |s|` or nothing.
fn offset(s: &Rational) -> String {
    if s.is_zero() {
        String::new()
    } else if s.is_negative() {
        format!(" - {}", render_rational(&-s))
    } else {
        format!(" + {}", render_rational(s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanProblem {
    /// Weights that are promoted are ignored here.
    pub base: ExtProblem<Rational>,
    pub promotion: Promotion,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScanError {
    #[error("only delta can be promoted for type 1 and type 2 problems")]
    PromotionNeedsType3,
    #[error("solver: {0}")]
    Solve(#[from] crate::cocycle::SolveError),
    #[error("cannot factor the zero certificate")]
    Factor(#[from] crate::arith::ArithError),
}

impl ScanProblem {
    pub fn new(base: ExtProblem<Rational>, promotion: Promotion) -> Result<Self, ScanError> {
        if promotion != Promotion::Delta && !matches!(base.shape, Shape::Type3 { .. }) {
            return Err(ScanError::PromotionNeedsType3);
        }
        Ok(ScanProblem { base, promotion })
    }

    /// The problem with `t` replaced by `t`'s value in the field `C`.
    pub fn instantiate<C: Field>(&self, t: &C) -> ExtProblem<C> {
        let mut p = self.base.map(C::from_rational);
        let lift = |r: &Rational| C::from_rational(r);
        match &mut p.shape {
            Shape::Type1 { delta, .. } | Shape::Type2 { delta, .. } => *delta = t.clone(),
            Shape::Type3 { delta, dbar, .. } => match &self.promotion {
                Promotion::Delta => *delta = t.clone(),
                Promotion::Dbar => *dbar = t.clone(),
                Promotion::DbarOnLine(s) => {
                    *dbar = t.clone();
                    *delta = t.clone() + &lift(s);
                }
                Promotion::DeltaOnLine(s) => {
                    *delta = t.clone();
                    *dbar = t.clone() - &lift(s);
                }
                Promotion::Difference => *delta = dbar.clone() + t,
            },
        }
        p
    }

    /// `(Δ, Δ̄)` at the given value of `t`; `Δ̄` is absent for Type1/2.
    pub fn weights<C: Field>(&self, t: &C) -> (C, Option<C>) {
        match self.instantiate(t).shape {
            Shape::Type1 { delta, .. } | Shape::Type2 { delta, .. } => (delta, None),
            Shape::Type3 { delta, dbar, .. } => (delta, Some(dbar)),
        }
    }
}
