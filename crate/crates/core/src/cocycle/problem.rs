use std::fmt;

use thiserror::Error;

use crate::arith::{render_rational, Field, Monomial, MultiPoly, Rational};
use crate::conformal::{AlgebraSpec, ConformalError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error(transparent)]
    Algebra(#[from] ConformalError),
    #[error("{0}")]
    Invalid(String),
}

/// The acting algebra. `W(b)` always has `b != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    Virasoro,
    W(Rational),
}

impl Algebra {
    pub fn w(b: Rational) -> Result<Self, ConformalError> {
        AlgebraSpec::make_wb(b.clone())?;
        Ok(Algebra::W(b))
    }

    pub fn spec(&self) -> AlgebraSpec {
        match self {
            Algebra::Virasoro => AlgebraSpec::make_virasoro(),
            Algebra::W(b) => AlgebraSpec::make_wb(b.clone()).expect("b != 0 checked at construction"),
        }
    }

    pub fn b(&self) -> Option<&Rational> {
        match self {
            Algebra::Virasoro => None,
            Algebra::W(b) => Some(b),
        }
    }

    pub fn has_h(&self) -> bool {
        matches!(self, Algebra::W(_))
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Virasoro => f.write_str("Vir"),
            Algebra::W(b) => write!(f, "W({})", render_rational(b)),
        }
    }
}

/// The three extension shapes with their weights.
///
/// * `Type1`: `0 -> C c_γ -> E -> M(α, Δ) -> 0`
/// * `Type2`: `0 -> M(α, Δ) -> E -> C c_γ -> 0`
/// * `Type3`: `0 -> M(ᾱ, Δ̄) -> E -> M(α, Δ) -> 0`
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape<C> {
    Type1 { alpha: C, gamma: C, delta: C },
    Type2 { alpha: C, gamma: C, delta: C },
    Type3 { alpha: C, abar: C, delta: C, dbar: C },
}

impl<C: Field> Shape<C> {
    pub fn number(&self) -> u8 {
        match self {
            Shape::Type1 { .. } => 1,
            Shape::Type2 { .. } => 2,
            Shape::Type3 { .. } => 3,
        }
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> Shape<D> {
        match self {
            Shape::Type1 { alpha, gamma, delta } => Shape::Type1 { alpha: f(alpha), gamma: f(gamma), delta: f(delta) },
            Shape::Type2 { alpha, gamma, delta } => Shape::Type2 { alpha: f(alpha), gamma: f(gamma), delta: f(delta) },
            Shape::Type3 { alpha, abar, delta, dbar } => {
                Shape::Type3 { alpha: f(alpha), abar: f(abar), delta: f(delta), dbar: f(dbar) }
            }
        }
    }

    /// Named parameters in display order.
    pub fn params(&self) -> Vec<(&'static str, &C)> {
        match self {
            Shape::Type1 { alpha, gamma, delta } | Shape::Type2 { alpha, gamma, delta } => {
                vec![("alpha", alpha), ("gamma", gamma), ("delta", delta)]
            }
            Shape::Type3 { alpha, abar, delta, dbar } => vec![("alpha", alpha), ("abar", abar), ("delta", delta), ("dbar", dbar)],
        }
    }

    /// Translates ∂ by `c`: α and ᾱ move by `c`, γ by `-c`.
    pub fn translate(&self, c: &C) -> Self {
        match self {
            Shape::Type1 { alpha, gamma, delta } => {
                Shape::Type1 { alpha: alpha.clone() + c, gamma: gamma.clone() - c, delta: delta.clone() }
            }
            Shape::Type2 { alpha, gamma, delta } => {
                Shape::Type2 { alpha: alpha.clone() + c, gamma: gamma.clone() - c, delta: delta.clone() }
            }
            Shape::Type3 { alpha, abar, delta, dbar } => Shape::Type3 {
                alpha: alpha.clone() + c,
                abar: abar.clone() + c,
                delta: delta.clone(),
                dbar: dbar.clone(),
            },
        }
    }

    /// A weight `Δ` or `Δ̄` is zero, so a module involved is reducible.
    pub fn is_degenerate(&self) -> bool {
        match self {
            Shape::Type1 { delta, .. } | Shape::Type2 { delta, .. } => delta.is_zero(),
            Shape::Type3 { delta, dbar, .. } => delta.is_zero() || dbar.is_zero(),
        }
    }
}

/// Total-degree bounds on the unknown polynomials and on the coboundary
/// generator φ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Caps {
    pub f: u32,
    pub g: u32,
    pub h: u32,
    pub phi: u32,
}

impl Caps {
    pub fn raised(&self, by: u32) -> Caps {
        Caps { f: self.f + by, g: self.g + by, h: self.h + by, phi: self.phi + by }
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps { f: 8, g: 5, h: 8, phi: 8 }
    }
}

/// Which cocycle polynomials are solved for. The `F` sector of a Type2
/// problem includes `h`, which is coupled to `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Sector {
    F,
    G,
    #[default]
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtProblem<C = Rational> {
    pub algebra: Algebra,
    pub shape: Shape<C>,
    pub caps: Caps,
    pub sector: Sector,
}

impl<C: Field> ExtProblem<C> {
    pub fn new(algebra: Algebra, shape: Shape<C>) -> Self {
        ExtProblem { algebra, shape, caps: Caps::default(), sector: Sector::Full }
    }

    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }

    pub fn with_sector(mut self, sector: Sector) -> Self {
        self.sector = sector;
        self
    }

    pub fn b(&self) -> Option<C> {
        self.algebra.b().map(C::from_rational)
    }

    /// Whether the cocycle polynomial `func` is an unknown of this problem.
    pub fn solves_for(&self, func: Func) -> bool {
        let f_side = self.sector != Sector::G;
        let g_side = self.sector != Sector::F && self.algebra.has_h();
        match func {
            Func::F => f_side,
            Func::G => g_side,
            Func::H => f_side && matches!(self.shape, Shape::Type2 { .. }),
        }
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> ExtProblem<D> {
        ExtProblem { algebra: self.algebra.clone(), shape: self.shape.map(f), caps: self.caps, sector: self.sector }
    }
}

/// A cocycle polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Func {
    F,
    G,
    H,
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Func::F => "f",
            Func::G => "g",
            Func::H => "h",
        })
    }
}

/// One unknown coefficient: the coefficient of `mono` in `func`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unknown {
    pub func: Func,
    pub mono: Monomial,
}

/// Cocycle datum `(f, g, h)`. For Type1, `f` and `g` are polynomials in λ;
/// for Type2 and Type3 in (∂, λ); `h` is a polynomial in ∂ and only present
/// for Type2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleWitness<C = Rational> {
    pub f: MultiPoly<C>,
    pub g: MultiPoly<C>,
    pub h: Option<MultiPoly<C>>,
}

impl<C: Field> CocycleWitness<C> {
    pub fn new(f: MultiPoly<C>, g: MultiPoly<C>, h: Option<MultiPoly<C>>) -> Self {
        CocycleWitness { f, g, h }
    }

    pub fn zero_for(shape: &Shape<C>) -> Self {
        let h = matches!(shape, Shape::Type2 { .. }).then(MultiPoly::zero);
        CocycleWitness { f: MultiPoly::zero(), g: MultiPoly::zero(), h }
    }

    pub fn get(&self, func: Func) -> MultiPoly<C> {
        match func {
            Func::F => self.f.clone(),
            Func::G => self.g.clone(),
            Func::H => self.h.clone().unwrap_or_else(MultiPoly::zero),
        }
    }

    pub fn get_mut(&mut self, func: Func) -> &mut MultiPoly<C> {
        match func {
            Func::F => &mut self.f,
            Func::G => &mut self.g,
            Func::H => self.h.get_or_insert_with(MultiPoly::zero),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero() && self.h.as_ref().is_none_or(|h| h.is_zero())
    }

    pub fn scale(&self, c: &C) -> Self {
        CocycleWitness { f: self.f.scale(c), g: self.g.scale(c), h: self.h.as_ref().map(|h| h.scale(c)) }
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D + Copy) -> CocycleWitness<D> {
        CocycleWitness { f: self.f.map_coeffs(f), g: self.g.map_coeffs(f), h: self.h.as_ref().map(|h| h.map_coeffs(f)) }
    }
}

impl<C: Field> fmt::Display for CocycleWitness<C> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "f = {}, g = {}", self.f, self.g)?;
        if let Some(h) = &self.h {
            write!(fm, ", h = {h}")?;
        }
        Ok(())
    }
}
