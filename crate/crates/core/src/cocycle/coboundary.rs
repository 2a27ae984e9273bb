use crate::arith::build::{c, d, l};
use crate::arith::{Field, MultiPoly, Var};

use super::problem::{CocycleWitness, ExtProblem, Func, Shape};

/// Coboundary generated by `φ = ∂^k` (Type2, Type3) or by the scalar
/// change of basis (Type1, `k` ignored), before any truncation.
pub fn coboundary_image<C: Field>(p: &ExtProblem<C>, k: u32) -> CocycleWitness<C> {
    let phi = MultiPoly::<C>::var(Var::D).pow(k);
    let mut w = CocycleWitness::zero_for(&p.shape);
    match &p.shape {
        Shape::Type1 { alpha, gamma, delta } => {
            w.f = c(alpha.clone() + gamma) + l().scale(delta);
        }
        Shape::Type2 { alpha, gamma, delta } => {
            w.f = (d() + c(alpha.clone()) + l().scale(delta)) * phi.shift(Var::D, &l()).unwrap();
            w.h = Some((d() - c(gamma.clone())) * phi);
        }
        Shape::Type3 { alpha, abar, delta, dbar } => {
            w.f = (d() + c(alpha.clone()) + l().scale(delta)) * phi.clone()
                - (d() + c(abar.clone()) + l().scale(dbar)) * phi.shift(Var::D, &l()).unwrap();
        }
    }
    for func in [Func::F, Func::G, Func::H] {
        if !p.solves_for(func) {
            *w.get_mut(func) = MultiPoly::zero();
        }
    }
    if !p.solves_for(Func::H) && matches!(p.shape, Shape::Type2 { .. }) {
        w.h = Some(MultiPoly::zero());
    }
    w
}

/// Coboundary generators for `φ` ranging over `1, ∂, ..., ∂^cap_φ` (a
/// single generator for Type1), restricted to the solved sector.
pub fn coboundary_generators<C: Field>(p: &ExtProblem<C>) -> Vec<CocycleWitness<C>> {
    let n = match p.shape {
        Shape::Type1 { .. } => 0,
        _ => p.caps.phi,
    };
    (0..=n).map(|k| coboundary_image(p, k)).collect()
}
