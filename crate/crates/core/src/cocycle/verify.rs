use crate::arith::build::{c, d, l};
use crate::arith::{Field, MultiPoly};
use crate::conformal::{check_model, BasisKind, Generator, ModuleModel, Residual};

use super::problem::{CocycleWitness, ExtProblem, Shape};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessVerdict<C> {
    pub residuals: Vec<Residual<C>>,
}

impl<C: Field> WitnessVerdict<C> {
    pub fn pass(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// The extension module `E` defined by a cocycle datum.
pub fn extension_model<C: Field>(p: &ExtProblem<C>, w: &CocycleWitness<C>) -> ModuleModel<C> {
    let mut m = ModuleModel::new();
    let zero = MultiPoly::zero;
    match &p.shape {
        Shape::Type1 { alpha, gamma, delta } => {
            let v = m.add_basis("v", BasisKind::Free);
            let cg = m.add_basis("c", BasisKind::Torsion { gamma: gamma.clone(), tail: vec![] });
            m.set_action(Generator::L, v, vec![(v, d() + c(alpha.clone()) + l().scale(delta)), (cg, w.f.clone())]);
            m.set_action(Generator::H, v, vec![(cg, w.g.clone())]);
            m.set_action(Generator::L, cg, vec![]);
            m.set_action(Generator::H, cg, vec![]);
        }
        Shape::Type2 { alpha, gamma, delta } => {
            let v = m.add_basis("v", BasisKind::Free);
            let h = w.h.clone().unwrap_or_else(zero);
            let cg = m.add_basis("c", BasisKind::Torsion { gamma: gamma.clone(), tail: vec![(v, h)] });
            m.set_action(Generator::L, v, vec![(v, d() + c(alpha.clone()) + l().scale(delta))]);
            m.set_action(Generator::H, v, vec![]);
            m.set_action(Generator::L, cg, vec![(v, w.f.clone())]);
            m.set_action(Generator::H, cg, vec![(v, w.g.clone())]);
        }
        Shape::Type3 { alpha, abar, delta, dbar } => {
            let vb = m.add_basis("vbar", BasisKind::Free);
            let v = m.add_basis("v", BasisKind::Free);
            m.set_action(Generator::L, vb, vec![(vb, d() + c(abar.clone()) + l().scale(dbar))]);
            m.set_action(Generator::H, vb, vec![]);
            m.set_action(Generator::L, v, vec![(v, d() + c(alpha.clone()) + l().scale(delta)), (vb, w.f.clone())]);
            m.set_action(Generator::H, v, vec![(vb, w.g.clone())]);
        }
    }
    m
}

/// Checks that `w` defines a module by evaluating every conformal module
/// identity on the extension, independently of the linear system.
pub fn verify_witness<C: Field>(p: &ExtProblem<C>, w: &CocycleWitness<C>) -> WitnessVerdict<C> {
    let alg = p.algebra.spec();
    let mut w = w.clone();
    if !alg.has(Generator::H) {
        w.g = MultiPoly::zero();
    }
    WitnessVerdict { residuals: check_model(&alg, &extension_model(p, &w)) }
}
