use crate::arith::build::{c, d, l};
use crate::arith::{Field, MultiPoly, Rational, Var};

use super::algebra::{AlgebraSpec, Generator};
use super::model::{check_model, pair_residual, BasisKind, ModuleModel, Residual};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// `M(α, Δ) = C[∂]v` with `L_λ v = (∂+α+Δλ)v`, `H_λ v = 0`.
    FreeRankOne { alpha: Rational, delta: Rational },
    /// `C c_γ` with `∂c = γc` and every generator acting by zero.
    TrivialOneDim { gamma: Rational },
}

/// A rank-one module together with its action table. The table starts at
/// the standard actions and can be overridden.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    kind: ModuleKind,
    actions: Vec<(Generator, MultiPoly<Rational>)>,
}

impl ModuleSpec {
    pub fn free(alpha: Rational, delta: Rational) -> Self {
        let l_action = d() + c(alpha.clone()) + l().scale(&delta);
        ModuleSpec {
            kind: ModuleKind::FreeRankOne { alpha, delta },
            actions: vec![(Generator::L, l_action), (Generator::H, MultiPoly::zero())],
        }
    }

    pub fn trivial(gamma: Rational) -> Self {
        ModuleSpec {
            kind: ModuleKind::TrivialOneDim { gamma },
            actions: vec![(Generator::L, MultiPoly::zero()), (Generator::H, MultiPoly::zero())],
        }
    }

    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    pub fn action(&self, g: Generator) -> Option<&MultiPoly<Rational>> {
        self.actions.iter().find(|(h, _)| *h == g).map(|(_, p)| p)
    }

    /// Replaces the action of `g`.
    pub fn with_action(mut self, g: Generator, p: MultiPoly<Rational>) -> Self {
        self.actions.retain(|(h, _)| *h != g);
        self.actions.push((g, p));
        self.actions.sort_by_key(|(h, _)| *h);
        self
    }

    /// Whether `M(α, Δ)` is reducible (`Δ = 0`).
    pub fn is_degenerate(&self) -> bool {
        matches!(&self.kind, ModuleKind::FreeRankOne { delta, .. } if delta == &Rational::from_int(0))
    }

    fn model(&self, alg: &AlgebraSpec) -> ModuleModel<Rational> {
        let mut m = ModuleModel::new();
        let (name, kind) = match &self.kind {
            ModuleKind::FreeRankOne { .. } => ("v", BasisKind::Free),
            ModuleKind::TrivialOneDim { gamma } => ("c", BasisKind::Torsion { gamma: gamma.clone(), tail: vec![] }),
        };
        m.add_basis(name, kind);
        for &g in alg.generators() {
            let p = self.action(g).cloned().unwrap_or_else(MultiPoly::zero);
            m.set_action(g, 0, vec![(0, p)]);
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub residuals: Vec<Residual<Rational>>,
    /// Identities checked.
    pub checked: usize,
}

impl AxiomVerdict {
    pub fn pass(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// Residuals of `R_ba(λ, μ) + R_ab(μ, λ)` for every unordered pair: the two
/// orderings of a bracket identity must fail or pass together.
fn skew_consistency(alg: &AlgebraSpec, model: &ModuleModel<Rational>, out: &mut Vec<Residual<Rational>>) -> usize {
    let gens = alg.generators();
    let mut checked = 0;
    for (ia, &a) in gens.iter().enumerate() {
        for &b in &gens[ia + 1..] {
            for i in 0..model.dim() {
                checked += 1;
                let ab = pair_residual(alg, model, a, b, i);
                let ba = pair_residual(alg, model, b, a, i);
                for (k, (x, y)) in ab.iter().zip(&ba).enumerate() {
                    let r = x.swap(Var::L, Var::U) + y.clone();
                    if !r.is_zero() {
                        out.push(Residual {
                            identity: format!("skew consistency [{a}_l {b}_u] / [{b}_l {a}_u]"),
                            component: model.name(k).to_string(),
                            value: r,
                        });
                    }
                }
            }
        }
    }
    checked
}

/// Substitutes the module's actions into every module identity of `alg`.
pub fn check_module_axioms(alg: &AlgebraSpec, module: &ModuleSpec) -> AxiomVerdict {
    let model = module.model(alg);
    let n = alg.generators().len();
    let mut residuals = check_model(alg, &model);
    let skew = skew_consistency(alg, &model, &mut residuals);
    AxiomVerdict { residuals, checked: n * n + n + skew }
}

/// Algebra-level checks: skew-symmetry `[b_λ a] = -[a_{-λ-∂} b]` of the
/// bracket table, and the Jacobi identity as the module axioms of the
/// adjoint module.
pub fn check_algebra(alg: &AlgebraSpec) -> AxiomVerdict {
    let gens = alg.generators();
    let mut residuals = Vec::new();
    let mut checked = 0;
    let neg_l_minus_d = -(l::<Rational>() + d());
    for &a in gens {
        for &b in gens {
            checked += 1;
            for &cg in gens {
                let ab = alg.coefficient(a, b, cg).unwrap_or_else(MultiPoly::zero);
                let ba = alg.coefficient(b, a, cg).unwrap_or_else(MultiPoly::zero);
                let r = ba + ab.substitute(Var::L, &neg_l_minus_d);
                if !r.is_zero() {
                    residuals.push(Residual { identity: format!("skew-symmetry [{b}_l {a}]"), component: cg.to_string(), value: r });
                }
            }
        }
    }
    let mut adjoint = ModuleModel::new();
    for g in gens {
        adjoint.add_basis(&g.to_string(), BasisKind::Free);
    }
    for &a in gens {
        for (j, &b) in gens.iter().enumerate() {
            let image = alg
                .bracket(a, b)
                .unwrap_or(&[])
                .iter()
                .map(|(cg, p)| (gens.iter().position(|g| g == cg).expect("bracket closes"), p.clone()))
                .collect();
            adjoint.set_action(a, j, image);
        }
    }
    checked += gens.len() * gens.len() * (gens.len() + 1);
    residuals.extend(check_model(alg, &adjoint));
    AxiomVerdict { residuals, checked }
}

impl<C: Field> Residual<C> {
    pub fn describe(&self) -> String {
        format!("{} [{}]: {}", self.identity, self.component, self.value)
    }
}
