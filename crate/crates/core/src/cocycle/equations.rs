//! Cocycle identities for the three extension shapes, written as linear
//! functions of the cocycle datum `(f, g, h)`. Each returns a polynomial in
//! (∂, λ, μ) that must vanish identically.

use crate::arith::build::{c, d, l, u};
use crate::arith::{Field, MultiPoly, Var};
use crate::linalg::Matrix;

use super::problem::{CocycleWitness, ExtProblem, Func, Shape};
use super::unknowns::UnknownSpace;

type P<C> = MultiPoly<C>;

/// A linear identity in the unknown coefficients: column `j` holds the
/// polynomial contributed by unknown `j` with coefficient 1.
#[derive(Clone, Debug)]
pub struct Identity<C> {
    pub label: &'static str,
    pub uses: &'static [Func],
    pub columns: Vec<(usize, P<C>)>,
}

impl<C: Field> Identity<C> {
    /// Evaluates the identity on a coefficient vector.
    pub fn apply(&self, v: &[C]) -> P<C> {
        let mut acc = P::zero();
        for (j, p) in &self.columns {
            if !v[*j].is_zero() {
                acc = &acc + &p.scale(&v[*j]);
            }
        }
        acc
    }
}

fn at_mu<C: Field>(p: &P<C>) -> P<C> {
    p.substitute(Var::L, &u())
}

fn at_sum<C: Field>(p: &P<C>) -> P<C> {
    p.substitute(Var::L, &(l() + u()))
}

fn shift_d<C: Field>(p: &P<C>, by: P<C>) -> P<C> {
    p.shift(Var::D, &by).expect("shift free of d")
}

/// `p(∂+λ, μ)` from `p(∂, λ)`.
fn shifted_l_at_mu<C: Field>(p: &P<C>) -> P<C> {
    shift_d(&at_mu(p), l())
}

/// `p(∂+μ, λ)` from `p(∂, λ)`.
fn shifted_u<C: Field>(p: &P<C>) -> P<C> {
    shift_d(p, u())
}

type Rule<C> = fn(&RuleCtx<C>, &CocycleWitness<C>) -> P<C>;

struct RuleCtx<C> {
    b: C,
    alpha: C,
    abar: C,
    gamma: C,
    delta: C,
    dbar: C,
}

fn lin<C: Field>(k: C, dc: i64, lc: &C, uc: &C) -> P<C> {
    c(k) + d().scale(&C::from_int(dc)) + l().scale(lc) + u().scale(uc)
}

// Type1: ∂ acts on c_γ by γ, so only A = α+γ enters.
fn t1_f<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let a = x.alpha.clone() + &x.gamma;
    let one = C::one();
    lin(a.clone(), 0, &one, &x.delta) * w.f.clone() - lin(a, 0, &x.delta, &one) * at_mu(&w.f) - (l() - u()) * at_sum(&w.f)
}

fn t1_g<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let a = x.alpha.clone() + &x.gamma;
    let one = C::one();
    lin(a, 0, &x.delta, &one) * at_mu(&w.g) - lin(C::zero(), 0, &x.b, &one) * at_sum(&w.g)
}

fn t1_g_swapped<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let a = x.alpha.clone() + &x.gamma;
    let one = C::one();
    lin(a, 0, &one, &x.delta) * w.g.clone() - lin(C::zero(), 0, &one, &x.b) * at_sum(&w.g)
}

fn t2_f<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let z = C::zero();
    lin(x.alpha.clone(), 1, &x.delta, &z) * shifted_l_at_mu(&w.f) - lin(x.alpha.clone(), 1, &z, &x.delta) * shifted_u(&w.f)
        - (l() - u()) * at_sum(&w.f)
}

fn t2_fh<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let (z, one) = (C::zero(), C::one());
    let h = w.h.clone().unwrap_or_else(P::zero);
    lin(-x.gamma.clone(), 1, &one, &z) * w.f.clone() - lin(x.alpha.clone(), 1, &x.delta, &z) * shift_d(&h, l())
}

fn t2_g<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    lin(-x.gamma.clone(), 1, &C::one(), &C::zero()) * w.g.clone()
}

fn t2_g_lh<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let (z, one) = (C::zero(), C::one());
    lin(x.alpha.clone(), 1, &x.delta, &z) * shifted_l_at_mu(&w.g) + lin(z, 0, &x.b, &one) * at_sum(&w.g)
}

fn t2_g_hl<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let (z, one) = (C::zero(), C::one());
    -(lin(x.alpha.clone(), 1, &z, &x.delta) * shifted_u(&w.g)) - lin(z, 0, &one, &x.b) * at_sum(&w.g)
}

fn t3_f<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let (z, one) = (C::zero(), C::one());
    let f = &w.f;
    lin(x.alpha.clone(), 1, &one, &x.delta) * f.clone() + lin(x.abar.clone(), 1, &x.dbar, &z) * shifted_l_at_mu(f)
        - lin(x.alpha.clone(), 1, &x.delta, &one) * at_mu(f)
        - lin(x.abar.clone(), 1, &z, &x.dbar) * shifted_u(f)
        - (l() - u()) * at_sum(f)
}

fn t3_g<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let (z, one) = (C::zero(), C::one());
    let g = &w.g;
    lin(x.abar.clone(), 1, &x.dbar, &z) * shifted_l_at_mu(g) - lin(x.alpha.clone(), 1, &x.delta, &one) * at_mu(g)
        + lin(z, 0, &x.b, &one) * at_sum(g)
}

fn t3_g_swapped<C: Field>(x: &RuleCtx<C>, w: &CocycleWitness<C>) -> P<C> {
    let (z, one) = (C::zero(), C::one());
    let g = &w.g;
    lin(x.alpha.clone(), 1, &one, &x.delta) * g.clone() - lin(x.abar.clone(), 1, &z, &x.dbar) * shifted_u(g)
        - lin(z, 0, &one, &x.b) * at_sum(g)
}

struct RuleDef<C> {
    label: &'static str,
    uses: &'static [Func],
    rule: Rule<C>,
}

fn rules<C: Field>(shape: &Shape<C>) -> Vec<RuleDef<C>> {
    macro_rules! r {
        ($label:expr, $uses:expr, $f:ident) => {
            RuleDef { label: $label, uses: $uses, rule: $f::<C> }
        };
    }
    match shape {
        Shape::Type1 { .. } => vec![
            r!("[L_l L_u] v", &[Func::F], t1_f),
            r!("[L_l H_u] v", &[Func::G], t1_g),
            r!("[H_l L_u] v", &[Func::G], t1_g_swapped),
        ],
        Shape::Type2 { .. } => vec![
            r!("[L_l L_u] c", &[Func::F], t2_f),
            r!("L_l(d c) = (d+l) L_l c", &[Func::F, Func::H], t2_fh),
            r!("H_l(d c) = (d+l) H_l c", &[Func::G], t2_g),
            r!("[L_l H_u] c", &[Func::G], t2_g_lh),
            r!("[H_l L_u] c", &[Func::G], t2_g_hl),
        ],
        Shape::Type3 { .. } => vec![
            r!("[L_l L_u] v", &[Func::F], t3_f),
            r!("[L_l H_u] v", &[Func::G], t3_g),
            r!("[H_l L_u] v", &[Func::G], t3_g_swapped),
        ],
    }
}

fn ctx<C: Field>(p: &ExtProblem<C>) -> RuleCtx<C> {
    let z = C::zero;
    let b = p.b().unwrap_or_else(z);
    match &p.shape {
        Shape::Type1 { alpha, gamma, delta } | Shape::Type2 { alpha, gamma, delta } => RuleCtx {
            b,
            alpha: alpha.clone(),
            abar: z(),
            gamma: gamma.clone(),
            delta: delta.clone(),
            dbar: z(),
        },
        Shape::Type3 { alpha, abar, delta, dbar } => RuleCtx {
            b,
            alpha: alpha.clone(),
            abar: abar.clone(),
            gamma: z(),
            delta: delta.clone(),
            dbar: dbar.clone(),
        },
    }
}

/// The cocycle identities of `p` restricted to its unknowns. Identities on
/// g come in both orderings `[L_λ H_μ]` and `[H_λ L_μ]`; they are equivalent
/// under λ <-> μ and both are imposed.
pub fn build_equations<C: Field>(p: &ExtProblem<C>, space: &UnknownSpace) -> Vec<Identity<C>> {
    let x = ctx(p);
    let mut out = Vec::new();
    for def in rules(&p.shape) {
        if !def.uses.iter().any(|f| p.solves_for(*f)) {
            continue;
        }
        let mut columns = Vec::new();
        for j in 0..space.len() {
            if !def.uses.contains(&space.get(j).func) {
                continue;
            }
            let img = (def.rule)(&x, &space.unit(j, &p.shape));
            if !img.is_zero() {
                columns.push((j, img));
            }
        }
        out.push(Identity { label: def.label, uses: def.uses, columns });
    }
    out
}

/// Evaluates every identity of the shape on a full witness, outside any
/// unknown space. Zero polynomials are kept so labels line up.
pub fn identity_residuals<C: Field>(p: &ExtProblem<C>, w: &CocycleWitness<C>) -> Vec<(&'static str, P<C>)> {
    let x = ctx(p);
    rules(&p.shape).into_iter().map(|def| (def.label, (def.rule)(&x, w))).collect()
}

/// Stacks the coefficient equations of all identities: one row per
/// (identity, monomial in ∂, λ, μ), one column per unknown.
pub fn assemble_linear_system<C: Field>(identities: &[Identity<C>], unknowns: usize) -> Matrix<C> {
    use std::collections::BTreeMap;
    let mut rows: Vec<Vec<C>> = Vec::new();
    for id in identities {
        let mut by_mono: BTreeMap<crate::arith::Monomial, Vec<C>> = BTreeMap::new();
        for (j, p) in &id.columns {
            for (m, c) in p.terms() {
                by_mono.entry(*m).or_insert_with(|| vec![C::zero(); unknowns])[*j] = c.clone();
            }
        }
        rows.extend(by_mono.into_values().rev());
    }
    Matrix::from_rows(unknowns, rows)
}
