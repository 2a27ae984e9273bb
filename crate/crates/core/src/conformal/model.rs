//! Finite modules over C[∂] with a λ-action, evaluated symbolically.
//!
//! A module is spanned over C[∂] by basis vectors that are either free or
//! torsion. A torsion vector `c` carries `∂c = γc + Σ h_j(∂) e_j`, so
//! elements are kept in a normal form where torsion components have
//! ∂-free coefficients. Generator actions are stored per basis vector as
//! polynomials in (∂, λ); acting with a spectral variable `ν` on `p(∂)e`
//! gives `p(∂+ν)·a_ν e`.

use std::collections::BTreeMap;

use crate::arith::{Field, MultiPoly, Var};

use super::algebra::{AlgebraSpec, Generator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind<C> {
    Free,
    Torsion { gamma: C, tail: Vec<(usize, MultiPoly<C>)> },
}

/// Coefficient vector over the basis; entries are polynomials in (∂, λ, μ).
pub type Element<C> = Vec<MultiPoly<C>>;

#[derive(Clone, Debug)]
pub struct ModuleModel<C> {
    names: Vec<String>,
    kinds: Vec<BasisKind<C>>,
    actions: BTreeMap<Generator, Vec<Vec<(usize, MultiPoly<C>)>>>,
}

/// A nonzero component of an axiom residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual<C> {
    pub identity: String,
    pub component: String,
    pub value: MultiPoly<C>,
}

impl<C: Field> ModuleModel<C> {
    pub fn new() -> Self {
        ModuleModel { names: Vec::new(), kinds: Vec::new(), actions: BTreeMap::new() }
    }

    /// Adds a basis vector and returns its index.
    pub fn add_basis(&mut self, name: &str, kind: BasisKind<C>) -> usize {
        self.names.push(name.to_string());
        self.kinds.push(kind);
        for acts in self.actions.values_mut() {
            acts.push(Vec::new());
        }
        self.names.len() - 1
    }

    /// Sets `g_λ e_i = Σ p_j(∂, λ) e_j`.
    pub fn set_action(&mut self, g: Generator, i: usize, image: Vec<(usize, MultiPoly<C>)>) {
        let n = self.names.len();
        let acts = self.actions.entry(g).or_insert_with(|| vec![Vec::new(); n]);
        acts[i] = image;
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn zero(&self) -> Element<C> {
        vec![MultiPoly::zero(); self.dim()]
    }

    pub fn unit(&self, i: usize) -> Element<C> {
        let mut e = self.zero();
        e[i] = MultiPoly::one();
        e
    }

    fn is_zero(x: &Element<C>) -> bool {
        x.iter().all(|p| p.is_zero())
    }

    /// `∂x` for `x` in normal form.
    pub fn apply_d(&self, x: &Element<C>) -> Element<C> {
        let d = MultiPoly::var(Var::D);
        let mut out = self.zero();
        for (i, p) in x.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            match &self.kinds[i] {
                BasisKind::Free => out[i] = &out[i] + &(p * &d),
                BasisKind::Torsion { gamma, tail } => {
                    out[i] = &out[i] + &p.scale(gamma);
                    for (j, h) in tail {
                        // tail targets are free or normalised below
                        let part = self.apply_poly(&(p * h), &self.unit(*j));
                        for (k, q) in part.into_iter().enumerate() {
                            out[k] = &out[k] + &q;
                        }
                    }
                }
            }
        }
        out
    }

    /// `q(∂)·x`, with the non-∂ variables of `q` acting as scalars.
    pub fn apply_poly(&self, q: &MultiPoly<C>, x: &Element<C>) -> Element<C> {
        if q.is_zero() || Self::is_zero(x) {
            return self.zero();
        }
        if !q.contains_var(Var::D) || self.kinds.iter().all(|k| *k == BasisKind::Free) {
            return x.iter().map(|p| p * q).collect();
        }
        let top = q.degree_in(Var::D);
        let mut parts = vec![MultiPoly::zero(); top as usize + 1];
        for (m, c) in q.coeffs(&[Var::D]) {
            parts[m.exp(Var::D) as usize] = c;
        }
        let mut acc: Element<C> = x.iter().map(|p| p * &parts[top as usize]).collect();
        for k in (0..top as usize).rev() {
            acc = self.apply_d(&acc);
            for (a, p) in acc.iter_mut().zip(x) {
                *a = &*a + &(p * &parts[k]);
            }
        }
        acc
    }

    fn image(&self, g: Generator, i: usize, nu: &MultiPoly<C>) -> Element<C> {
        let mut out = self.zero();
        let Some(acts) = self.actions.get(&g) else {
            return out;
        };
        for (j, p) in &acts[i] {
            let p = p.substitute(Var::L, nu);
            let part = self.apply_poly(&p, &self.unit(*j));
            for (k, q) in part.into_iter().enumerate() {
                out[k] = &out[k] + &q;
            }
        }
        out
    }

    /// `g_ν x`; `ν` must not mention ∂.
    pub fn act(&self, g: Generator, nu: &MultiPoly<C>, x: &Element<C>) -> Element<C> {
        let mut out = self.zero();
        for (i, p) in x.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let shifted = p.shift(Var::D, nu).expect("spectral variable free of d");
            let part = self.apply_poly(&shifted, &self.image(g, i, nu));
            for (k, q) in part.into_iter().enumerate() {
                out[k] = &out[k] + &q;
            }
        }
        out
    }
}

impl<C: Field> Default for ModuleModel<C> {
    fn default() -> Self {
        Self::new()
    }
}

fn sub<C: Field>(a: &Element<C>, b: &Element<C>) -> Element<C> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn collect<C: Field>(model: &ModuleModel<C>, label: String, r: Element<C>, out: &mut Vec<Residual<C>>) {
    for (k, p) in r.into_iter().enumerate() {
        if !p.is_zero() {
            out.push(Residual { identity: label.clone(), component: model.name(k).to_string(), value: p });
        }
    }
}

/// Raw Jacobi-type residuals `a_λ(b_μ x) - b_μ(a_λ x) - [a_λ b]_{λ+μ} x`
/// for one ordered pair on one basis vector.
pub(crate) fn pair_residual<C: Field>(alg: &AlgebraSpec, model: &ModuleModel<C>, a: Generator, b: Generator, i: usize) -> Element<C> {
    let (lam, mu) = (MultiPoly::var(Var::L), MultiPoly::var(Var::U));
    let sum = &lam + &mu;
    let x = model.unit(i);
    let lhs = sub(&model.act(a, &lam, &model.act(b, &mu, &x)), &model.act(b, &mu, &model.act(a, &lam, &x)));
    let mut rhs = model.zero();
    for (c, p) in alg.bracket(a, b).unwrap_or(&[]) {
        // [a_λ b]_{λ+μ}: ∂ in the bracket coefficient becomes -(λ+μ)
        let coeff = p.map_coeffs(C::from_rational).substitute(Var::D, &-&sum);
        let term = model.act(*c, &sum, &x);
        for (r, t) in rhs.iter_mut().zip(term) {
            *r = &*r + &(&t * &coeff);
        }
    }
    sub(&lhs, &rhs)
}

/// Checks every module identity on every basis vector: the bracket identity
/// for each ordered pair of generators, and `g_λ(∂x) = (∂+λ) g_λ x`.
pub fn check_model<C: Field>(alg: &AlgebraSpec, model: &ModuleModel<C>) -> Vec<Residual<C>> {
    let lam = MultiPoly::var(Var::L);
    let mut out = Vec::new();
    for i in 0..model.dim() {
        for &a in alg.generators() {
            for &b in alg.generators() {
                let r = pair_residual(alg, model, a, b, i);
                collect(model, format!("[{a}_l {b}_u] on {}", model.name(i)), r, &mut out);
            }
        }
        let x = model.unit(i);
        for &a in alg.generators() {
            let ax = model.act(a, &lam, &x);
            let expect: Element<C> = model.apply_d(&ax).into_iter().zip(&ax).map(|(p, q)| &p + &(q * &lam)).collect();
            let r = sub(&model.act(a, &lam, &model.apply_d(&x)), &expect);
            collect(model, format!("{a}_l(d {}) = (d+l) {a}_l {}", model.name(i), model.name(i)), r, &mut out);
        }
    }
    out
}
