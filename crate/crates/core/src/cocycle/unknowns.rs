use std::collections::HashMap;

use crate::arith::{Field, Monomial, MultiPoly};

use super::problem::{CocycleWitness, ExtProblem, Func, Shape, Unknown};

/// Ordered list of unknown coefficients: `f`, then `g`, then `h`, each in
/// descending graded-lex order of its monomials, so echelon pivots land on
/// leading terms.
#[derive(Clone, Debug)]
pub struct UnknownSpace {
    list: Vec<Unknown>,
    index: HashMap<Unknown, usize>,
}

fn monomials(two_vars: bool, only_d: bool, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for total in (0..=cap).rev() {
        if only_d {
            out.push(Monomial::dl(total, 0));
        } else if two_vars {
            for i in (0..=total).rev() {
                out.push(Monomial::dl(i, total - i));
            }
        } else {
            out.push(Monomial::dl(0, total));
        }
    }
    out
}

impl UnknownSpace {
    pub fn for_problem<C: Field>(p: &ExtProblem<C>) -> Self {
        let two_vars = !matches!(p.shape, Shape::Type1 { .. });
        let mut list = Vec::new();
        for (func, cap) in [(Func::F, p.caps.f), (Func::G, p.caps.g), (Func::H, p.caps.h)] {
            if !p.solves_for(func) {
                continue;
            }
            for mono in monomials(two_vars, func == Func::H, cap) {
                list.push(Unknown { func, mono });
            }
        }
        let index = list.iter().enumerate().map(|(i, u)| (*u, i)).collect();
        UnknownSpace { list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, i: usize) -> Unknown {
        self.list[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Unknown> {
        self.list.iter()
    }

    pub fn position(&self, u: &Unknown) -> Option<usize> {
        self.index.get(u).copied()
    }

    /// Witness with a single unit coefficient.
    pub fn unit<C: Field>(&self, i: usize, shape: &Shape<C>) -> CocycleWitness<C> {
        let mut w = CocycleWitness::zero_for(shape);
        let u = self.list[i];
        *w.get_mut(u.func) = MultiPoly::term(C::one(), u.mono);
        w
    }

    pub fn to_witness<C: Field>(&self, v: &[C], shape: &Shape<C>) -> CocycleWitness<C> {
        let mut w = CocycleWitness::zero_for(shape);
        for (u, c) in self.list.iter().zip(v) {
            if !c.is_zero() {
                let slot = w.get_mut(u.func);
                *slot = &*slot + &MultiPoly::term(c.clone(), u.mono);
            }
        }
        w
    }

    /// Coordinates of `w`, plus the terms that fall outside the space.
    pub fn split<C: Field>(&self, w: &CocycleWitness<C>) -> (Vec<C>, Vec<(Unknown, C)>) {
        let mut v = vec![C::zero(); self.len()];
        let mut outside = Vec::new();
        for func in [Func::F, Func::G, Func::H] {
            for (m, c) in w.get(func).terms() {
                let u = Unknown { func, mono: *m };
                match self.position(&u) {
                    Some(i) => v[i] = c.clone(),
                    None => outside.push((u, c.clone())),
                }
            }
        }
        (v, outside)
    }
}
