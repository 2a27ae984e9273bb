use thiserror::Error;

use crate::arith::{Field, Rational};
use crate::linalg::Matrix;

use super::coboundary::coboundary_generators;
use super::equations::{assemble_linear_system, build_equations};
use super::problem::{Caps, CocycleWitness, ExtProblem, Func};
use super::unknowns::UnknownSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("coboundary {0} does not satisfy the cocycle identities")]
    CoboundaryNotCocycle(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stabilization {
    NotChecked,
    Stable,
    /// The dimension changed when every cap was raised by two.
    CapTooSmall { caps: Caps, ext_dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub stabilization: Stabilization,
    /// Δ = 0 or Δ̄ = 0: outside the irreducible classification.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtSolution<C = Rational> {
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub ext_dim: usize,
    /// Canonical representatives of a complement of the coboundaries.
    pub basis: Vec<CocycleWitness<C>>,
    /// Basis of the coboundaries inside the truncated unknown space.
    pub coboundaries: Vec<CocycleWitness<C>>,
    pub diagnostics: Diagnostics,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub stabilize: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { stabilize: true }
    }
}

/// The linear data of one problem: the cocycle system and the coboundary
/// image split into the part inside the caps and the part beyond them.
pub struct LinearData<C> {
    pub space: UnknownSpace,
    pub system: Matrix<C>,
    /// Columns are coboundary generators; rows are the unknowns.
    pub image_low: Matrix<C>,
    /// Same columns; rows are monomials beyond the caps.
    pub image_high: Matrix<C>,
}

pub fn linear_data<C: Field>(p: &ExtProblem<C>) -> LinearData<C> {
    let space = UnknownSpace::for_problem(p);
    let ids = build_equations(p, &space);
    let system = assemble_linear_system(&ids, space.len());
    let gens = coboundary_generators(p);
    let mut high_index: Vec<(Func, crate::arith::Monomial)> = Vec::new();
    let mut low_cols = Vec::new();
    let mut high_cols: Vec<Vec<(usize, C)>> = Vec::new();
    for g in &gens {
        let (v, outside) = space.split(g);
        low_cols.push(v);
        let mut col = Vec::new();
        for (u, c) in outside {
            let key = (u.func, u.mono);
            let i = high_index.iter().position(|k| *k == key).unwrap_or_else(|| {
                high_index.push(key);
                high_index.len() - 1
            });
            col.push((i, c));
        }
        high_cols.push(col);
    }
    let mut image_low = Matrix::zeros(space.len(), gens.len());
    for (j, v) in low_cols.into_iter().enumerate() {
        for (i, c) in v.into_iter().enumerate() {
            image_low.set(i, j, c);
        }
    }
    let mut image_high = Matrix::zeros(high_index.len(), gens.len());
    for (j, col) in high_cols.into_iter().enumerate() {
        for (i, c) in col {
            image_high.set(i, j, c);
        }
    }
    LinearData { space, system, image_low, image_high }
}

/// Basis vectors (in unknown coordinates) of the coboundaries that fit
/// inside the caps, in reduced echelon form.
fn truncated_coboundaries<C: Field>(data: &LinearData<C>) -> Vec<Vec<C>> {
    let combos = data.image_high.nullspace();
    let vectors: Vec<Vec<C>> = combos.iter().map(|x| data.image_low.mul_vec(x)).collect();
    if vectors.is_empty() {
        return vectors;
    }
    let (red, pivots) = Matrix::from_rows(data.space.len(), vectors).rref();
    red.into_rows().into_iter().take(pivots.len()).collect()
}

/// Reduces each cocycle vector modulo the coboundary echelon basis, then
/// echelonizes what is left. Rows come out with leading coefficient 1 on
/// the highest unknown.
fn canonical_complement<C: Field>(n: usize, cocycles: &[Vec<C>], coboundaries: &[Vec<C>]) -> Vec<Vec<C>> {
    let pivot_of = |v: &[C]| v.iter().position(|x| !x.is_zero());
    let mut reduced = Vec::new();
    for z in cocycles {
        let mut z = z.clone();
        for b in coboundaries {
            let pc = pivot_of(b).expect("nonzero echelon row");
            if !z[pc].is_zero() {
                let f = z[pc].clone();
                for (x, y) in z.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = x.clone() - f.clone() * y;
                    }
                }
            }
        }
        reduced.push(z);
    }
    if reduced.is_empty() {
        return reduced;
    }
    let (red, pivots) = Matrix::from_rows(n, reduced).rref();
    red.into_rows().into_iter().take(pivots.len()).collect()
}

fn solve_once<C: Field>(p: &ExtProblem<C>) -> Result<ExtSolution<C>, SolveError> {
    let data = linear_data(p);
    let cocycles = data.system.nullspace();
    let cobs = truncated_coboundaries(&data);
    for b in &cobs {
        if data.system.mul_vec(b).iter().any(|x| !x.is_zero()) {
            return Err(SolveError::CoboundaryNotCocycle(data.space.to_witness(b, &p.shape).to_string()));
        }
    }
    let complement = canonical_complement(data.space.len(), &cocycles, &cobs);
    let ext_dim = cocycles.len() - cobs.len();
    debug_assert_eq!(complement.len(), ext_dim);
    Ok(ExtSolution {
        cocycle_dim: cocycles.len(),
        coboundary_dim: cobs.len(),
        ext_dim,
        basis: complement.iter().map(|v| data.space.to_witness(v, &p.shape)).collect(),
        coboundaries: cobs.iter().map(|v| data.space.to_witness(v, &p.shape)).collect(),
        diagnostics: Diagnostics { stabilization: Stabilization::NotChecked, degenerate: p.shape.is_degenerate() },
    })
}

/// Cocycles modulo coboundaries within the caps of `p`.
pub fn solve_ext<C: Field>(p: &ExtProblem<C>) -> Result<ExtSolution<C>, SolveError> {
    solve_ext_with(p, SolveOptions::default())
}

pub fn solve_ext_with<C: Field>(p: &ExtProblem<C>, opts: SolveOptions) -> Result<ExtSolution<C>, SolveError> {
    let mut sol = solve_once(p)?;
    if opts.stabilize {
        let raised = p.clone().with_caps(p.caps.raised(2));
        let high = ext_dim_only(&raised)?;
        sol.diagnostics.stabilization = if high == sol.ext_dim {
            Stabilization::Stable
        } else {
            Stabilization::CapTooSmall { caps: raised.caps, ext_dim: high }
        };
    }
    Ok(sol)
}

/// Dimensions only, by ranks: `cocycle_dim - (rank(image) - rank(high part))`.
pub fn ext_dim_only<C: Field>(p: &ExtProblem<C>) -> Result<usize, SolveError> {
    let data = linear_data(p);
    let cocycle_dim = data.space.len() - data.system.rank();
    let full = stack(&data.image_low, &data.image_high);
    let cob = full.rank() - data.image_high.rank();
    Ok(cocycle_dim - cob)
}

fn stack<C: Field>(a: &Matrix<C>, b: &Matrix<C>) -> Matrix<C> {
    let mut rows = a.clone().into_rows();
    rows.extend(b.clone().into_rows());
    Matrix::from_rows(a.cols(), rows)
}

/// Coordinates of the class of `w` in `sol.basis`, or `None` when `w` is not
/// a combination of basis witnesses and coboundaries within the caps.
pub fn ext_class<C: Field>(p: &ExtProblem<C>, sol: &ExtSolution<C>, w: &CocycleWitness<C>) -> Option<Vec<C>> {
    let space = UnknownSpace::for_problem(p);
    let (target, outside) = space.split(w);
    if !outside.is_empty() {
        return None;
    }
    let gens: Vec<Vec<C>> = sol.basis.iter().chain(&sol.coboundaries).map(|g| space.split(g).0).collect();
    let k = gens.len();
    let rows = (0..space.len())
        .map(|i| gens.iter().map(|g| g[i].clone()).chain(std::iter::once(target[i].clone())).collect())
        .collect();
    let (red, pivots) = Matrix::from_rows(k + 1, rows).rref();
    if pivots.contains(&k) {
        return None;
    }
    let mut coords = vec![C::zero(); sol.basis.len()];
    for (r, &j) in pivots.iter().enumerate() {
        if j < sol.basis.len() {
            coords[j] = red.get(r, k).clone();
        }
    }
    Some(coords)
}
