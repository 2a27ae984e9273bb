use rayon::prelude::*;

use crate::arith::{quadratic_roots, uni_factor_special_parts, Field, QuadExt, RatFunc, Rational, UniPoly};
use crate::cocycle::{linear_data, solve_ext_with, LinearData, SolveOptions};
use crate::linalg::{bareiss, Matrix};

use super::problem::{ScanError, ScanProblem};
use super::report::{clear_denominators, Dims, ScanReport, SpecialValue};

fn to_poly_rows(m: &Matrix<RatFunc>, rows: &[usize], cols: &[usize]) -> Vec<Vec<UniPoly<Rational>>> {
    rows.iter()
        .map(|&i| {
            cols.iter()
                .map(|&j| {
                    let x = m.get(i, j);
                    assert!(x.is_polynomial(), "scan entries are polynomial in t");
                    x.num().clone()
                })
                .collect()
        })
        .collect()
}

/// Rank over Q(t) and the fraction-free pivots, block by block.
fn poly_rank(m: &Matrix<RatFunc>) -> (usize, Vec<UniPoly<Rational>>) {
    let mut rank = 0;
    let mut pivots = Vec::new();
    for (rows, cols) in m.blocks() {
        let res = bareiss(to_poly_rows(m, &rows, &cols), cols.len());
        rank += res.rank;
        pivots.extend(res.pivots);
    }
    (rank, pivots)
}

fn stack<C: Field>(a: &Matrix<C>, b: &Matrix<C>) -> Matrix<C> {
    let mut rows = a.clone().into_rows();
    rows.extend(b.clone().into_rows());
    Matrix::from_rows(a.cols(), rows)
}

struct Generic {
    unknowns: usize,
    rank: usize,
    dims: Dims,
    pivots: Vec<UniPoly<Rational>>,
}

fn generic(data: &LinearData<RatFunc>) -> Generic {
    let (rank, mut pivots) = poly_rank(&data.system);
    let (r_img, p_img) = poly_rank(&stack(&data.image_low, &data.image_high));
    let (r_high, p_high) = poly_rank(&data.image_high);
    pivots.extend(p_img);
    pivots.extend(p_high);
    let unknowns = data.space.len();
    let cocycle = unknowns - rank;
    let coboundary = r_img - r_high;
    Generic { unknowns, rank, dims: Dims { cocycle, coboundary, ext: cocycle - coboundary }, pivots }
}

/// Rank of the cocycle system over Q(t).
pub fn generic_rank(sp: &ScanProblem) -> usize {
    poly_rank(&linear_data(&sp.instantiate(&RatFunc::t())).system).0
}

/// Primitive square-free lcm of the nonconstant pivots, and the distinct
/// square-free pivots it was built from.
fn certificate(pivots: &[UniPoly<Rational>]) -> (UniPoly<Rational>, Vec<UniPoly<Rational>>) {
    let mut cert = UniPoly::one();
    let mut parts: Vec<UniPoly<Rational>> = Vec::new();
    for p in pivots {
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        let sf = p.square_free().primitive().1;
        if parts.contains(&sf) {
            continue;
        }
        let g = cert.gcd(&sf);
        cert = (&cert * &sf).exact_div(&g).expect("gcd divides");
        parts.push(sf);
    }
    (cert.primitive().1, parts)
}

fn dims_at<C: Field>(sp: &ScanProblem, t: &C) -> Result<Dims, ScanError> {
    let p = sp.instantiate(t);
    let sol = solve_ext_with(&p, SolveOptions { stabilize: false })?;
    Ok(Dims { cocycle: sol.cocycle_dim, coboundary: sol.coboundary_dim, ext: sol.ext_dim })
}

fn examine(sp: &ScanProblem, t: QuadExt, minimal_poly: UniPoly<Rational>, generic_ext: usize) -> Result<Option<SpecialValue>, ScanError> {
    let p = sp.instantiate(&t);
    let sol = solve_ext_with(&p, SolveOptions { stabilize: false })?;
    if sol.ext_dim == generic_ext {
        return Ok(None);
    }
    let (delta, dbar) = sp.weights(&t);
    Ok(Some(SpecialValue {
        degenerate: p.shape.is_degenerate(),
        t,
        minimal_poly,
        delta,
        dbar,
        dims: Dims { cocycle: sol.cocycle_dim, coboundary: sol.coboundary_dim, ext: sol.ext_dim },
        witnesses: sol.basis,
    }))
}

/// Generic dimension over Q(t), the certificate of possible jumps, and the
/// exact dimension at every rational or quadratic root of the certificate.
pub fn special_values(sp: &ScanProblem) -> Result<ScanReport, ScanError> {
    let generic_problem = sp.instantiate(&RatFunc::t());
    let data = linear_data(&generic_problem);
    let g = generic(&data);
    let (cert, parts) = certificate(&g.pivots);
    let factorization = uni_factor_special_parts(&cert, &parts)?;

    let mut candidates: Vec<(QuadExt, UniPoly<Rational>)> = Vec::new();
    for (r, _) in &factorization.rational_roots {
        candidates.push((QuadExt::rational(r.clone()), UniPoly::linear_root(r)));
    }
    for (q, _) in &factorization.quadratics {
        let (r1, r2) = quadratic_roots(&q.coeff(2), &q.coeff(1), &q.coeff(0)).expect("irreducible quadratic");
        candidates.push((r1, q.clone()));
        candidates.push((r2, q.clone()));
    }
    let examined: Result<Vec<_>, ScanError> =
        candidates.into_par_iter().map(|(t, mp)| examine(sp, t, mp, g.dims.ext)).collect();
    let mut specials: Vec<SpecialValue> = examined?.into_iter().flatten().collect();
    specials.sort_by(|a, b| {
        let key = |s: &SpecialValue| (s.t.rational_part().clone(), s.t.irrational_part().clone());
        key(a).cmp(&key(b))
    });

    let generic_solution = solve_ext_with(&generic_problem, SolveOptions { stabilize: false })?;
    let generic_witnesses = generic_solution.basis.iter().map(clear_denominators).collect();
    let unresolved = if factorization.residual.degree().unwrap_or(0) > 0 { vec![factorization.residual.clone()] } else { vec![] };

    Ok(ScanReport {
        problem: sp.clone(),
        unknowns: g.unknowns,
        generic_rank: g.rank,
        generic: g.dims,
        generic_witnesses,
        certificate: cert,
        factorization,
        specials,
        unresolved,
    })
}

/// Exact dimensions at an arbitrary rational value of `t`.
pub fn dims_at_rational(sp: &ScanProblem, t: &Rational) -> Result<Dims, ScanError> {
    dims_at(sp, t)
}
