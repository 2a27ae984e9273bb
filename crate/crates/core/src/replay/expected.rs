use num_traits::Zero;

use crate::arith::{int, rat, Field, QuadExt, Rational};
use crate::scan::Classification;

use super::tables::quadratic_dbar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedFamily {
    pub s: Rational,
    pub f_dim: usize,
    pub g_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedPoint {
    pub delta: QuadExt,
    pub dbar: QuadExt,
    pub f_dim: usize,
    pub g_dim: usize,
}

/// Irreducible (`Δ, Δ̄ ≠ 0`) Type3 extensions of `W(b)` with `α = ᾱ` as
/// listed for each `b`: the Virasoro f-classes combined with the
/// homogeneous g-classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedClassification {
    pub families: Vec<ExpectedFamily>,
    pub points: Vec<ExpectedPoint>,
}

struct Contribution {
    f: usize,
    g: usize,
}

/// Classes along whole lines `Δ - Δ̄ = s`.
fn line_contributions(b: &Rational) -> Vec<(Rational, Contribution)> {
    vec![
        (int(0), Contribution { f: 2, g: 0 }),
        (int(2), Contribution { f: 1, g: 0 }),
        (int(3), Contribution { f: 1, g: 0 }),
        (int(4), Contribution { f: 1, g: 0 }),
        (b.clone(), Contribution { f: 0, g: 1 }),
        (b + int(1), Contribution { f: 0, g: 1 }),
    ]
}

/// Extra classes at isolated weights.
fn point_contributions(b: &Rational) -> Vec<(QuadExt, QuadExt, Contribution)> {
    let q = |r: Rational| QuadExt::rational(r);
    let mut out = vec![(q(int(1)), q(int(-4)), Contribution { f: 1, g: 0 })];
    for sign in [1, -1] {
        let dbar = quadratic_dbar(sign);
        out.push((dbar.clone() + &q(int(6)), dbar, Contribution { f: 1, g: 0 }));
    }
    out.push((q(int(1)), q(-(b + int(1))), Contribution { f: 0, g: 1 }));
    if *b == rat(-2, 3) {
        out.push((q(rat(5, 3)), q(rat(-2, 3)), Contribution { f: 0, g: 1 }));
    }
    out
}

fn quad_key(x: &QuadExt) -> (Rational, Rational) {
    (x.rational_part().clone(), x.irrational_part().clone())
}

pub fn expected_classification(b: &Rational) -> ExpectedClassification {
    let lines = line_contributions(b);
    let mut families: Vec<ExpectedFamily> = Vec::new();
    for (s, c) in &lines {
        match families.iter_mut().find(|f| f.s == *s) {
            Some(f) => {
                f.f_dim += c.f;
                f.g_dim += c.g;
            }
            None => families.push(ExpectedFamily { s: s.clone(), f_dim: c.f, g_dim: c.g }),
        }
    }
    families.sort_by(|a, b| a.s.cmp(&b.s));

    let mut points: Vec<ExpectedPoint> = Vec::new();
    for (delta, dbar, c) in point_contributions(b) {
        if delta.is_zero() || dbar.is_zero() {
            continue;
        }
        match points.iter_mut().find(|p| p.delta == delta && p.dbar == dbar) {
            Some(p) => {
                p.f_dim += c.f;
                p.g_dim += c.g;
            }
            None => {
                let s = delta.clone() - &dbar;
                let on_line = s.as_rational().and_then(|s| families.iter().find(|f| f.s == s));
                let (f0, g0) = on_line.map_or((0, 0), |f| (f.f_dim, f.g_dim));
                points.push(ExpectedPoint { delta, dbar, f_dim: f0 + c.f, g_dim: g0 + c.g });
            }
        }
    }
    points.sort_by(|a, b| (quad_key(&(a.delta.clone() - &a.dbar)), quad_key(&a.dbar)).cmp(&(quad_key(&(b.delta.clone() - &b.dbar)), quad_key(&b.dbar))));
    ExpectedClassification { families, points }
}

/// Differences between a computed classification and the expected one;
/// empty when they agree. Degenerate points are not compared.
pub fn compare_classification(got: &Classification, want: &ExpectedClassification) -> Vec<String> {
    let mut out = Vec::new();
    for f in &want.families {
        match got.families.iter().find(|g| g.s == f.s) {
            None => out.push(format!("missing family Δ-Δ̄={} (f {}, g {})", f.s, f.f_dim, f.g_dim)),
            Some(g) if (g.f_dim, g.g_dim) != (f.f_dim, f.g_dim) => out.push(format!(
                "family Δ-Δ̄={}: dims (f {}, g {}), expected (f {}, g {})",
                f.s, g.f_dim, g.g_dim, f.f_dim, f.g_dim
            )),
            Some(_) => {}
        }
    }
    for g in &got.families {
        if !want.families.iter().any(|f| f.s == g.s) {
            out.push(format!("unexpected family Δ-Δ̄={} (f {}, g {})", g.s, g.f_dim, g.g_dim));
        }
    }
    for p in &want.points {
        match got.irreducible_points().find(|g| g.delta == p.delta && g.dbar == p.dbar) {
            None => out.push(format!("missing point (Δ, Δ̄) = ({}, {})", p.delta, p.dbar)),
            Some(g) if (g.f_dim, g.g_dim) != (p.f_dim, p.g_dim) => out.push(format!(
                "point ({}, {}): dims (f {}, g {}), expected (f {}, g {})",
                p.delta, p.dbar, g.f_dim, g.g_dim, p.f_dim, p.g_dim
            )),
            Some(_) => {}
        }
    }
    for g in got.irreducible_points() {
        if !want.points.iter().any(|p| p.delta == g.delta && p.dbar == g.dbar) {
            out.push(format!("unexpected point (Δ, Δ̄) = ({}, {}) (f {}, g {})", g.delta, g.dbar, g.f_dim, g.g_dim));
        }
    }
    out
}
