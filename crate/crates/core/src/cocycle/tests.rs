use crate::arith::format::parse;
use crate::arith::{int, rat, MultiPoly, Rational};

use super::*;

fn poly(s: &str) -> MultiPoly<Rational> {
    parse(s).unwrap()
}

fn w(b: i64) -> Algebra {
    Algebra::w(int(b)).unwrap()
}

fn t3(b: Algebra, delta: Rational, dbar: Rational) -> ExtProblem {
    ExtProblem::new(b, Shape::Type3 { alpha: int(0), abar: int(0), delta, dbar })
}

#[test]
fn type1_generic_small_caps() {
    let p = ExtProblem::new(w(3), Shape::Type1 { alpha: int(1), gamma: int(2), delta: int(5) })
        .with_caps(Caps { f: 1, g: 0, h: 0, phi: 0 });
    let sol = solve_ext_with(&p, SolveOptions { stabilize: false }).unwrap();
    assert_eq!(sol.cocycle_dim, 1);
    assert_eq!(sol.coboundary_dim, 1);
    assert_eq!(sol.ext_dim, 0);
    assert_eq!(sol.coboundaries[0].f, poly("l + 3/5"));
}

#[test]
fn type2_unique_class() {
    let p = ExtProblem::new(w(3), Shape::Type2 { alpha: int(1), gamma: int(-1), delta: int(1) });
    let sol = solve_ext(&p).unwrap();
    assert_eq!(sol.ext_dim, 1);
    assert_eq!(sol.diagnostics.stabilization, Stabilization::Stable);
    let b = &sol.basis[0];
    assert!(verify_witness(&p, b).pass());
    let paper = CocycleWitness::new(poly("1"), poly("0"), Some(poly("1")));
    assert!(verify_witness(&p, &paper).pass());
    let p2 = ExtProblem::new(w(3), Shape::Type2 { alpha: int(1), gamma: int(0), delta: int(1) });
    assert_eq!(solve_ext(&p2).unwrap().ext_dim, 0);
}

#[test]
fn type3_b1_delta3_dbar1() {
    let p = t3(w(1), int(3), int(1));
    let sol = solve_ext(&p).unwrap();
    assert_eq!(sol.ext_dim, 2);
    for b in &sol.basis {
        assert!(verify_witness(&p, b).pass(), "{b}");
    }
    let f = CocycleWitness::new(poly("2*d*l^2 + l^3"), poly("0"), None);
    let g = CocycleWitness::new(poly("0"), poly("d - l"), None);
    assert!(verify_witness(&p, &f).pass());
    assert!(verify_witness(&p, &g).pass());
}

#[test]
fn g_sector_constant_for_b2() {
    let p = t3(w(2), int(3), int(1)).with_sector(Sector::G).with_caps(Caps { f: 0, g: 0, h: 0, phi: 0 });
    let sol = solve_ext_with(&p, SolveOptions { stabilize: false }).unwrap();
    assert_eq!(sol.cocycle_dim, 1);
    let q = t3(w(2), int(4), int(1)).with_sector(Sector::G).with_caps(Caps { f: 0, g: 0, h: 0, phi: 0 });
    assert_eq!(solve_ext_with(&q, SolveOptions { stabilize: false }).unwrap().cocycle_dim, 0);
}

#[test]
fn verify_examples() {
    let p = ExtProblem::new(w(1), Shape::Type1 { alpha: int(2), gamma: int(-2), delta: int(1) });
    assert!(verify_witness(&p, &CocycleWitness::new(poly("l^2"), poly("1"), None)).pass());
    let b = rat(7, 3);
    let dbar = rat(1, 5);
    let q = ExtProblem::new(Algebra::w(b.clone()).unwrap(), Shape::Type3 {
        alpha: int(0),
        abar: int(0),
        delta: dbar.clone() + int(1) + b.clone(),
        dbar: dbar.clone(),
    });
    let g = MultiPoly::var(crate::arith::Var::D) - MultiPoly::var(crate::arith::Var::L).scale(&(dbar / b));
    assert!(verify_witness(&q, &CocycleWitness::new(MultiPoly::zero(), g, None)).pass());
    assert!(!verify_witness(&q, &CocycleWitness::new(poly("l^5"), poly("0"), None)).pass());
}

#[test]
fn coboundary_type3_phi_one() {
    let p = ExtProblem::new(w(2), Shape::Type3 { alpha: int(3), abar: int(1), delta: int(5), dbar: int(2) });
    assert_eq!(coboundary_image(&p, 0).f, poly("3*l + 2"));
    for c in coboundary_generators(&p) {
        assert!(verify_witness(&p, &c).pass());
    }
}

#[test]
fn equation_counts() {
    let p = ExtProblem::new(w(2), Shape::Type2 { alpha: int(0), gamma: int(0), delta: int(1) });
    let space = UnknownSpace::for_problem(&p);
    assert_eq!(build_equations(&p, &space).len(), 5);
    let v = ExtProblem::new(Algebra::Virasoro, Shape::Type1 { alpha: int(0), gamma: int(0), delta: int(1) });
    assert_eq!(build_equations(&v, &UnknownSpace::for_problem(&v)).len(), 1);
}
