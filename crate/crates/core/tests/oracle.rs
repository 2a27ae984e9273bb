mod common;

use common::oracle::{oracle_dims, rank, Dense};
use wbext::cocycle::{solve_ext_with, Algebra, Caps, ExtProblem, Shape, SolveOptions};
use wbext::{int, rat, Rational};

fn dims(p: &ExtProblem<Rational>) -> (usize, usize, usize) {
    let s = solve_ext_with(p, SolveOptions { stabilize: false }).unwrap();
    (s.cocycle_dim, s.coboundary_dim, s.ext_dim)
}

#[test]
fn dense_shift_expands_binomially() {
    let p: Dense<Rational> = Dense::from_terms(&[(2, 0, int(1))]);
    assert_eq!(p.shift(), Dense::from_terms(&[(2, 0, int(1)), (1, 1, int(2)), (0, 2, int(1))]));
}

#[test]
fn rank_of_small_matrices() {
    assert_eq!(rank(vec![vec![int(1), int(2)], vec![int(2), int(4)]]), 1);
    assert_eq!(rank::<Rational>(vec![]), 0);
    assert_eq!(rank(vec![vec![int(0), int(1)], vec![int(1), int(0)]]), 2);
}

#[test]
fn virasoro_type1_matches_known_dimensions() {
    for (delta, ext) in [(1, 1), (2, 1), (3, 0)] {
        let p = ExtProblem::new(Algebra::Virasoro, Shape::Type1 { alpha: int(0), gamma: int(0), delta: int(delta) });
        assert_eq!(oracle_dims(&p).ext, ext, "Δ = {delta}");
    }
}

#[test]
fn oracle_agrees_with_engine_on_small_caps() {
    let caps = Caps { f: 4, g: 3, h: 4, phi: 4 };
    let cases = [
        ExtProblem::new(Algebra::W(int(1)), Shape::Type1 { alpha: int(0), gamma: int(0), delta: int(1) }),
        ExtProblem::new(Algebra::W(int(3)), Shape::Type2 { alpha: int(1), gamma: int(-1), delta: int(1) }),
        ExtProblem::new(Algebra::W(rat(1, 2)), Shape::Type2 { alpha: int(1), gamma: int(0), delta: int(2) }),
        ExtProblem::new(Algebra::W(int(2)), Shape::Type3 { alpha: int(0), abar: int(0), delta: int(4), dbar: int(2) }),
        ExtProblem::new(Algebra::W(int(1)), Shape::Type3 { alpha: int(0), abar: int(0), delta: int(1), dbar: int(-2) }),
    ];
    for p in cases {
        let p = p.with_caps(caps);
        let o = oracle_dims(&p);
        assert_eq!((o.cocycle, o.coboundary, o.ext), dims(&p), "{:?}", p.shape);
    }
}

