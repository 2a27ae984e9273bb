use criterion::{criterion_group, criterion_main, Criterion};

use wbext::arith::{int, rat, Rational};
use wbext::cocycle::{solve_ext_with, Algebra, Caps, ExtProblem, Shape, SolveOptions};
use wbext::replay::{run_cases, table, Table};
use wbext::scan::{special_values, Promotion, ScanProblem};

fn type3(b: Rational, delta: Rational, dbar: Rational) -> ExtProblem<Rational> {
    ExtProblem::new(Algebra::W(b), Shape::Type3 { alpha: int(0), abar: int(0), delta, dbar })
}

fn solve(c: &mut Criterion) {
    let p = type3(int(1), int(3), int(1));
    c.bench_function("solve type 3, b = 1, s = 2", |bench| {
        bench.iter(|| solve_ext_with(&p, SolveOptions { stabilize: false }).unwrap())
    });
    c.bench_function("solve type 3 with stabilization", |bench| {
        bench.iter(|| solve_ext_with(&p, SolveOptions { stabilize: true }).unwrap())
    });
}

fn scan(c: &mut Criterion) {
    let b = rat(-2, 3);
    let sp = ScanProblem::new(type3(b.clone(), int(0), int(0)), Promotion::DbarOnLine(&b + &int(3))).unwrap();
    let mut g = c.benchmark_group("scan");
    g.sample_size(10);
    g.bench_function("special values on s = 3 + b, b = -2/3", |bench| bench.iter(|| special_values(&sp).unwrap()));
    g.finish();
}

fn replay(c: &mut Criterion) {
    let cases = table(Table::Theo2);
    let mut g = c.benchmark_group("replay");
    g.sample_size(10);
    g.bench_function("theo2", |bench| bench.iter(|| run_cases(&cases, Caps::default()).unwrap()));
    g.finish();
}

criterion_group!(benches, solve, scan, replay);
criterion_main!(benches);
