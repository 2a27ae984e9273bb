use num_bigint::BigInt;

use crate::arith::format::parse;
use crate::arith::{int, rat, MultiPoly, QuadExt, Rational};
use crate::cocycle::{Algebra, CocycleWitness, Sector, Shape};

use super::{Amendment, PaperWitness, ReplayCase, Table};

/// Sample weight `Δ̄` for cases that hold along a whole line `Δ - Δ̄ = s`.
pub const LINE_SAMPLE: (i64, i64) = (7, 3);

fn sample() -> Rational {
    rat(LINE_SAMPLE.0, LINE_SAMPLE.1)
}

/// Parses a witness polynomial; `t` stands for `Δ̄`.
fn p(s: &str) -> MultiPoly<Rational> {
    parse(s).unwrap_or_else(|e| panic!("table polynomial {s:?}: {e}"))
}

/// `Σ c·m` with monomials given in the text format.
fn combo(terms: &[(Rational, &str)]) -> MultiPoly<Rational> {
    terms.iter().fold(MultiPoly::zero(), |acc, (c, m)| &acc + &p(m).scale(c))
}

fn fg(label: &str, f: &str, g: &str) -> PaperWitness {
    PaperWitness { label: label.to_string(), witness: CocycleWitness::new(p(f), p(g), None), amendment: None }
}

fn fg_poly(label: &str, f: MultiPoly<Rational>, g: MultiPoly<Rational>) -> PaperWitness {
    PaperWitness { label: label.to_string(), witness: CocycleWitness::new(f, g, None), amendment: None }
}

/// Classes `(f, 0)` and `(0, g)` plus the pair `(f, g)` itself.
fn pair(f: &str, g: MultiPoly<Rational>) -> Vec<PaperWitness> {
    vec![fg_poly("f", p(f), MultiPoly::zero()), fg_poly("g", MultiPoly::zero(), g.clone()), fg_poly("pair", p(f), g)]
}

const F3: &str = "2*d*l^2 + l^3";
const F4: &str = "d^2*l^2 + d*l^3";
const F5: &str = "4*d^3*l^2 + 6*d^2*l^3 - d*l^4 + l^5*t";
const F6: &str = "5*d^4*l^2 + 10*d^2*l^4 - d*l^5";
const F6P: &str = "d^4*l^2 - 10*d^2*l^4 - 17*d*l^5 - 8*l^6";
const F7: &str = "d^4*l^3 - 2*d^3*l^4*t - 3*d^3*l^4 - 3*d^2*l^5*t - 3*d*l^6*t - d*l^6 - l^7*t - 9/28*l^7";

fn q(r: Rational) -> QuadExt {
    QuadExt::rational(r)
}

/// `Δ̄ = -5/2 ± √19/2`, the weights on the `Δ - Δ̄ = 6` line with an extra
/// f-class.
pub fn quadratic_dbar(sign: i64) -> QuadExt {
    QuadExt::new(rat(-5, 2), rat(sign, 2), BigInt::from(19)).expect("19 is square-free")
}

fn type3(alg: Algebra, delta: QuadExt, dbar: QuadExt) -> (Algebra, Shape<QuadExt>) {
    (alg, Shape::Type3 { alpha: q(int(0)), abar: q(int(0)), delta, dbar })
}

fn point(b: &Rational, delta: Rational, dbar: Rational) -> (Algebra, Shape<QuadExt>) {
    type3(Algebra::W(b.clone()), q(delta), q(dbar))
}

fn line(alg: Algebra, s: Rational) -> (Algebra, Shape<QuadExt>) {
    type3(alg, q(sample() + &s), q(sample()))
}

fn w_line(b: &Rational, s: Rational) -> (Algebra, Shape<QuadExt>) {
    line(Algebra::W(b.clone()), s)
}

fn quad_point(alg: Algebra, sign: i64) -> (Algebra, Shape<QuadExt>) {
    let dbar = quadratic_dbar(sign);
    type3(alg, dbar.clone() + &q(int(6)), dbar)
}

struct Builder {
    table: Table,
    cases: Vec<ReplayCase>,
}

impl Builder {
    fn add(&mut self, id: &str, (algebra, shape): (Algebra, Shape<QuadExt>), sector: Sector, ext: usize, ws: Vec<PaperWitness>) {
        self.cases.push(ReplayCase {
            id: id.to_string(),
            table: self.table,
            algebra,
            shape,
            sector,
            witnesses: ws,
            golden_ext_dim: ext,
        });
    }
}

fn type1(b: Option<i64>, alpha: i64, gamma: i64, delta: i64) -> (Algebra, Shape<QuadExt>) {
    let alg = b.map_or(Algebra::Virasoro, |b| Algebra::W(int(b)));
    (alg, Shape::Type1 { alpha: q(int(alpha)), gamma: q(int(gamma)), delta: q(int(delta)) })
}

fn type2(b: Option<i64>, alpha: i64, gamma: i64, delta: i64) -> (Algebra, Shape<QuadExt>) {
    let alg = b.map_or(Algebra::Virasoro, |b| Algebra::W(int(b)));
    (alg, Shape::Type2 { alpha: q(int(alpha)), gamma: q(int(gamma)), delta: q(int(delta)) })
}

fn vir_th2(t: &mut Builder) {
    t.add("vir-th2-i", type1(None, 0, 0, 1), Sector::Full, 1, vec![fg("f", "l^2", "0")]);
    t.add("vir-th2-ii", type1(None, 0, 0, 2), Sector::Full, 1, vec![fg("f", "l^3", "0")]);
    t.add("vir-th2-delta3", type1(None, 0, 0, 3), Sector::Full, 0, vec![]);
    t.add("vir-th2-shifted", type1(None, 1, 1, 1), Sector::Full, 0, vec![]);
    t.add("vir-th2-translated", type1(None, 3, -3, 2), Sector::Full, 1, vec![fg("f", "l^3", "0")]);
}

fn vir_th3(t: &mut Builder) {
    let fh = |label: &str| PaperWitness {
        label: label.to_string(),
        witness: CocycleWitness::new(p("1"), MultiPoly::zero(), Some(p("1"))),
        amendment: None,
    };
    t.add("vir-th3-i", type2(None, 1, -1, 1), Sector::Full, 1, vec![fh("f=h")]);
    t.add("vir-th3-delta2", type2(None, 1, -1, 2), Sector::Full, 0, vec![]);
    t.add("vir-th3-shifted", type2(None, 1, 2, 1), Sector::Full, 0, vec![]);
}

fn vir_th4(t: &mut Builder) {
    let vir = || Algebra::Virasoro;
    let at = |d: i64, db: i64| type3(vir(), q(int(d)), q(int(db)));
    t.add("vir-th4-i", line(vir(), int(0)), Sector::Full, 2, vec![fg("c0", "1", "0"), fg("c1", "l", "0")]);
    t.add("vir-th4-ii", at(1, 0), Sector::Full, 3, vec![fg("c0", "d", "0"), fg("c1", "d*l", "0"), fg("c2", "l^2", "0")]);
    t.add("vir-th4-iii", line(vir(), int(2)), Sector::Full, 1, vec![fg("f3", F3, "0")]);
    t.add("vir-th4-iv", line(vir(), int(3)), Sector::Full, 1, vec![fg("f4", F4, "0")]);
    t.add("vir-th4-v", line(vir(), int(4)), Sector::Full, 1, vec![fg("f5", F5, "0")]);
    t.add("vir-th4-vi", at(5, 0), Sector::Full, 1, vec![fg("f6", F6, "0")]);
    t.add("vir-th4-vi-prime", at(1, -4), Sector::Full, 1, vec![fg("f6'", F6P, "0")]);
    t.add("vir-th4-vii-plus", quad_point(vir(), 1), Sector::Full, 1, vec![fg("f7", F7, "0")]);
    t.add("vir-th4-vii-minus", quad_point(vir(), -1), Sector::Full, 1, vec![fg("f7", F7, "0")]);
    t.add("vir-th4-line7", line(vir(), int(7)), Sector::Full, 0, vec![]);
    t.add(
        "vir-th4-alpha-mismatch",
        (vir(), Shape::Type3 { alpha: q(int(1)), abar: q(int(0)), delta: q(int(3)), dbar: q(int(1)) }),
        Sector::Full,
        0,
        vec![],
    );
}

fn theo1(t: &mut Builder) {
    t.add("theo1-b1", type1(Some(1), 0, 0, 1), Sector::Full, 2, vec![fg("f", "l^2", "0"), fg("g", "0", "1"), fg("pair", "l^2", "1")]);
    t.add("theo1-b2", type1(Some(2), 0, 0, 2), Sector::Full, 2, vec![fg("f", "l^3", "0"), fg("g", "0", "1"), fg("pair", "l^3", "1")]);
    t.add("theo1-b3", type1(Some(3), 0, 0, 3), Sector::Full, 1, vec![fg("g", "0", "1")]);
    t.add("theo1-b3-delta1", type1(Some(3), 0, 0, 1), Sector::Full, 1, vec![fg("f", "l^2", "0")]);
    t.add("theo1-b5-delta2", type1(Some(5), 2, -2, 2), Sector::Full, 1, vec![fg("f", "l^3", "0")]);
    t.add("theo1-shifted", type1(Some(2), 1, 1, 2), Sector::Full, 0, vec![]);
}

fn theo2(t: &mut Builder) {
    let ws = vec![PaperWitness {
        label: "f=h".to_string(),
        witness: CocycleWitness::new(p("1"), MultiPoly::zero(), Some(p("1"))),
        amendment: None,
    }];
    t.add("theo2-i", type2(Some(3), 1, -1, 1), Sector::Full, 1, ws);
}

/// `∂ - (Δ̄/b)λ`.
fn g_linear(b: &Rational) -> MultiPoly<Rational> {
    combo(&[(int(1), "d"), (-b.recip(), "l*t")])
}

/// `∂² - (1/b + 2Δ̄/b)∂λ - (Δ̄/b)λ²`.
fn g_quadratic(b: &Rational) -> MultiPoly<Rational> {
    let r = b.recip();
    combo(&[(int(1), "d^2"), (-r.clone(), "d*l"), (-(&r * int(2)), "d*l*t"), (-r, "l^2*t")])
}

fn theo3(t: &mut Builder) {
    let b = int(-1);
    t.add("theo3-bneg1-i", w_line(&b, int(-1)), Sector::Full, 1, vec![fg("g", "0", "1")]);
    t.add(
        "theo3-bneg1-ii",
        w_line(&b, int(0)),
        Sector::Full,
        3,
        vec![fg("c0", "1", "0"), fg("c1", "l", "0"), fg("g", "0", "d + l*t"), fg("pair", "l + 1", "d + l*t")],
    );

    let b = int(1);
    t.add("theo3-b1-i", w_line(&b, int(1)), Sector::Full, 1, vec![fg("g", "0", "1")]);
    t.add("theo3-b1-ii", w_line(&b, int(2)), Sector::Full, 2, pair(F3, p("d - l*t")));
    t.add("theo3-b1-iii", point(&b, int(1), int(-2)), Sector::Full, 2, pair(F4, p("d^2 + 3*d*l + 2*l^2")));

    let b = int(2);
    t.add("theo3-b2-i", w_line(&b, int(2)), Sector::Full, 2, pair(F3, p("1")));
    t.add("theo3-b2-ii", w_line(&b, int(3)), Sector::Full, 2, pair(F4, p("d - 1/2*l*t")));
    let g = p("d^2 + 5/2*d*l + 3/2*l^2");
    let printed = "4*d^3*l^2 + 6*d^2*l^3 - d*l^4 + 3*l^5";
    let amended = "4*d^3*l^2 + 6*d^2*l^3 - d*l^4 - 3*l^5";
    let note = "printed λ⁵ coefficient is +3; the Δ - Δ̄ = 4 family polynomial at Δ̄ = -3 has -3";
    let mut ws = pair(printed, g.clone());
    for (w, amend) in ws.iter_mut().zip([Some(p(amended)), None, Some(p(amended))]) {
        if let Some(f) = amend {
            w.amendment = Some(Amendment { witness: CocycleWitness::new(f, w.witness.g.clone(), None), note: note.to_string() });
        }
    }
    t.add("theo3-b2-iii", point(&b, int(1), int(-3)), Sector::Full, 2, ws);

    let b = int(3);
    t.add("theo3-b3-i", w_line(&b, int(3)), Sector::Full, 2, pair(F4, p("1")));
    t.add("theo3-b3-ii", w_line(&b, int(4)), Sector::Full, 2, pair(F5, p("d - 1/3*l*t")));
    t.add("theo3-b3-iii", point(&b, int(1), int(-4)), Sector::Full, 2, pair(F6P, p("d^2 + 7/3*d*l + 4/3*l^2")));

    let b = int(4);
    t.add("theo3-b4-i", w_line(&b, int(4)), Sector::Full, 2, pair(F5, p("1")));
    t.add("theo3-b4-ii", w_line(&b, int(5)), Sector::Full, 1, vec![fg("g", "0", "d - 1/4*l*t")]);
    t.add("theo3-b4-ii-prime", point(&b, int(1), int(-4)), Sector::Full, 2, pair(F6P, p("d + l")));
    t.add("theo3-b4-iii", point(&b, int(1), int(-5)), Sector::Full, 1, vec![fg("g", "0", "d^2 + 9/4*d*l + 5/4*l^2")]);

    let b = int(5);
    t.add("theo3-b5-i", w_line(&b, int(5)), Sector::Full, 1, vec![fg("g", "0", "1")]);
    t.add("theo3-b5-i-prime", point(&b, int(1), int(-4)), Sector::Full, 2, pair(F6P, p("1")));
    t.add("theo3-b5-ii", w_line(&b, int(6)), Sector::Full, 1, vec![fg("g", "0", "d - 1/5*l*t")]);
    t.add("theo3-b5-ii-prime-plus", quad_point(Algebra::W(b.clone()), 1), Sector::Full, 2, pair(F7, p("d - 1/5*l*t")));
    t.add("theo3-b5-ii-prime-minus", quad_point(Algebra::W(b.clone()), -1), Sector::Full, 2, pair(F7, p("d - 1/5*l*t")));
    t.add("theo3-b5-iii", point(&b, int(1), int(-6)), Sector::Full, 1, vec![fg("g", "0", "d^2 + 11/5*d*l + 6/5*l^2")]);

    let b = int(6);
    t.add("theo3-b6-i", w_line(&b, int(6)), Sector::Full, 1, vec![fg("g", "0", "1")]);
    t.add("theo3-b6-i-prime-plus", quad_point(Algebra::W(b.clone()), 1), Sector::Full, 2, pair(F7, p("1")));
    t.add("theo3-b6-i-prime-minus", quad_point(Algebra::W(b.clone()), -1), Sector::Full, 2, pair(F7, p("1")));
    t.add("theo3-b6-ii", w_line(&b, int(7)), Sector::Full, 1, vec![fg("g", "0", "d - 1/6*l*t")]);
    t.add("theo3-b6-iii", point(&b, int(1), int(-7)), Sector::Full, 1, vec![fg("g", "0", "d^2 + 13/6*d*l + 7/6*l^2")]);

    t.add(
        "theo3-alpha-mismatch",
        (Algebra::W(int(2)), Shape::Type3 { alpha: q(int(1)), abar: q(int(0)), delta: q(int(4)), dbar: q(int(2)) }),
        Sector::Full,
        0,
        vec![],
    );
}

/// Generic values of `b` used by the lemma-g table.
pub fn generic_b_samples() -> [Rational; 3] {
    [rat(7, 2), rat(-5, 3), rat(9, 4)]
}

fn lemma_g(t: &mut Builder) {
    let b = rat(-2, 3);
    let g = |s: &str| vec![fg("g", "0", s)];
    t.add("lemma-g-bneg2_3-i", w_line(&b, rat(-2, 3)), Sector::G, 1, g("1"));
    t.add("lemma-g-bneg2_3-ii", w_line(&b, rat(1, 3)), Sector::G, 1, g("d + 3/2*l*t"));
    t.add("lemma-g-bneg2_3-iii", point(&b, int(1), rat(-1, 3)), Sector::G, 1, g("d^2 + 1/2*d*l - 1/2*l^2"));
    t.add("lemma-g-bneg2_3-iv", point(&b, rat(5, 3), rat(-2, 3)), Sector::G, 1, g("d^3 + 3/2*d^2*l - 3/2*d*l^2 - l^3"));

    let [b0, b1, b2] = generic_b_samples();
    t.add("lemma-g-generic-i", w_line(&b0, b0.clone()), Sector::G, 1, g("1"));
    let s1 = &b1 + int(1);
    t.add("lemma-g-generic-ii", w_line(&b1, s1), Sector::G, 1, vec![fg_poly("g", MultiPoly::zero(), g_linear(&b1))]);
    let dbar = -(&b2 + int(1));
    t.add("lemma-g-generic-iii", point(&b2, int(1), dbar), Sector::G, 1, vec![fg_poly("g", MultiPoly::zero(), g_quadratic(&b2))]);
}

/// All cases of one table, in declaration order.
pub fn table(which: Table) -> Vec<ReplayCase> {
    let mut t = Builder { table: which, cases: Vec::new() };
    match which {
        Table::Theo1 => theo1(&mut t),
        Table::Theo2 => theo2(&mut t),
        Table::Theo3 => theo3(&mut t),
        Table::LemmaG => lemma_g(&mut t),
        Table::VirTh2 => vir_th2(&mut t),
        Table::VirTh3 => vir_th3(&mut t),
        Table::VirTh4 => vir_th4(&mut t),
    }
    t.cases
}

/// Every case of every table.
pub fn all_cases() -> Vec<ReplayCase> {
    Table::ALL.iter().flat_map(|&t| table(t)).collect()
}
