use num_traits::Zero;

use crate::arith::{Field, Monomial, MultiPoly, QuadExt, RatFunc, Rational, SpecialFactorization, UniPoly, Var};
use crate::cocycle::CocycleWitness;

use super::problem::ScanProblem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Dims {
    pub cocycle: usize,
    pub coboundary: usize,
    pub ext: usize,
}

/// A value of `t` where the ext dimension differs from the generic one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialValue {
    pub t: QuadExt,
    /// Monic linear or primitive quadratic polynomial with root `t`.
    pub minimal_poly: UniPoly<Rational>,
    pub delta: QuadExt,
    pub dbar: Option<QuadExt>,
    pub dims: Dims,
    /// Some weight vanishes here.
    pub degenerate: bool,
    pub witnesses: Vec<CocycleWitness<QuadExt>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub problem: ScanProblem,
    pub unknowns: usize,
    /// Rank of the cocycle system over Q(t).
    pub generic_rank: usize,
    pub generic: Dims,
    /// Generic representatives with denominators cleared; coefficients are
    /// polynomials in `t`.
    pub generic_witnesses: Vec<CocycleWitness<Rational>>,
    /// Primitive square-free polynomial whose roots contain every value of
    /// `t` where a rank involved in the dimension count drops.
    pub certificate: UniPoly<Rational>,
    pub factorization: SpecialFactorization,
    pub specials: Vec<SpecialValue>,
    /// Irreducible pieces of the certificate of degree three or more whose
    /// roots were not examined.
    pub unresolved: Vec<UniPoly<Rational>>,
}

impl ScanReport {
    pub fn special_at(&self, t: &QuadExt) -> Option<&SpecialValue> {
        self.specials.iter().find(|s| &s.t == t)
    }
}

/// Multiplies a witness over Q(t) by the lcm of its denominators and
/// rewrites it with `t` as a polynomial variable.
pub fn clear_denominators(w: &CocycleWitness<RatFunc>) -> CocycleWitness<Rational> {
    let parts: Vec<&MultiPoly<RatFunc>> = [Some(&w.f), Some(&w.g), w.h.as_ref()].into_iter().flatten().collect();
    let mut lcm = UniPoly::<Rational>::one();
    for p in &parts {
        for (_, c) in p.terms() {
            let g = lcm.gcd(c.den());
            lcm = (&lcm * c.den()).exact_div(&g).expect("gcd divides");
        }
    }
    let convert = |p: &MultiPoly<RatFunc>| {
        let mut out = MultiPoly::zero();
        for (m, c) in p.terms() {
            let scaled = (&lcm * c.num()).exact_div(c.den()).expect("lcm of denominators");
            for (k, x) in scaled.coeffs().iter().enumerate() {
                if !x.is_zero() {
                    let mut e = m.0;
                    e[Var::T.index()] = k as u32;
                    let mono = Monomial(e);
                    out = &out + &MultiPoly::term(x.clone(), mono);
                }
            }
        }
        out
    };
    CocycleWitness { f: convert(&w.f), g: convert(&w.g), h: w.h.as_ref().map(convert) }
}

/// Evaluates a t-polynomial witness at a value of `t`.
pub fn specialize_witness<F: Field>(w: &CocycleWitness<Rational>, t: &F) -> CocycleWitness<F> {
    let lift = |p: &MultiPoly<Rational>| p.map_coeffs(F::from_rational).substitute(Var::T, &MultiPoly::constant(t.clone()));
    CocycleWitness { f: lift(&w.f), g: lift(&w.g), h: w.h.as_ref().map(lift) }
}
