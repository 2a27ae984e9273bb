//! Rational roots and irreducible quadratic factors of univariate polynomials.
//!
//! Real roots of the square-free part are isolated exactly with a Sturm
//! sequence and refined by bisection. A root `a/b` of a primitive integer
//! polynomial with leading coefficient `L` has `b | L`, and two distinct
//! rationals with denominators at most `L` are at least `1/L^2` apart, so
//! once an isolating interval is narrower than that it holds at most one
//! candidate: the rational of least denominator inside it. Quadratic factors
//! are found the same way from the sum and product of pairs of real roots;
//! a residual of degree two left after that is itself an irreducible
//! quadratic (complex conjugate roots).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::Rational;
use super::uni::UniPoly;
use super::ArithError;

/// `p = content * Π (t - r)^m * Π q^m * residual`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialFactorization {
    pub content: Rational,
    /// Rational roots with multiplicity, ascending.
    pub rational_roots: Vec<(Rational, u32)>,
    /// Irreducible quadratics in primitive integer form (coprime integer
    /// coefficients, positive leading coefficient) with multiplicity.
    pub quadratics: Vec<(UniPoly<Rational>, u32)>,
    /// Primitive remainder with no rational root or quadratic factor found;
    /// the constant 1 when fully resolved.
    pub residual: UniPoly<Rational>,
}

impl SpecialFactorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> UniPoly<Rational> {
        let mut acc = UniPoly::constant(self.content.clone());
        for (r, m) in &self.rational_roots {
            for _ in 0..*m {
                acc = &acc * &UniPoly::linear_root(r);
            }
        }
        for (q, m) in &self.quadratics {
            for _ in 0..*m {
                acc = &acc * q;
            }
        }
        &acc * &self.residual
    }

    pub fn is_resolved(&self) -> bool {
        self.residual.degree() == Some(0)
    }
}

/// Factors out rational roots and irreducible quadratics of `p`.
pub fn uni_factor_special(p: &UniPoly<Rational>) -> Result<SpecialFactorization, ArithError> {
    if p.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let (content, prim) = p.primitive();
    let mut out = SpecialFactorization {
        content,
        rational_roots: Vec::new(),
        quadratics: Vec::new(),
        residual: UniPoly::one(),
    };
    if prim.degree() == Some(0) {
        return Ok(out);
    }
    let sf = prim.square_free().primitive().1;
    let bound = lead_bound(&sf);
    let roots = isolate_real_roots(&sf);

    let mut irrational: Vec<Interval> = Vec::new();
    for iv in roots {
        match rational_in(&sf, iv, &bound) {
            Ok(r) => out.rational_roots.push((r, 0)),
            Err(iv) => irrational.push(iv),
        }
    }

    let mut quads: Vec<UniPoly<Rational>> = Vec::new();
    let mut remaining = sf.clone();
    for (r, _) in &out.rational_roots {
        remaining = remaining.exact_div(&UniPoly::linear_root(r)).expect("root divides");
    }
    let mut used = vec![false; irrational.len()];
    for i in 0..irrational.len() {
        if used[i] {
            continue;
        }
        for j in i + 1..irrational.len() {
            if used[j] {
                continue;
            }
            if let Some(q) = quadratic_from_pair(&sf, &mut irrational, i, j, &bound) {
                if let Some(rest) = remaining.exact_div(&q) {
                    remaining = rest;
                    quads.push(q);
                    used[i] = true;
                    used[j] = true;
                    break;
                }
            }
        }
    }
    if remaining.degree() == Some(2) {
        quads.push(remaining.primitive().1);
    }

    // multiplicities against the primitive input
    let mut rest = prim;
    for (r, m) in out.rational_roots.iter_mut() {
        let lin = UniPoly::linear_root(r);
        while let Some(q) = rest.exact_div(&lin) {
            rest = q;
            *m += 1;
        }
    }
    for q in quads {
        let mut m = 0;
        while let Some(next) = rest.exact_div(&q) {
            rest = next;
            m += 1;
        }
        out.quadratics.push((q, m));
    }
    let (c, residual) = rest.primitive();
    out.content *= c;
    out.residual = residual;
    out.rational_roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Factorization of `p` where `p` divides the product of `parts`. Every
/// rational root and irreducible quadratic factor of `p` divides some part,
/// so factoring the (typically much smaller) parts finds them all.
pub fn uni_factor_special_parts(
    p: &UniPoly<Rational>,
    parts: &[UniPoly<Rational>],
) -> Result<SpecialFactorization, ArithError> {
    if p.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let mut roots: Vec<Rational> = Vec::new();
    let mut quads: Vec<UniPoly<Rational>> = Vec::new();
    for part in parts {
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        let f = uni_factor_special(part)?;
        for (r, _) in f.rational_roots {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        for (q, _) in f.quadratics {
            if !quads.contains(&q) {
                quads.push(q);
            }
        }
    }
    let (content, mut rest) = p.primitive();
    let mut out = SpecialFactorization { content, rational_roots: Vec::new(), quadratics: Vec::new(), residual: UniPoly::one() };
    for r in roots {
        let lin = UniPoly::linear_root(&r);
        let mut m = 0;
        while let Some(q) = rest.exact_div(&lin) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            out.rational_roots.push((r, m));
        }
    }
    for q in quads {
        let mut m = 0;
        while let Some(next) = rest.exact_div(&q) {
            rest = next;
            m += 1;
        }
        if m > 0 {
            out.quadratics.push((q, m));
        }
    }
    let (c, residual) = rest.primitive();
    out.content *= c;
    out.residual = residual;
    out.rational_roots.sort_by(|a, b| a.0.cmp(&b.0));
    out.quadratics.sort_by(|a, b| a.0.coeffs().cmp(b.0.coeffs()));
    Ok(out)
}

/// Half-open interval `(lo, hi]` holding exactly one real root.
#[derive(Clone, Debug)]
struct Interval {
    lo: Rational,
    hi: Rational,
}

/// `p` divided by the absolute value of its content: integer coefficients,
/// same signs.
fn sign_primitive(p: &UniPoly<Rational>) -> UniPoly<Rational> {
    let (c, q) = p.primitive();
    if c.is_negative() {
        -&q
    } else {
        q
    }
}

/// Sturm sequence with each term scaled to a primitive integer polynomial;
/// positive scaling leaves every sign count unchanged.
fn sturm_sequence(p: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let mut seq = vec![sign_primitive(p), sign_primitive(&p.derivative())];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(sign_primitive(&-&r));
    }
    seq
}

fn sign_changes(seq: &[UniPoly<Rational>], x: &Rational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(l) = last {
            if l != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

fn cauchy_bound(p: &UniPoly<Rational>) -> Rational {
    let lead = p.lead().unwrap().abs();
    let m = p.coeffs().iter().rev().skip(1).map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// `1 / L^2` where `L` is the leading coefficient of the primitive form.
fn lead_bound(p: &UniPoly<Rational>) -> Rational {
    let l = p.lead().unwrap().abs();
    (l.clone() * l).recip()
}

fn isolate_real_roots(p: &UniPoly<Rational>) -> Vec<Interval> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = sturm_sequence(p);
    let b = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![Interval { lo: -b.clone(), hi: b }];
    while let Some(iv) = stack.pop() {
        let n = sign_changes(&seq, &iv.lo) - sign_changes(&seq, &iv.hi);
        match n {
            0 => {}
            1 => out.push(iv),
            _ => {
                let mid = (&iv.lo + &iv.hi) / Rational::from_integer(BigInt::from(2));
                stack.push(Interval { lo: mid.clone(), hi: iv.hi });
                stack.push(Interval { lo: iv.lo, hi: mid });
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

fn refine(p: &UniPoly<Rational>, iv: &mut Interval) {
    let mid = (&iv.lo + &iv.hi) / Rational::from_integer(BigInt::from(2));
    let vm = p.eval(&mid);
    if vm.is_zero() {
        iv.lo = mid.clone();
        iv.hi = mid;
        return;
    }
    let vh = p.eval(&iv.hi);
    if vh.is_zero() || vh.is_positive() != vm.is_positive() {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
}

/// Rational with the least denominator in `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    let c = lo.ceil();
    if &c <= hi {
        // prefer the integer of least magnitude
        if c.is_negative() {
            let f = hi.floor();
            return if f.is_negative() { f } else { Rational::zero() };
        }
        return c;
    }
    let fl = lo.floor();
    let a = (hi - &fl).recip();
    let b = (lo - &fl).recip();
    fl + simplest_between(&a, &b).recip()
}

fn rational_in(p: &UniPoly<Rational>, mut iv: Interval, bound: &Rational) -> Result<Rational, Interval> {
    if p.eval(&iv.hi).is_zero() {
        return Ok(iv.hi);
    }
    while &(&iv.hi - &iv.lo) >= bound {
        refine(p, &mut iv);
        if iv.lo == iv.hi {
            return Ok(iv.lo);
        }
    }
    let cand = simplest_between(&iv.lo, &iv.hi);
    if p.eval(&cand).is_zero() {
        Ok(cand)
    } else {
        Err(iv)
    }
}

fn quadratic_from_pair(
    p: &UniPoly<Rational>,
    ivs: &mut [Interval],
    i: usize,
    j: usize,
    bound: &Rational,
) -> Option<UniPoly<Rational>> {
    loop {
        let (a, b) = (&ivs[i], &ivs[j]);
        let sum_lo = &a.lo + &b.lo;
        let sum_hi = &a.hi + &b.hi;
        let prods = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let prod_lo = prods.iter().min().unwrap().clone();
        let prod_hi = prods.iter().max().unwrap().clone();
        if &(&sum_hi - &sum_lo) < bound && &(&prod_hi - &prod_lo) < bound {
            let s = simplest_between(&sum_lo, &sum_hi);
            let q = simplest_between(&prod_lo, &prod_hi);
            let cand = UniPoly::new(vec![q, -s, Rational::one()]);
            return p.exact_div(&cand).map(|_| cand.primitive().1);
        }
        let (x, y) = ivs.split_at_mut(j);
        refine(p, &mut x[i]);
        refine(p, &mut y[0]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{int, rat};

    fn p(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn six_line_quadratic_is_irreducible() {
        let f = uni_factor_special(&p(&[15, -14, 2])).unwrap();
        assert!(f.rational_roots.is_empty());
        assert_eq!(f.quadratics, vec![(p(&[15, -14, 2]), 1)]);
        assert!(f.is_resolved());
        assert_eq!(f.expand(), p(&[15, -14, 2]));
    }

    #[test]
    fn simple_roots() {
        let f = uni_factor_special(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(f.rational_roots, vec![(int(-1), 1), (int(1), 1)]);
        let g = uni_factor_special(&p(&[0, 1])).unwrap();
        assert_eq!(g.rational_roots, vec![(int(0), 1)]);
        assert!(uni_factor_special(&UniPoly::zero()).is_err());
    }

    #[test]
    fn mixed_factorization_with_multiplicity() {
        // 6 (t - 2/3)^2 (t + 5) (t^2 + 1) (2t^2 - 14t + 15) (t^3 - 2)
        let lin = UniPoly::linear_root(&rat(2, 3));
        let mut prod = UniPoly::constant(int(6));
        for f in [&lin, &lin, &p(&[5, 1]), &p(&[1, 0, 1]), &p(&[15, -14, 2]), &p(&[-2, 0, 0, 1])] {
            prod = &prod * f;
        }
        let f = uni_factor_special(&prod).unwrap();
        assert_eq!(f.rational_roots, vec![(int(-5), 1), (rat(2, 3), 2)]);
        assert_eq!(f.quadratics.len(), 1);
        assert_eq!(f.quadratics[0], (p(&[15, -14, 2]), 1));
        // t^2 + 1 is hidden behind the cubic residual: reported unresolved
        assert_eq!(f.residual.degree(), Some(5));
        assert_eq!(f.expand(), prod);
    }

    #[test]
    fn complex_quadratic_alone() {
        let f = uni_factor_special(&(&p(&[1, 0, 1]) * &p(&[-3, 1]))).unwrap();
        assert_eq!(f.rational_roots, vec![(int(3), 1)]);
        assert_eq!(f.quadratics, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn factoring_through_parts_agrees() {
        let parts = [p(&[15, -14, 2]), p(&[-1, 0, 1]), p(&[1, 1]), p(&[-2, 0, 0, 1])];
        let mut prod = UniPoly::one();
        for q in &parts {
            prod = &prod * q;
        }
        let square_free = prod.square_free().primitive().1;
        let f = uni_factor_special_parts(&square_free, &parts).unwrap();
        assert_eq!(f.rational_roots, vec![(int(-1), 1), (int(1), 1)]);
        assert_eq!(f.quadratics, vec![(p(&[15, -14, 2]), 1)]);
        assert_eq!(f.residual, p(&[-2, 0, 0, 1]));
        assert_eq!(f.expand(), square_free);
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-7, 3), &rat(-2, 1)), int(-2));
        assert_eq!(simplest_between(&rat(-1, 2), &rat(1, 2)), int(0));
        assert_eq!(simplest_between(&rat(-5, 7), &rat(-2, 3)), rat(-2, 3));
    }
}
