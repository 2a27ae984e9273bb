//! Brute-force extension dimensions, sharing nothing with the engine but the
//! coefficient fields.
//!
//! Unknown polynomials are enumerated monomial by monomial. Every module
//! identity of the extension is evaluated at the points of a lattice simplex
//! large enough to determine a polynomial of the relevant degree, giving one
//! linear equation per point. Coboundaries come from explicit changes of
//! basis on dense polynomials.

use std::collections::BTreeMap;

use wbext::arith::Field;
use wbext::cocycle::{Algebra, ExtProblem, Sector, Shape};

/// Dense polynomial in (∂, λ).
#[derive(Clone, Debug, PartialEq)]
pub struct Dense<C> {
    pub terms: BTreeMap<(u32, u32), C>,
}

impl<C: Field> Dense<C> {
    pub fn zero() -> Self {
        Dense { terms: BTreeMap::new() }
    }

    pub fn from_terms(terms: &[(u32, u32, C)]) -> Self {
        let mut p = Dense::zero();
        for (i, j, c) in terms {
            p.add_term(*i, *j, c.clone());
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: C) {
        let e = self.terms.entry((i, j)).or_insert_with(C::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (&(i, j), c) in &o.terms {
            p.add_term(i, j, c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        Dense { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Dense::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &o.terms {
                p.add_term(i + k, j + l, a.clone() * b);
            }
        }
        p
    }

    /// p(∂ + λ, λ) by binomial expansion.
    pub fn shift(&self) -> Self {
        let mut p = Dense::zero();
        for (&(i, j), c) in &self.terms {
            let mut binom = C::one();
            for k in 0..=i {
                p.add_term(i - k, j + k, c.clone() * &binom);
                binom = binom * C::from_int((i - k) as i64) * C::from_int(k as i64 + 1).inverse().unwrap();
            }
        }
        p
    }

    pub fn eval(&self, x: &C, y: &C) -> C {
        self.terms.iter().fold(C::zero(), |acc, (&(i, j), c)| acc + c.clone() * pow(x, i) * pow(y, j))
    }
}

fn pow<C: Field>(x: &C, n: u32) -> C {
    (0..n).fold(C::one(), |acc, _| acc * x)
}

/// `∂ + a + kλ`.
fn affine<C: Field>(a: &C, k: &C) -> Dense<C> {
    Dense::from_terms(&[(1, 0, C::one()), (0, 0, a.clone()), (0, 1, k.clone())])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Func {
    F,
    G,
    H,
}

/// Coefficient slots of the unknown polynomials.
struct Unknowns {
    slots: Vec<(Func, u32, u32)>,
    /// Largest exponent in any slot.
    top: u32,
}

impl Unknowns {
    fn index(&self, func: Func, i: u32, j: u32) -> Option<usize> {
        self.slots.iter().position(|s| *s == (func, i, j))
    }

    fn of(&self, func: Func) -> impl Iterator<Item = (usize, u32, u32)> + '_ {
        self.slots.iter().enumerate().filter(move |(_, s)| s.0 == func).map(|(k, s)| (k, s.1, s.2))
    }
}

/// An action entry: a known polynomial or one of the unknowns.
#[derive(Clone)]
enum Entry<C> {
    Known(Dense<C>),
    Unknown(Func),
}

/// Constant term at index 0, then one coefficient per unknown.
type Lin<C> = Vec<C>;

fn lin_const<C: Field>(n: usize, c: C) -> Lin<C> {
    let mut v = vec![C::zero(); n + 1];
    v[0] = c;
    v
}

fn lin_add<C: Field>(a: &mut Lin<C>, b: &Lin<C>, sign: &C) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.clone() + sign.clone() * y;
    }
}

fn lin_mul<C: Field>(a: &Lin<C>, b: &Lin<C>) -> Lin<C> {
    let const_only = |v: &Lin<C>| v[1..].iter().all(|x| x.is_zero());
    let (k, v) = if const_only(a) {
        (a[0].clone(), b)
    } else {
        assert!(const_only(b), "identity is not linear in the unknowns");
        (b[0].clone(), a)
    };
    v.iter().map(|x| k.clone() * x).collect()
}

#[derive(Clone)]
enum Kind<C> {
    Free,
    /// `∂w = γw + tail(∂)·basis[to]`.
    Torsion { gamma: C, tail: Option<(usize, Entry<C>)> },
}

struct Model<C> {
    kinds: Vec<Kind<C>>,
    /// `action[g][target][source]`.
    action: Vec<Vec<Vec<Option<Entry<C>>>>>,
}

struct Ctx<'a, C> {
    unknowns: &'a Unknowns,
    n: usize,
    field: std::marker::PhantomData<C>,
}

impl<C: Field> Ctx<'_, C> {
    fn eval(&self, e: &Entry<C>, x: &C, y: &C) -> Lin<C> {
        match e {
            Entry::Known(p) => lin_const(self.n, p.eval(x, y)),
            Entry::Unknown(func) => {
                let powers = |z: &C| {
                    let mut out = vec![C::one()];
                    for _ in 0..self.unknowns.top {
                        let next = out.last().unwrap().clone() * z;
                        out.push(next);
                    }
                    out
                };
                let (xs, ys) = (powers(x), powers(y));
                let mut v = vec![C::zero(); self.n + 1];
                for (k, i, j) in self.unknowns.of(*func) {
                    v[k + 1] = xs[i as usize].clone() * &ys[j as usize];
                }
                v
            }
        }
    }

    fn entry(&self, m: &Model<C>, g: usize, t: usize, s: usize, x: &C, y: &C) -> Option<Lin<C>> {
        m.action[g][t][s].as_ref().map(|e| self.eval(e, x, y))
    }
}

/// Bracket table: `coeff[a][b](∂, λ)` with `[a_λ b] = coeff·c` for the
/// single generator `c = target[a][b]`.
struct Brackets<C> {
    gens: usize,
    table: Vec<Vec<Option<(usize, Dense<C>)>>>,
}

fn brackets<C: Field>(alg: &Algebra) -> Brackets<C> {
    let ll = Dense::from_terms(&[(1, 0, C::one()), (0, 1, C::from_int(2))]);
    match alg {
        Algebra::Virasoro => Brackets { gens: 1, table: vec![vec![Some((0, ll))]] },
        Algebra::W(b) => {
            let b = C::from_rational(b);
            let lh = Dense::from_terms(&[(1, 0, C::one()), (0, 1, C::one() - b)]);
            // [H_λ L] = -[L_{-λ-∂} H]
            let mut hl = Dense::zero();
            for (&(i, j), c) in &lh.terms {
                let sub = (0..j).fold(Dense::from_terms(&[(0, 0, C::one())]), |acc, _| {
                    acc.mul(&Dense::from_terms(&[(1, 0, -C::one()), (0, 1, -C::one())]))
                });
                hl = hl.add(&sub.mul(&Dense::from_terms(&[(i, 0, -c.clone())])));
            }
            Brackets { gens: 2, table: vec![vec![Some((0, ll)), Some((1, lh))], vec![Some((1, hl)), None]] }
        }
    }
}

/// Every monomial identity of `m`, as linear rows over the unknowns.
fn identity_rows<C: Field>(m: &Model<C>, br: &Brackets<C>, ctx: &Ctx<C>, degree: u32) -> Vec<Lin<C>> {
    let dim = m.kinds.len();
    let gamma_of = |t: usize| match &m.kinds[t] {
        Kind::Torsion { gamma, tail } => {
            assert!(tail.is_none() || (0..br.gens).all(|g| (0..dim).all(|s| m.action[g][t][s].is_none())));
            Some(gamma.clone())
        }
        Kind::Free => None,
    };
    let mut rows = Vec::new();
    let int = |k: u32| C::from_int(k as i64);
    for a in 0..br.gens {
        for b in 0..br.gens {
            for w in 0..dim {
                for t in 0..dim {
                    let tg = gamma_of(t);
                    for (px, py, pz) in simplex3(degree) {
                        let x = tg.clone().unwrap_or_else(|| int(px));
                        if tg.is_some() && px > 0 {
                            continue;
                        }
                        let (y, z) = (int(py), int(pz));
                        let mut row = lin_const(ctx.n, C::zero());
                        for u in 0..dim {
                            // a_λ (b_μ w): the ∂ inside b's coefficient becomes ∂ + λ
                            if m.action[b][u][w].is_some() && m.action[a][t][u].is_some() {
                                let inner_x = gamma_of(u).unwrap_or_else(|| x.clone() + &y);
                                let inner = ctx.entry(m, b, u, w, &inner_x, &z).unwrap();
                                let term = lin_mul(&inner, &ctx.entry(m, a, t, u, &x, &y).unwrap());
                                lin_add(&mut row, &term, &C::one());
                            }
                            if m.action[a][u][w].is_some() && m.action[b][t][u].is_some() {
                                let inner_x = gamma_of(u).unwrap_or_else(|| x.clone() + &z);
                                let inner = ctx.entry(m, a, u, w, &inner_x, &y).unwrap();
                                let term = lin_mul(&inner, &ctx.entry(m, b, t, u, &x, &z).unwrap());
                                lin_add(&mut row, &term, &-C::one());
                            }
                        }
                        if let Some((c, coeff)) = &br.table[a][b] {
                            if let Some(term) = ctx.entry(m, *c, t, w, &x, &(y.clone() + &z)) {
                                let k = coeff.eval(&(-(y.clone() + &z)), &y);
                                lin_add(&mut row, &term, &-k);
                            }
                        }
                        rows.push(row);
                    }
                }
            }
        }
    }
    // a_λ(∂w) = (∂ + λ) a_λ w on torsion vectors
    for w in 0..dim {
        let Kind::Torsion { gamma, tail } = &m.kinds[w] else { continue };
        for a in 0..br.gens {
            for t in 0..dim {
                let tg = gamma_of(t);
                for (px, py) in simplex2(degree) {
                    if tg.is_some() && px > 0 {
                        continue;
                    }
                    let x = tg.clone().unwrap_or_else(|| int(px));
                    let y = int(py);
                    let zero = || lin_const(ctx.n, C::zero());
                    let here = ctx.entry(m, a, t, w, &x, &y).unwrap_or_else(zero);
                    let mut row = lin_mul(&lin_const(ctx.n, gamma.clone() - x.clone() - y.clone()), &here);
                    if let Some((v, e)) = tail {
                        if let Some(target) = ctx.entry(m, a, t, *v, &x, &y) {
                            let shifted = ctx.eval(e, &(x.clone() + &y), &C::zero());
                            lin_add(&mut row, &lin_mul(&shifted, &target), &C::one());
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows
}

fn simplex3(d: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for x in 0..=d {
        for y in 0..=d - x {
            for z in 0..=d - x - y {
                out.push((x, y, z));
            }
        }
    }
    out
}

fn simplex2(d: u32) -> Vec<(u32, u32)> {
    (0..=d).flat_map(|x| (0..=d - x).map(move |y| (x, y))).collect()
}

/// Rank by Gaussian elimination, one row at a time against the pivots
/// found so far.
pub fn rank<C: Field>(rows: Vec<Vec<C>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots: Vec<(usize, Vec<C>)> = Vec::new();
    for mut row in rows {
        for (c, p) in &pivots {
            if !row[*c].is_zero() {
                let f = row[*c].clone();
                for (x, y) in row.iter_mut().zip(p) {
                    if !y.is_zero() {
                        *x = x.clone() - f.clone() * y;
                    }
                }
            }
        }
        if let Some(c) = row.iter().position(|x| !x.is_zero()) {
            let inv = row[c].inverse().unwrap();
            pivots.push((c, row.iter().map(|x| x.clone() * &inv).collect()));
            if pivots.len() == cols {
                break;
            }
        }
    }
    pivots.len()
}

fn unknowns_for<C: Field>(p: &ExtProblem<C>) -> Unknowns {
    let caps = p.caps;
    let want_f = p.sector != Sector::G;
    let want_g = p.sector != Sector::F && matches!(p.algebra, Algebra::W(_));
    let mut slots = Vec::new();
    let both = |cap: u32| (0..=cap).flat_map(move |i| (0..=cap - i).map(move |j| (i, j)));
    match &p.shape {
        Shape::Type1 { .. } => {
            if want_f {
                slots.extend((0..=caps.f).map(|j| (Func::F, 0, j)));
            }
            if want_g {
                slots.extend((0..=caps.g).map(|j| (Func::G, 0, j)));
            }
        }
        Shape::Type2 { .. } => {
            if want_f {
                slots.extend(both(caps.f).map(|(i, j)| (Func::F, i, j)));
                slots.extend((0..=caps.h).map(|i| (Func::H, i, 0)));
            }
            if want_g {
                slots.extend(both(caps.g).map(|(i, j)| (Func::G, i, j)));
            }
        }
        Shape::Type3 { .. } => {
            if want_f {
                slots.extend(both(caps.f).map(|(i, j)| (Func::F, i, j)));
            }
            if want_g {
                slots.extend(both(caps.g).map(|(i, j)| (Func::G, i, j)));
            }
        }
    }
    let top = slots.iter().map(|s| s.1.max(s.2)).max().unwrap_or(0);
    Unknowns { slots, top }
}

fn model<C: Field>(p: &ExtProblem<C>, u: &Unknowns) -> Model<C> {
    let gens = if matches!(p.algebra, Algebra::W(_)) { 2 } else { 1 };
    let has = |f: Func| u.slots.iter().any(|s| s.0 == f);
    let unknown = |f: Func| if has(f) { Some(Entry::Unknown(f)) } else { None };
    let known = |d: Dense<C>| Some(Entry::Known(d));
    let empty = |dim: usize| vec![vec![vec![None; dim]; dim]; gens];
    match &p.shape {
        Shape::Type1 { alpha, gamma, delta } => {
            // basis: v (free), c (torsion)
            let mut a = empty(2);
            a[0][0][0] = known(affine(alpha, delta));
            a[0][1][0] = unknown(Func::F);
            if gens == 2 {
                a[1][1][0] = unknown(Func::G);
            }
            Model { kinds: vec![Kind::Free, Kind::Torsion { gamma: gamma.clone(), tail: None }], action: a }
        }
        Shape::Type2 { alpha, gamma, delta } => {
            // basis: v (free), c (torsion onto v)
            let mut a = empty(2);
            a[0][0][0] = known(affine(alpha, delta));
            a[0][0][1] = unknown(Func::F);
            if gens == 2 {
                a[1][0][1] = unknown(Func::G);
            }
            let tail = unknown(Func::H).map(|e| (0, e));
            Model { kinds: vec![Kind::Free, Kind::Torsion { gamma: gamma.clone(), tail }], action: a }
        }
        Shape::Type3 { alpha, abar, delta, dbar } => {
            // basis: vbar, v
            let mut a = empty(2);
            a[0][0][0] = known(affine(abar, dbar));
            a[0][1][1] = known(affine(alpha, delta));
            a[0][0][1] = unknown(Func::F);
            if gens == 2 {
                a[1][0][1] = unknown(Func::G);
            }
            Model { kinds: vec![Kind::Free, Kind::Free], action: a }
        }
    }
}

/// Coboundary of each basis change `φ = ∂^k`, `k <= top`, as (F/G/H, ∂, λ)
/// coefficient maps.
fn coboundaries<C: Field>(p: &ExtProblem<C>, top: u32) -> Vec<BTreeMap<(Func, u32, u32), C>> {
    let mut out = Vec::new();
    let flat = |f: Func, d: &Dense<C>, map: &mut BTreeMap<(Func, u32, u32), C>| {
        for (&(i, j), c) in &d.terms {
            map.insert((f, i, j), c.clone());
        }
    };
    match &p.shape {
        Shape::Type1 { alpha, gamma, delta } => {
            let mut m = BTreeMap::new();
            flat(Func::F, &Dense::from_terms(&[(0, 0, alpha.clone() + gamma), (0, 1, delta.clone())]), &mut m);
            out.push(m);
        }
        Shape::Type2 { alpha, gamma, delta } => {
            for k in 0..=top {
                let phi = Dense::from_terms(&[(k, 0, C::one())]);
                let mut m = BTreeMap::new();
                flat(Func::F, &affine(alpha, delta).mul(&phi.shift()), &mut m);
                flat(Func::H, &Dense::from_terms(&[(1, 0, C::one()), (0, 0, -gamma.clone())]).mul(&phi), &mut m);
                out.push(m);
            }
        }
        Shape::Type3 { alpha, abar, delta, dbar } => {
            for k in 0..=top {
                let phi = Dense::from_terms(&[(k, 0, C::one())]);
                let f = affine(alpha, delta).mul(&phi).add(&affine(abar, dbar).mul(&phi.shift()).neg());
                let mut m = BTreeMap::new();
                flat(Func::F, &f, &mut m);
                out.push(m);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleDims {
    pub cocycle: usize,
    pub coboundary: usize,
    pub ext: usize,
}

/// Dimensions of cocycles, coboundaries inside the caps, and their quotient.
pub fn oracle_dims<C: Field>(p: &ExtProblem<C>) -> OracleDims {
    let u = unknowns_for(p);
    let n = u.slots.len();
    let m = model(p, &u);
    let br = brackets::<C>(&p.algebra);
    let caps = p.caps;
    // identities have degree at most one above the unknowns
    let degree = caps.f.max(caps.g).max(caps.h) + 2;
    let ctx = Ctx { unknowns: &u, n, field: std::marker::PhantomData };
    let rows = identity_rows(&m, &br, &ctx, degree);
    for r in &rows {
        assert!(r[0].is_zero(), "base modules violate an identity");
    }
    let system: Vec<Vec<C>> =
        rows.into_iter().map(|r| r[1..].to_vec()).filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let cocycle = n - if n == 0 { 0 } else { rank(system) };

    // image of φ ↦ δφ; the part landing inside the caps has dimension
    // dim ker(outside part) - dim ker(whole map)
    let cobs = coboundaries(p, caps.f.max(caps.h) + 2);
    let mut outside_keys: Vec<(Func, u32, u32)> = Vec::new();
    for c in &cobs {
        for k in c.keys() {
            if u.index(k.0, k.1, k.2).is_none() && !outside_keys.contains(k) {
                outside_keys.push(*k);
            }
        }
    }
    let k = cobs.len();
    let column = |key: (Func, u32, u32)| -> Vec<C> { cobs.iter().map(|c| c.get(&key).cloned().unwrap_or_else(C::zero)).collect() };
    let outside: Vec<Vec<C>> = outside_keys.iter().map(|&key| column(key)).collect();
    let mut whole: Vec<Vec<C>> = u.slots.iter().map(|&key| column(key)).collect();
    whole.extend(outside.iter().cloned());
    let kernel = |rows: Vec<Vec<C>>| k - if rows.is_empty() { 0 } else { rank(rows) };
    let coboundary = kernel(outside) - kernel(whole);
    OracleDims { cocycle, coboundary, ext: cocycle - coboundary }
}
