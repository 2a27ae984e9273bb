use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::Field;
use super::ArithError;

/// The fixed variable universe: the derivation, the two bracket variables and
/// the scan parameter.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// ∂
    D,
    /// λ
    L,
    /// μ
    U,
    /// scan parameter
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::D, Var::L, Var::U, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::D => 'd',
            Var::L => 'l',
            Var::U => 'u',
            Var::T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.symbol() == c)
    }
}

/// Exponent vector over (∂, λ, μ, t).
///
/// Ordered graded-lexicographically with ∂ > λ > μ > t.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn dl(d: u32, l: u32) -> Self {
        Monomial([d, l, 0, 0])
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    /// Keeps only the exponents of `vars`.
    pub fn restrict(&self, vars: &[Var]) -> Monomial {
        let mut e = [0; 4];
        for v in vars {
            e[v.index()] = self.0[v.index()];
        }
        Monomial(e)
    }

    /// Drops the exponents of `vars`.
    pub fn without(&self, vars: &[Var]) -> Monomial {
        let mut e = self.0;
        for v in vars {
            e[v.index()] = 0;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.symbol())?;
            } else {
                write!(f, "{}^{}", v.symbol(), e)?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over (∂, λ, μ, t) with exact coefficients.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Field> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Field> MultiPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::term(C::one(), Monomial::var(v))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn as_constant(&self) -> Option<C> {
        self.is_constant().then(|| self.coeff(&Monomial::ONE))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    fn coeffs_compatible(&self, other: &Self) -> bool {
        let probe = |p: &Self| p.terms.values().find(|c| c.as_rational().is_none()).cloned();
        match (probe(self), probe(other)) {
            (Some(a), Some(b)) => a.compatible(&b),
            _ => true,
        }
    }

    /// Sum, failing instead of panicking when the coefficient fields differ.
    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        if !self.coeffs_compatible(other) {
            return Err(ArithError::IncompatibleCoefficients);
        }
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        if !self.coeffs_compatible(other) {
            return Err(ArithError::IncompatibleCoefficients);
        }
        Ok(self * other)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (*m, a.clone() * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `v` by `replacement` and re-expands.
    pub fn substitute(&self, v: Var, replacement: &MultiPoly<C>) -> Self {
        if !self.contains_var(v) {
            return self.clone();
        }
        // group by the power of v
        let mut by_power: BTreeMap<u32, MultiPoly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.exp(v);
            by_power.entry(k).or_insert_with(Self::zero).add_term(m.without(&[v]), c.clone());
        }
        let mut out = Self::zero();
        let mut power = Self::one();
        let mut current = 0;
        for (k, part) in by_power {
            while current < k {
                power = &power * replacement;
                current += 1;
            }
            out = &out + &(&part * &power);
        }
        out
    }

    /// `p(v + by)`. `by` must not mention `v`.
    pub fn shift(&self, v: Var, by: &MultiPoly<C>) -> Result<Self, ArithError> {
        if by.contains_var(v) {
            return Err(ArithError::ShiftMentionsTarget(v.symbol()));
        }
        Ok(self.substitute(v, &(&Self::var(v) + by)))
    }

    /// Exchanges two variables.
    pub fn swap(&self, a: Var, b: Var) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = m.0;
            e.swap(a.index(), b.index());
            (Monomial(e), c.clone())
        }))
    }

    /// Coefficient extraction with respect to `vars`: pairs of a monomial in
    /// `vars` and its coefficient, a polynomial in the remaining variables.
    /// Returned in descending order of the monomial.
    pub fn coeffs(&self, vars: &[Var]) -> Vec<(Monomial, MultiPoly<C>)> {
        let mut groups: BTreeMap<Monomial, MultiPoly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups.entry(m.restrict(vars)).or_insert_with(Self::zero).add_term(m.without(vars), c.clone());
        }
        groups.into_iter().rev().collect()
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, C> {
        self.terms
    }
}

impl<C: Field> Zero for MultiPoly<C> {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Field> One for MultiPoly<C> {
    fn one() -> Self {
        MultiPoly::one()
    }
}

impl<'a, C: Field> Add<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn add(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        let (mut out, other) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a, C: Field> Sub<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn sub(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a, C: Field> Mul<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn mul(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb);
            }
        }
        out
    }
}

impl<C: Field> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn neg(self) -> MultiPoly<C> {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl<C: Field> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<C: Field> $tr for MultiPoly<C> {
            type Output = MultiPoly<C>;

            fn $m(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$m(&rhs)
            }
        }

        impl<'a, C: Field> $tr<&'a MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;

            fn $m(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
                (&self).$m(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<C: Field> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::render(self))
    }
}

/// Shorthand constructors used throughout the engine.
pub mod build {
    use super::*;

    pub fn d<C: Field>() -> MultiPoly<C> {
        MultiPoly::var(Var::D)
    }

    pub fn l<C: Field>() -> MultiPoly<C> {
        MultiPoly::var(Var::L)
    }

    pub fn u<C: Field>() -> MultiPoly<C> {
        MultiPoly::var(Var::U)
    }

    pub fn t<C: Field>() -> MultiPoly<C> {
        MultiPoly::var(Var::T)
    }

    pub fn c<C: Field>(x: C) -> MultiPoly<C> {
        MultiPoly::constant(x)
    }

    pub fn n<C: Field>(x: i64) -> MultiPoly<C> {
        MultiPoly::constant(C::from_int(x))
    }
}
