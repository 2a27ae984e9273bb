use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Rational};
use super::poly::{Monomial, MultiPoly, Var};

/// Dense univariate polynomial in the scan parameter `t`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Field> UniPoly<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn x() -> Self {
        Self::new(vec![C::zero(), C::one()])
    }

    /// `t - r`
    pub fn linear_root(r: &C) -> Self {
        Self::new(vec![-r.clone(), C::one()])
    }

    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inverse().expect("nonzero lead")),
        }
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * &C::from_int(i as i64)).collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().unwrap().inverse().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![C::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero only if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`, monic.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).unwrap().monic()
    }

    pub fn to_multi(&self) -> MultiPoly<C> {
        MultiPoly::from_terms(
            self.coeffs.iter().enumerate().map(|(i, c)| (Monomial([0, 0, 0, i as u32]), c.clone())),
        )
    }

    /// Reads a polynomial that mentions only `t`.
    pub fn from_multi(p: &MultiPoly<C>) -> Option<Self> {
        let deg = p.degree_in(Var::T) as usize;
        let mut coeffs = vec![C::zero(); deg + 1];
        for (m, c) in p.terms() {
            if m.exp(Var::D) + m.exp(Var::L) + m.exp(Var::U) > 0 {
                return None;
            }
            coeffs[m.exp(Var::T) as usize] = c.clone();
        }
        Some(Self::new(coeffs))
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<Rational> {
    /// `(c, q)` with `self = c * q`, `q` having coprime integer coefficients
    /// and positive leading coefficient.
    pub fn primitive(&self) -> (Rational, UniPoly<Rational>) {
        if self.is_zero() {
            return (Rational::zero(), Self::zero());
        }
        let den_lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.lead().unwrap().is_negative() {
            g = -g;
        }
        let prim = Self::new(ints.iter().map(|c| Rational::from_integer(c / &g)).collect());
        (Rational::new(g, den_lcm), prim)
    }
}

impl<C: Field> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi())
    }
}

impl<'a, C: Field> Add<&'a UniPoly<C>> for &'a UniPoly<C> {
    type Output = UniPoly<C>;

    fn add(self, rhs: &'a UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a, C: Field> Sub<&'a UniPoly<C>> for &'a UniPoly<C> {
    type Output = UniPoly<C>;

    fn sub(self, rhs: &'a UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a, C: Field> Mul<&'a UniPoly<C>> for &'a UniPoly<C> {
    type Output = UniPoly<C>;

    fn mul(self, rhs: &'a UniPoly<C>) -> UniPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        UniPoly::new(out)
    }
}

impl<C: Field> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn neg(self) -> UniPoly<C> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
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
    fn division_and_gcd() {
        // (t-1)(t+2) / (t-1)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        assert_eq!(a.exact_div(&p(&[-1, 1])).unwrap(), p(&[2, 1]));
        assert!(a.exact_div(&p(&[3, 1])).is_none());
        let b = &p(&[-1, 1]) * &p(&[5, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn square_free_part() {
        let a = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[0, 2]);
        assert_eq!(a.square_free(), &p(&[-1, 1]) * &p(&[0, 1]));
    }

    #[test]
    fn primitive_form() {
        let a = UniPoly::new(vec![rat(15, 2), int(-7), int(1)]);
        let (c, q) = a.primitive();
        assert_eq!(q, p(&[15, -14, 2]));
        assert_eq!(c, rat(1, 2));
        let neg = p(&[-3, -6]);
        let (c, q) = neg.primitive();
        assert_eq!((c, q), (int(-3), p(&[1, 2])));
    }

    #[test]
    fn multi_round_trip() {
        let a = p(&[3, 0, -2]);
        assert_eq!(UniPoly::from_multi(&a.to_multi()).unwrap(), a);
    }
}
