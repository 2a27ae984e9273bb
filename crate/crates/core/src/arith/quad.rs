use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::{render_rational, Field, Rational};
use super::ArithError;

/// Trial-division bound used when extracting square factors.
const TRIAL_BOUND: u64 = 1 << 20;

/// Writes `n = k^2 * d` with `d` square-free.
///
/// Primes up to `TRIAL_BOUND` are removed by trial division; a remaining
/// cofactor below `TRIAL_BOUND^3` is square-free unless it is a perfect
/// square. Larger cofactors are assumed square-free.
pub fn square_free_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero(), "square-free part of zero");
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut k = BigInt::one();
    let mut d = BigInt::one();
    let mut p: u64 = 2;
    while p <= TRIAL_BOUND {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            k *= bp.pow(e / 2);
            if e % 2 == 1 {
                d *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let r = m.sqrt();
        if &r * &r == m {
            k *= r;
        } else {
            d *= m;
        }
    }
    (k, sign * d)
}

fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Element `p + q*sqrt(d)` of the quadratic field Q(sqrt(d)).
///
/// Rational elements (`q = 0`) carry no radicand and combine with elements of
/// any quadratic field; two irrational elements must share the radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    p: Rational,
    q: Rational,
    d: Option<BigInt>,
}

impl QuadExt {
    /// `p + q*sqrt(d)`; `d` must be square-free and not a perfect square.
    pub fn new(p: Rational, q: Rational, d: BigInt) -> Result<Self, ArithError> {
        if d.is_zero() || is_perfect_square(&d) {
            return Err(ArithError::BadRadicand(d));
        }
        let (k, _) = square_free_decompose(&d);
        if !k.is_one() {
            return Err(ArithError::BadRadicand(d));
        }
        Ok(Self { p, q, d: Some(d) }.normalized())
    }

    pub fn rational(p: Rational) -> Self {
        Self { p, q: Rational::zero(), d: None }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: BigInt) -> Result<Self, ArithError> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        self.d.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.d.is_none()
    }

    pub fn conjugate(&self) -> Self {
        Self { p: self.p.clone(), q: -self.q.clone(), d: self.d.clone() }
    }

    /// `p^2 - d q^2`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        match &self.d {
            None => &self.p * &self.p,
            Some(d) => &self.p * &self.p - Rational::from_integer(d.clone()) * &self.q * &self.q,
        }
    }

    fn normalized(mut self) -> Self {
        if self.q.is_zero() {
            self.d = None;
        }
        self
    }

    fn common_radicand(&self, other: &Self) -> Result<Option<BigInt>, ArithError> {
        match (&self.d, &other.d) {
            (Some(a), Some(b)) if a != b => Err(ArithError::FieldMismatch(a.clone(), b.clone())),
            (Some(a), _) => Ok(Some(a.clone())),
            (None, b) => Ok(b.clone()),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_radicand(other)?;
        Ok(Self { p: &self.p + &other.p, q: &self.q + &other.q, d }.normalized())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_radicand(other)?;
        Ok(Self { p: &self.p - &other.p, q: &self.q - &other.q, d }.normalized())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        let d = self.common_radicand(other)?;
        let dr = d.clone().map(Rational::from_integer).unwrap_or_else(Rational::zero);
        let p = &self.p * &other.p + &self.q * &other.q * dr;
        let q = &self.p * &other.q + &self.q * &other.p;
        Ok(Self { p, q, d }.normalized())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Neg for QuadExt {
    type Output = Self;

    fn neg(self) -> Self {
        Self { p: -self.p, q: -self.q, d: self.d }
    }
}

macro_rules! quad_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;

            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$checked(&rhs).expect("mixed quadratic fields")
            }
        }

        impl<'a> $tr<&'a QuadExt> for QuadExt {
            type Output = QuadExt;

            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs).expect("mixed quadratic fields")
            }
        }
    };
}

quad_op!(Add, add, checked_add);
quad_op!(Sub, sub, checked_sub);
quad_op!(Mul, mul, checked_mul);

impl Field for QuadExt {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self { p: &self.p / &n, q: -(&self.q / &n), d: self.d.clone() }.normalized())
    }

    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }

    fn compatible(&self, other: &Self) -> bool {
        self.common_radicand(other).is_ok()
    }

    fn render(&self) -> String {
        let Some(d) = &self.d else {
            return render_rational(&self.p);
        };
        let mut s = String::from("(");
        if !self.p.is_zero() {
            s.push_str(&render_rational(&self.p));
            s.push(if self.q.is_negative() { '-' } else { '+' });
        } else if self.q.is_negative() {
            s.push('-');
        }
        let qa = self.q.abs();
        if !qa.is_one() {
            s.push_str(&render_rational(&qa));
            s.push('*');
        }
        s.push_str(&format!("sqrt({d}))"));
        s
    }

    fn has_minus_sign(&self) -> bool {
        self.d.is_none() && self.p.is_negative()
    }

    fn as_rational(&self) -> Option<Rational> {
        self.d.is_none().then(|| self.p.clone())
    }

    fn from_parts(p: Rational, sqrt_part: Option<(Rational, BigInt)>) -> Result<Self, ArithError> {
        match sqrt_part {
            None => Ok(Self::rational(p)),
            Some((q, d)) => {
                let (k, sf) = square_free_decompose(&d);
                if sf.is_one() {
                    // sqrt of a perfect square folds back into Q.
                    return Ok(Self::rational(p + q * Rational::from_integer(k)));
                }
                Self::new(p, q * Rational::from_integer(k), sf)
            }
        }
    }
}

/// Both roots of `a t^2 + b t + c` over Q(sqrt(disc)), `disc` reduced to its
/// square-free part. Returns `None` when the roots are rational.
pub fn quadratic_roots(a: &Rational, b: &Rational, c: &Rational) -> Option<(QuadExt, QuadExt)> {
    let disc = b * b - Rational::from_integer(BigInt::from(4)) * a * c;
    // disc = n/m  ->  sqrt(disc) = sqrt(n*m)/m
    let nm = disc.numer() * disc.denom();
    if nm.is_zero() {
        return None;
    }
    let (k, d) = square_free_decompose(&nm);
    if d.is_one() {
        return None;
    }
    let two_a = Rational::from_integer(BigInt::from(2)) * a;
    let p = -b / &two_a;
    let q = Rational::new(k, disc.denom().clone()) / &two_a;
    let r1 = QuadExt::new(p.clone(), q.clone(), d.clone()).ok()?;
    let r2 = QuadExt::new(p, -q, d).ok()?;
    Some((r1, r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{int, rat};

    fn q19(p: Rational, q: Rational) -> QuadExt {
        QuadExt::new(p, q, BigInt::from(19)).unwrap()
    }

    #[test]
    fn conjugate_product_is_norm() {
        let x = q19(rat(7, 2), rat(1, 2));
        let prod = x.clone() * x.conjugate();
        assert_eq!(prod.as_rational(), Some(x.norm()));
        assert_eq!(x.norm(), rat(49, 4) - rat(19, 4));
    }

    #[test]
    fn inverse_round_trips() {
        let x = q19(rat(-5, 2), rat(1, 2));
        let inv = x.inverse().unwrap();
        assert_eq!(x * inv, QuadExt::one());
    }

    #[test]
    fn rejects_non_square_free_and_squares() {
        assert!(QuadExt::new(int(0), int(1), BigInt::from(4)).is_err());
        assert!(QuadExt::new(int(0), int(1), BigInt::from(12)).is_err());
        assert!(QuadExt::new(int(0), int(1), BigInt::from(0)).is_err());
        assert!(QuadExt::new(int(0), int(1), BigInt::from(-3)).is_ok());
    }

    #[test]
    fn mixed_fields_are_an_error() {
        let a = QuadExt::sqrt(BigInt::from(2)).unwrap();
        let b = QuadExt::sqrt(BigInt::from(3)).unwrap();
        assert!(matches!(a.checked_add(&b), Err(ArithError::FieldMismatch(..))));
        assert!(!a.compatible(&b));
        // rationals embed in either
        assert!(a.checked_add(&QuadExt::one()).is_ok());
    }

    #[test]
    fn irrational_parts_cancel_to_rational() {
        let a = q19(int(1), int(1));
        let s = a.clone() + a.conjugate();
        assert!(s.is_rational());
        assert_eq!(s, QuadExt::rational(int(2)));
    }

    #[test]
    fn roots_of_the_six_line_quadratic() {
        // 2t^2 - 14t + 15 has roots 7/2 +- sqrt(19)/2
        let (r1, r2) = quadratic_roots(&int(2), &int(-14), &int(15)).unwrap();
        assert_eq!(r1, q19(rat(7, 2), rat(1, 2)));
        assert_eq!(r2, q19(rat(7, 2), rat(-1, 2)));
        assert!(quadratic_roots(&int(1), &int(0), &int(-1)).is_none());
    }

    #[test]
    fn square_free_parts() {
        assert_eq!(square_free_decompose(&BigInt::from(76)), (BigInt::from(2), BigInt::from(19)));
        assert_eq!(square_free_decompose(&BigInt::from(-12)), (BigInt::from(2), BigInt::from(-3)));
        assert_eq!(square_free_decompose(&BigInt::from(49)), (BigInt::from(7), BigInt::from(1)));
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(q19(rat(7, 2), rat(1, 2)).render(), "(7/2+1/2*sqrt(19))");
        assert_eq!(q19(int(0), int(-1)).render(), "(-sqrt(19))");
        assert_eq!(QuadExt::rational(rat(-3, 4)).render(), "-3/4");
    }
}
