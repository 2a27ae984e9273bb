use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::{Field, Rational};
use super::uni::UniPoly;
use super::ArithError;

/// Element of the rational function field Q(t), kept as `num/den` with
/// coprime parts and monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly<Rational>,
    den: UniPoly<Rational>,
}

impl RatFunc {
    pub fn new(num: UniPoly<Rational>, den: UniPoly<Rational>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() { (num, den) } else { (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap()) };
        let l = d.lead().unwrap().clone();
        if !l.is_one() {
            let inv = l.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Self { num: n, den: d }
    }

    pub fn poly(p: UniPoly<Rational>) -> Self {
        Self::new(p, UniPoly::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::poly(UniPoly::x())
    }

    pub fn num(&self) -> &UniPoly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Value at `t = x`, `None` at a pole.
    pub fn eval<F: Field>(&self, x: &F) -> Option<F> {
        let lift = |p: &UniPoly<Rational>| p.map(F::from_rational).eval(x);
        lift(&self.den).inverse().map(|inv| lift(&self.num) * &inv)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self { num: UniPoly::zero(), den: UniPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self { num: UniPoly::one(), den: UniPoly::one() }
    }
}

impl Neg for RatFunc {
    type Output = Self;

    fn neg(self) -> Self {
        Self { num: -&self.num, den: self.den }
    }
}

fn add_ref(a: &RatFunc, b: &RatFunc) -> RatFunc {
    if a.den == b.den {
        return RatFunc::new(&a.num + &b.num, a.den.clone());
    }
    RatFunc::new(&(&a.num * &b.den) + &(&b.num * &a.den), &a.den * &b.den)
}

fn mul_ref(a: &RatFunc, b: &RatFunc) -> RatFunc {
    if a.is_zero() || b.is_zero() {
        return RatFunc::zero();
    }
    RatFunc::new(&a.num * &b.num, &a.den * &b.den)
}

impl Add for RatFunc {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        add_ref(&self, &rhs)
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = Self;
    fn add(self, rhs: &'a RatFunc) -> Self {
        add_ref(&self, rhs)
    }
}

impl Sub for RatFunc {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        add_ref(&self, &-rhs)
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = Self;
    fn sub(self, rhs: &'a RatFunc) -> Self {
        add_ref(&self, &-rhs.clone())
    }
}

impl Mul for RatFunc {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        mul_ref(&self, &rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = Self;
    fn mul(self, rhs: &'a RatFunc) -> Self {
        mul_ref(&self, rhs)
    }
}

impl Field for RatFunc {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }

    fn from_rational(r: &Rational) -> Self {
        Self::poly(UniPoly::constant(r.clone()))
    }

    fn render(&self) -> String {
        format!("[{self}]")
    }

    fn has_minus_sign(&self) -> bool {
        false
    }

    fn as_rational(&self) -> Option<Rational> {
        (self.den.is_one() && self.num.degree().unwrap_or(0) == 0).then(|| self.num.coeff(0))
    }

    fn from_parts(p: Rational, sqrt_part: Option<(Rational, BigInt)>) -> Result<Self, ArithError> {
        match sqrt_part {
            None => Ok(Self::from_rational(&p)),
            Some(_) => Err(ArithError::IrrationalInRationalField),
        }
    }
}
