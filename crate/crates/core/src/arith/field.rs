use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Exact coefficient field.
///
/// Everything above the arithmetic layer (polynomials, linear algebra, the
/// cocycle solver) is generic over this trait so the same code runs over
/// `Rational`, over a quadratic field `QuadExt`, and over the rational
/// function field `RatFunc` used by the weight scanner.
pub trait Field:
    Clone
    + Eq
    + Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_rational(r: &Rational) -> Self;

    /// Whether `self` and `other` live in a common field. Elements of
    /// different quadratic extensions are not compatible.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    /// Canonical coefficient token used by the polynomial text format.
    fn render(&self) -> String;

    /// True when the canonical rendering should pull out a leading minus sign.
    fn has_minus_sign(&self) -> bool;

    /// The value as a rational number, if it is one.
    fn as_rational(&self) -> Option<Rational>;

    /// Builds `p + q*sqrt(d)` from parsed parts. Fields that cannot represent
    /// the square root reject it.
    fn from_parts(p: Rational, sqrt_part: Option<(Rational, BigInt)>) -> Result<Self, ArithError>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.clone() * &inv)
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn render(&self) -> String {
        render_rational(self)
    }

    fn has_minus_sign(&self) -> bool {
        Signed::is_negative(self)
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn from_parts(p: Rational, sqrt_part: Option<(Rational, BigInt)>) -> Result<Self, ArithError> {
        match sqrt_part {
            None => Ok(p),
            Some(_) => Err(ArithError::IrrationalInRationalField),
        }
    }
}

/// `p/q` or `p` when the denominator is one.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or an integer. Decimal points and exponents are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let bad = || ArithError::MalformedRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let int = |t: &str, allow_sign: bool| -> Result<BigInt, ArithError> {
        let digits = if allow_sign {
            t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t)
        } else {
            t
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    let n = int(num, true)?;
    let d = match den {
        Some(d) => int(d, false)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(ArithError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("-2/3").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        assert_eq!(parse_rational("+5").unwrap(), int(5));
    }

    #[test]
    fn rejects_floats_and_garbage() {
        for s in ["1.5", "1e3", "", "/3", "2/", "2/-3", "abc", "0x10"] {
            assert!(parse_rational(s).is_err(), "{s} should be rejected");
        }
        assert!(matches!(parse_rational("1/0"), Err(ArithError::ZeroDenominator(_))));
    }

    #[test]
    fn renders_lowest_terms() {
        assert_eq!(render_rational(&rat(14, 6)), "7/3");
        assert_eq!(render_rational(&rat(-4, 2)), "-2");
        assert_eq!(render_rational(&rat(0, 5)), "0");
    }
}
