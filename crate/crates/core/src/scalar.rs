//! Exact rational scalars.
//!
//! Every array entry, transform coefficient and form value is a [`Scalar`].
//! Values are kept in canonical reduced form, so structural equality is
//! numeric equality and the text serialization is unique:
//! integers print as optionally signed decimal digits, everything else as
//! `p/q` with `q > 1`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// `numerator / denominator`, reduced. Fails on a zero denominator.
    pub fn ratio(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, Error> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(BigRational::new(numerator.into(), den)))
    }

    pub fn from_integer(value: BigInt) -> Self {
        Scalar(BigRational::from_integer(value))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// `(-1)^k` as a scalar.
    pub fn sign_power(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }

    /// Exact division; `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        if rhs.is_zero() {
            None
        } else {
            Some(Scalar(&self.0 / &rhs.0))
        }
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn signum(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(value)))
    }
}

impl From<i32> for Scalar {
    fn from(value: i32) -> Self {
        Scalar::from(i64::from(value))
    }
}

impl From<u64> for Scalar {
    fn from(value: u64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(value)))
    }
}

impl From<BigInt> for Scalar {
    fn from(value: BigInt) -> Self {
        Scalar::from_integer(value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `[-+]digits` or `[-+]digits/digits`. Non-canonical input
    /// such as `4/6` is accepted and reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        match text.split_once('/') {
            None => parse_integer(text).map(Scalar::from_integer).ok_or_else(bad),
            Some((p, q)) => {
                let p = parse_integer(p).ok_or_else(bad)?;
                if q.starts_with(['-', '+']) {
                    return Err(bad());
                }
                let q = parse_integer(q).ok_or_else(bad)?;
                Scalar::ratio(p, q)
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar($trait::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($trait::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                Scalar($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

binary_op!(Add, add);
binary_op!(Sub, sub);
binary_op!(Mul, mul);
// Panics on a zero divisor, like integer division; use `checked_div` when
// the divisor is data-dependent.
binary_op!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

/// Parses a comma-separated list of scalars, e.g. `"1,-1,3/2"`.
/// The empty string parses as the empty list.
pub fn parse_list(text: &str) -> Result<Vec<Scalar>, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(str::parse).collect()
}

/// Joins scalars with commas in canonical form.
pub fn format_list(values: &[Scalar]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Shorthand for building integer scalar vectors in tests and fixtures.
pub fn ints(values: &[i64]) -> Vec<Scalar> {
    values.iter().copied().map(Scalar::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_serialization() {
        assert_eq!(Scalar::from(-13).to_string(), "-13");
        assert_eq!(Scalar::ratio(4, 6).unwrap().to_string(), "2/3");
        assert_eq!(Scalar::ratio(3, -6).unwrap().to_string(), "-1/2");
        assert_eq!(Scalar::ratio(8, 4).unwrap().to_string(), "2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1.5", "1/0", "a", "1/-2", "--1", "1/", "/2"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad}");
        }
        assert_eq!("+7".parse::<Scalar>().unwrap(), Scalar::from(7));
        assert_eq!("-10/4".parse::<Scalar>().unwrap().to_string(), "-5/2");
    }

    #[test]
    fn denominator_positive_after_arithmetic() {
        let x = Scalar::ratio(1, 3).unwrap() - Scalar::ratio(1, 2).unwrap();
        assert_eq!(x.to_string(), "-1/6");
        assert!(x.denominator() > &BigInt::zero());
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), None);
    }

    #[test]
    fn list_helpers() {
        assert_eq!(parse_list("3,4,-1,-2").unwrap(), ints(&[3, 4, -1, -2]));
        assert!(parse_list("").unwrap().is_empty());
        assert_eq!(format_list(&ints(&[1, -1])), "1,-1");
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in -10_000i64..10_000, q in 1i64..500) {
            let x = Scalar::ratio(p, q).unwrap();
            let back: Scalar = x.to_string().parse().unwrap();
            prop_assert_eq!(&back, &x);
            // canonical: the printed form never has a common factor
            let g = num_integer::Integer::gcd(x.numerator(), x.denominator());
            prop_assert_eq!(g, BigInt::one());
        }

        #[test]
        fn field_laws(a in -50i64..50, b in -50i64..50, c in 1i64..50) {
            let (a, b, c) = (Scalar::from(a), Scalar::ratio(b, 7).unwrap(), Scalar::from(c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&(&a * &c) / &c, a.clone());
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        }
    }
}
