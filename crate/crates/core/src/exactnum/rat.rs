use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
///
/// Displays and serializes as `"num/den"`, integers included (`"3/1"`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    /// `num/den` for machine integers; panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Rat::new(num, den).expect("zero denominator")
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Integer value if this is an integer that fits in an `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// The value as a nonpositive machine integer magnitude, if it is one.
    pub fn nonpositive_integer(&self) -> Option<u64> {
        match self.to_i64() {
            Some(v) if v <= 0 => Some(v.unsigned_abs()),
            _ => None,
        }
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rat(self.0.recip()))
        }
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rat(&self.0 / &rhs.0))
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Rat> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        let e = u32::try_from(exp).map_err(|_| Error::Domain(format!("exponent {exp} too large")))?;
        Ok(Rat(num_traits::Pow::pow(&self.0, e)))
    }

    /// Square root when both numerator and denominator are perfect squares.
    pub fn exact_sqrt(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let n = self.0.numer().magnitude();
        let d = self.0.denom().magnitude();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(Rat(BigRational::new(rn.into(), rd.into())))
        } else {
            None
        }
    }

    /// Nearest double (correctly rounded by the underlying ratio conversion,
    /// with a fallback for values outside the `f64` range).
    pub fn to_f64(&self) -> f64 {
        match self.0.to_f64() {
            Some(v) if v.is_finite() => v,
            _ => {
                let s = if self.is_negative() { -1.0 } else { 1.0 };
                s * (ln_biguint(self.0.numer().magnitude()) - ln_biguint(self.0.denom().magnitude())).exp()
            }
        }
    }

    /// Natural logarithm computed as `ln(num) - ln(den)` on doubles.
    pub fn ln(&self) -> Result<f64> {
        if self.signum() <= 0 {
            return Err(Error::Domain(format!("logarithm of nonpositive value {self}")));
        }
        Ok(ln_biguint(self.0.numer().magnitude()) - ln_biguint(self.0.denom().magnitude()))
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

/// `ln` of an arbitrarily large unsigned integer; values past 2^1000 are
/// scaled down to a 64-bit mantissa first.
pub(crate) fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let mantissa = (x >> shift).to_f64().expect("64-bit mantissa");
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<i32> for Rat {
    fn from(v: i32) -> Self {
        Rat::from(v as i64)
    }
}

impl From<u32> for Rat {
    fn from(v: u32) -> Self {
        Rat::from(v as i64)
    }
}

impl From<u64> for Rat {
    fn from(v: u64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<usize> for Rat {
    fn from(v: usize) -> Self {
        Rat::from(v as u64)
    }
}

impl From<BigInt> for Rat {
    fn from(v: BigInt) -> Self {
        Rat::from_bigint(v)
    }
}

impl From<BigRational> for Rat {
    fn from(v: BigRational) -> Self {
        Rat(v)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `"a/b"` or a bare integer `"a"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rat::new(n, d)
            }
            None => Ok(Rat::from_bigint(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// `/` panics on a zero divisor like the integer types do; use
// `Rat::checked_div` where the divisor may vanish.
impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        self.checked_div(&rhs).expect("Rat division by zero")
    }
}
impl Div<&Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self.checked_div(rhs).expect("Rat division by zero")
    }
}
impl Div<Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        self.checked_div(&rhs).expect("Rat division by zero")
    }
}
impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self.checked_div(rhs).expect("Rat division by zero")
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign<Rat> for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        self.0 *= rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && self.0.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rat::from(*other)))
    }
}
