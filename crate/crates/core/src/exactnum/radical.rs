use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::exactnum::Rat;

/// A real number `sign * sqrt(radicand)` with a rational radicand.
///
/// Closed under multiplication. Addition is only defined between values
/// sharing a radicand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqrtRat {
    sign: i8,
    radicand: Rat,
}

impl SqrtRat {
    pub fn zero() -> Self {
        SqrtRat { sign: 0, radicand: Rat::zero() }
    }

    pub fn one() -> Self {
        SqrtRat { sign: 1, radicand: Rat::one() }
    }

    pub fn new(sign: i8, radicand: Rat) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::Domain(format!("negative radicand {radicand}")));
        }
        if !(-1..=1).contains(&sign) {
            return Err(Error::Domain(format!("sign must be -1, 0 or 1, got {sign}")));
        }
        if radicand.is_zero() || sign == 0 {
            return Ok(SqrtRat::zero());
        }
        Ok(SqrtRat { sign, radicand })
    }

    /// `+sqrt(q)`.
    pub fn sqrt_of(q: Rat) -> Result<Self> {
        SqrtRat::new(1, q)
    }

    /// The rational `r` itself, as `sign(r) * sqrt(r^2)`.
    pub fn from_rat(r: &Rat) -> Self {
        SqrtRat { sign: r.signum(), radicand: r * r }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &Rat {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Exact square of the value.
    pub fn square(&self) -> Rat {
        self.radicand.clone()
    }

    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * self.radicand.to_f64().sqrt()
    }

    /// Sum of two values on the same radical; anything else leaves the type.
    pub fn checked_add(&self, rhs: &SqrtRat) -> Result<SqrtRat> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        // s1*sqrt(q1) + s2*sqrt(q2) stays on a single radical iff q1/q2 is a
        // rational square.
        let ratio = &rhs.radicand / &self.radicand;
        let Some(root) = ratio.exact_sqrt() else {
            return Err(Error::IncompatibleRadicals(format!("{self} + {rhs}")));
        };
        let factor = Rat::from(self.sign as i64) + Rat::from(rhs.sign as i64) * root;
        Ok(SqrtRat::from_rat(&factor) * self.abs())
    }

    pub fn abs(&self) -> SqrtRat {
        if self.is_zero() {
            SqrtRat::zero()
        } else {
            SqrtRat { sign: 1, radicand: self.radicand.clone() }
        }
    }

    pub fn neg(&self) -> SqrtRat {
        SqrtRat { sign: -self.sign, radicand: self.radicand.clone() }
    }
}

impl Mul for &SqrtRat {
    type Output = SqrtRat;
    fn mul(self, rhs: &SqrtRat) -> SqrtRat {
        let sign = self.sign * rhs.sign;
        if sign == 0 {
            return SqrtRat::zero();
        }
        SqrtRat { sign, radicand: &self.radicand * &rhs.radicand }
    }
}

impl Mul for SqrtRat {
    type Output = SqrtRat;
    fn mul(self, rhs: SqrtRat) -> SqrtRat {
        &self * &rhs
    }
}

impl fmt::Display for SqrtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            s => {
                let prefix = if s < 0 { "-" } else { "" };
                match self.radicand.exact_sqrt() {
                    Some(r) => write!(f, "{prefix}{r}"),
                    None => write!(f, "{prefix}sqrt({})", self.radicand),
                }
            }
        }
    }
}

impl fmt::Debug for SqrtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `coeff * pi^pi_power * sqrt(pi)^pi_half_power`, with `pi_half_power` in
/// {0, 1}. Gamma values at half-integers and the 1/pi prefactors that
/// cancel them live here, so those identities are decided exactly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PiRadical {
    coeff: Rat,
    pi_power: i32,
    pi_half_power: u8,
}

impl PiRadical {
    pub fn new(coeff: Rat, pi_power: i32, pi_half_power: u8) -> Self {
        assert!(pi_half_power <= 1, "pi_half_power must be 0 or 1");
        if coeff.is_zero() {
            return PiRadical::rational(Rat::zero());
        }
        PiRadical { coeff, pi_power, pi_half_power }
    }

    pub fn rational(coeff: Rat) -> Self {
        PiRadical { coeff, pi_power: 0, pi_half_power: 0 }
    }

    /// `coeff * sqrt(pi)`.
    pub fn sqrt_pi_times(coeff: Rat) -> Self {
        PiRadical::new(coeff, 0, 1)
    }

    /// `pi^power`.
    pub fn pi_pow(power: i32) -> Self {
        PiRadical::new(Rat::one(), power, 0)
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn pi_half_power(&self) -> u8 {
        self.pi_half_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Lossless conversion when no pi content remains.
    pub fn to_rat(&self) -> Option<Rat> {
        (self.pi_power == 0 && self.pi_half_power == 0).then(|| self.coeff.clone())
    }

    pub fn recip(&self) -> Result<PiRadical> {
        let coeff = self.coeff.recip()?;
        // 1/sqrt(pi) = sqrt(pi) / pi
        let (pi_power, half) = if self.pi_half_power == 1 { (-self.pi_power - 1, 1) } else { (-self.pi_power, 0) };
        Ok(PiRadical::new(coeff, pi_power, half))
    }

    pub fn checked_div(&self, rhs: &PiRadical) -> Result<PiRadical> {
        Ok(self * &rhs.recip()?)
    }

    pub fn square(&self) -> PiRadical {
        self * self
    }

    pub fn scale(&self, r: &Rat) -> PiRadical {
        PiRadical::new(&self.coeff * r, self.pi_power, self.pi_half_power)
    }

    /// Sum of two values with identical pi content.
    pub fn checked_add(&self, rhs: &PiRadical) -> Result<PiRadical> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_power != rhs.pi_power || self.pi_half_power != rhs.pi_half_power {
            return Err(Error::IncompatibleRadicals(format!("{self} + {rhs}")));
        }
        Ok(PiRadical::new(&self.coeff + &rhs.coeff, self.pi_power, self.pi_half_power))
    }

    pub fn to_f64(&self) -> f64 {
        let pi = std::f64::consts::PI;
        self.coeff.to_f64() * pi.powi(self.pi_power) * if self.pi_half_power == 1 { pi.sqrt() } else { 1.0 }
    }
}

impl Mul for &PiRadical {
    type Output = PiRadical;
    fn mul(self, rhs: &PiRadical) -> PiRadical {
        let half = self.pi_half_power + rhs.pi_half_power;
        let pi_power = self.pi_power + rhs.pi_power + i32::from(half / 2);
        PiRadical::new(&self.coeff * &rhs.coeff, pi_power, half % 2)
    }
}

impl Mul for PiRadical {
    type Output = PiRadical;
    fn mul(self, rhs: PiRadical) -> PiRadical {
        &self * &rhs
    }
}

impl From<Rat> for PiRadical {
    fn from(r: Rat) -> Self {
        PiRadical::rational(r)
    }
}

impl fmt::Display for PiRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.pi_power != 0 {
            write!(f, "*pi^{}", self.pi_power)?;
        }
        if self.pi_half_power == 1 {
            write!(f, "*sqrt(pi)")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PiRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
