use std::fmt;

use crate::error::{domain, Error, Result};
use crate::exactnum::Rat;

/// Truncated formal power series in `t` with rational coefficients.
///
/// Holds the coefficients of `t^0 .. t^(order-1)`; everything from
/// `t^order` on is unknown and every ring operation truncates there.
#[derive(Clone, PartialEq, Eq)]
pub struct FSeries {
    coeffs: Vec<Rat>,
}

impl FSeries {
    pub fn zero(order: usize) -> Self {
        FSeries { coeffs: vec![Rat::zero(); order] }
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = FSeries::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// The series `t` itself.
    pub fn variable(order: usize) -> Self {
        let mut s = FSeries::zero(order);
        if order > 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    /// Builds from leading coefficients, padding with zeros or truncating
    /// to `order`.
    pub fn from_coeffs(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order, Rat::zero());
        FSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Result<&Rat> {
        self.coeffs
            .get(k)
            .ok_or_else(|| domain(format!("coefficient t^{k} is beyond truncation order {}", self.order())))
    }

    fn check_order(&self, rhs: &FSeries) {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
    }

    pub fn add(&self, rhs: &FSeries) -> FSeries {
        self.check_order(rhs);
        FSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, rhs: &FSeries) -> FSeries {
        self.check_order(rhs);
        FSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scalar_mul(&self, c: &Rat) -> FSeries {
        FSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &FSeries) -> FSeries {
        self.check_order(rhs);
        let n = self.order();
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        FSeries { coeffs: out }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<FSeries> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain("series with zero constant term is not invertible".into()));
        }
        let inv0 = c0.recip()?;
        let mut out: Vec<Rat> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-(acc * &inv0));
        }
        Ok(FSeries { coeffs: out })
    }

    pub fn div(&self, rhs: &FSeries) -> Result<FSeries> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// Integer power; negative exponents invert first.
    pub fn int_pow(&self, exp: i64) -> Result<FSeries> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = FSeries::constant(Rat::one(), self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Term-by-term derivative. The result is known one order less.
    pub fn derivative(&self) -> FSeries {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, a)| a * Rat::from(k as u64)).collect();
        FSeries { coeffs }
    }

    /// `self(inner(t))`; `inner` must have a zero constant term.
    pub fn compose(&self, inner: &FSeries) -> Result<FSeries> {
        self.check_order(inner);
        if inner.order() > 0 && !inner.coeffs[0].is_zero() {
            return Err(domain("inner series of a composition must have zero constant term"));
        }
        let n = self.order();
        let mut acc = FSeries::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            if n > 0 {
                acc.coeffs[0] += c;
            }
        }
        Ok(acc)
    }

    /// Evaluates `poly(inner(t))` for a polynomial given by its coefficient
    /// list, whatever its degree.
    pub fn compose_poly(poly: &[Rat], inner: &FSeries) -> Result<FSeries> {
        if inner.order() > 0 && !inner.coeffs[0].is_zero() {
            return Err(domain("inner series of a composition must have zero constant term"));
        }
        let n = inner.order();
        let mut acc = FSeries::zero(n);
        for c in poly.iter().rev() {
            acc = acc.mul(inner);
            if n > 0 {
                acc.coeffs[0] += c;
            }
        }
        Ok(acc)
    }
}

impl fmt::Debug for FSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().enumerate().map(|(k, c)| format!("{c}*t^{k}")).collect();
        write!(f, "{} + O(t^{})", terms.join(" + "), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64], order: usize) -> FSeries {
        FSeries::from_coeffs(v.iter().map(|&x| Rat::from(x)).collect(), order)
    }

    #[test]
    fn product_truncates() {
        let p = s(&[1, 1], 3).mul(&s(&[1, -1], 3));
        assert_eq!(p, s(&[1, 0, -1], 3));
        let p = s(&[1, 1], 2).mul(&s(&[1, 1], 2));
        assert_eq!(p, s(&[1, 2], 2));
    }

    #[test]
    fn negative_power_matches_geometric_oracle() {
        // (1 - t/4)^(-2) = sum (k+1) (t/4)^k
        let base = FSeries::from_coeffs(vec![Rat::one(), Rat::frac(-1, 4)], 8);
        let got = base.int_pow(-2).unwrap();
        for k in 0..8u32 {
            let expect = Rat::from(k as i64 + 1) / Rat::from(4).pow(k as i64).unwrap();
            assert_eq!(got.coefficient(k as usize).unwrap(), &expect);
        }
        assert_eq!(got.coeffs()[..3], [Rat::one(), Rat::frac(1, 2), Rat::frac(3, 16)]);
    }

    #[test]
    fn inverse_requires_unit() {
        assert!(s(&[0, 1], 4).inverse().is_err());
        assert!(s(&[0, 1], 4).int_pow(-1).is_err());
        assert!(s(&[1, 1], 4).div(&s(&[0, 2], 4)).is_err());
        let x = s(&[2, 3, 5], 5);
        assert_eq!(x.mul(&x.inverse().unwrap()), FSeries::constant(Rat::one(), 5));
    }

    #[test]
    fn derivative_and_coefficient() {
        let d = s(&[7, 1, 2, 3], 4).derivative();
        assert_eq!(d, s(&[1, 4, 9], 3));
        assert!(d.coefficient(3).is_err());
    }

    #[test]
    fn compose_rejects_constant_inner() {
        assert!(s(&[1, 1], 3).compose(&s(&[1, 1], 3)).is_err());
        // exp-free check: (1+u)^2 with u = t + t^2 -> 1 + 2t + 3t^2 + 2t^3
        let f = s(&[1, 2, 1], 4);
        let g = s(&[0, 1, 1], 4);
        assert_eq!(f.compose(&g).unwrap(), s(&[1, 2, 3, 2], 4));
    }
}
